#include <canonram/errors.hpp>
#include <canonram/io.hpp>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace canonram {

namespace {

/// Yields the whitespace-split tokens of each non-blank, non-comment line.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;) tokens.push_back(t);
            if (tokens.empty() || tokens.front().front() == '#') continue;
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return line_no_; }

    std::vector<std::string> expect(std::size_t count, const char* what) {
        std::vector<std::string> t;
        if (!next(t)) throw ParseError(line_ + 1, std::string("unexpected end of input, expected ") + what);
        if (t.size() != count)
            throw ParseError(line_no_, fmt::format("expected {} fields ({}), found {}", count, what, t.size()));
        line_ = line_no_;
        return t;
    }

private:
    std::istream& in_;
    std::size_t line_no_ = 0;
    std::size_t line_ = 0;
};

std::uint64_t parse_uint(const std::string& s, std::size_t line) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError(line, "not a non-negative integer: " + s);
    return v;
}

Vertex parse_vertex(const std::string& s, Vertex n, std::size_t line) {
    const auto v = parse_uint(s, line);
    if (v < 1 || v > n) throw ParseError(line, fmt::format("vertex {} outside 1..{}", s, n));
    return static_cast<Vertex>(v);
}

double parse_real(const std::string& s, std::size_t line) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) throw ParseError(line, "not a finite real: " + s);
    return v;
}

void expect_eof(LineReader& r) {
    std::vector<std::string> t;
    if (r.next(t)) throw ParseError(r.line(), "trailing content");
}

struct EdgeList {
    Vertex n = 0;
    std::vector<Edge> edges;
    std::vector<Colour> colours;
    std::vector<std::size_t> lines;
};

EdgeList read_edge_list(std::istream& in, bool coloured) {
    LineReader r(in);
    auto header = r.expect(2, "n m");
    EdgeList out;
    const auto n64 = parse_uint(header[0], r.line());
    if (n64 > 0xFFFFFFFFULL) throw ParseError(r.line(), "vertex count too large");
    out.n = static_cast<Vertex>(n64);
    const auto m = parse_uint(header[1], r.line());
    if (m > static_cast<std::uint64_t>(out.n) * (out.n > 0 ? out.n - 1 : 0) / 2)
        throw ParseError(r.line(), "more edges than vertex pairs");
    for (std::uint64_t k = 0; k < m; ++k) {
        auto t = r.expect(coloured ? 3 : 2, coloured ? "u v c" : "u v");
        const Vertex u = parse_vertex(t[0], out.n, r.line());
        const Vertex v = parse_vertex(t[1], out.n, r.line());
        if (u == v) throw ParseError(r.line(), "loop at vertex " + t[0]);
        out.edges.emplace_back(u, v);
        if (coloured) out.colours.push_back(parse_uint(t[2], r.line()));
        out.lines.push_back(r.line());
    }
    expect_eof(r);

    // Sort, remembering source lines, and reject duplicates.
    std::vector<std::size_t> order(out.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return out.edges[a] < out.edges[b]; });
    EdgeList sorted;
    sorted.n = out.n;
    for (std::size_t k = 0; k < order.size(); ++k) {
        const auto i = order[k];
        if (k > 0 && out.edges[i] == sorted.edges.back()) {
            const auto later = std::max(out.lines[i], sorted.lines.back());
            throw ParseError(later, fmt::format("duplicate edge {} {}", out.edges[i].u, out.edges[i].v));
        }
        sorted.edges.push_back(out.edges[i]);
        sorted.lines.push_back(out.lines[i]);
        if (coloured) sorted.colours.push_back(out.colours[i]);
    }
    return sorted;
}

template <class Fn>
auto with_input(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return fn(in);
}

template <class Fn>
void with_output(const std::filesystem::path& path, Fn&& fn) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    fn(out);
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

OrderedGraph read_graph(std::istream& in) {
    EdgeList list = read_edge_list(in, false);
    return OrderedGraph(list.n, std::move(list.edges));
}

void write_graph(std::ostream& out, const OrderedGraph& g) {
    fmt::print(out, "{} {}\n", g.n(), g.edge_count());
    for (const Edge& e : g.edges()) fmt::print(out, "{} {}\n", e.u, e.v);
}

EdgeColouring read_colouring(std::istream& in, std::shared_ptr<const OrderedGraph> host) {
    EdgeList list = read_edge_list(in, true);
    if (list.n != host->n()) throw ParseError(1, fmt::format("colouring has n = {}, graph has {}", list.n, host->n()));
    for (std::size_t i = 0; i < list.edges.size(); ++i)
        if (!host->adjacent(list.edges[i].u, list.edges[i].v))
            throw ParseError(list.lines[i],
                             fmt::format("{} {} is not an edge of the graph", list.edges[i].u, list.edges[i].v));
    if (list.edges.size() != host->edge_count())
        throw ParseError(1, fmt::format("colouring covers {} of {} edges", list.edges.size(), host->edge_count()));
    // Both edge lists are sorted and equal, so ids line up.
    return EdgeColouring(std::move(host), std::move(list.colours));
}

EdgeColouring read_colouring(std::istream& in) {
    EdgeList list = read_edge_list(in, true);
    auto host = std::make_shared<const OrderedGraph>(list.n, list.edges);
    return EdgeColouring(std::move(host), std::move(list.colours));
}

void write_colouring(std::ostream& out, const EdgeColouring& phi) {
    const OrderedGraph& g = phi.host();
    fmt::print(out, "{} {}\n", g.n(), g.edge_count());
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) fmt::print(out, "{} {} {}\n", edges[i].u, edges[i].v, phi.of_id(i));
}

WeightedGraph read_weighted(std::istream& in) {
    LineReader r(in);
    const auto header = r.expect(1, "n");
    const auto n64 = parse_uint(header[0], r.line());
    if (n64 > 0xFFFFU) throw ParseError(r.line(), "vertex count too large");
    const auto n = static_cast<Vertex>(n64);
    WeightedGraph f(n);
    for (Vertex u = 1; u <= n; ++u) {
        for (Vertex v = u + 1; v <= n; ++v) {
            const auto t = r.expect(3, "u v w");
            if (parse_vertex(t[0], n, r.line()) != u || parse_vertex(t[1], n, r.line()) != v)
                throw ParseError(r.line(), fmt::format("expected pair {} {}", u, v));
            f.set(u, v, parse_real(t[2], r.line()));
        }
    }
    expect_eof(r);
    return f;
}

void write_weighted(std::ostream& out, const WeightedGraph& f) {
    fmt::print(out, "{}\n", f.n());
    for (Vertex u = 1; u <= f.n(); ++u)
        for (Vertex v = u + 1; v <= f.n(); ++v) fmt::print(out, "{} {} {}\n", u, v, f.at(u, v));
}

OrderedGraph load_graph(const std::filesystem::path& path) {
    return with_input(path, [](std::istream& in) { return read_graph(in); });
}

void save_graph(const std::filesystem::path& path, const OrderedGraph& g) {
    with_output(path, [&](std::ostream& out) { write_graph(out, g); });
}

EdgeColouring load_colouring(const std::filesystem::path& path, std::shared_ptr<const OrderedGraph> host) {
    return with_input(path, [&](std::istream& in) { return read_colouring(in, host); });
}

EdgeColouring load_colouring(const std::filesystem::path& path) {
    return with_input(path, [](std::istream& in) { return read_colouring(in); });
}

void save_colouring(const std::filesystem::path& path, const EdgeColouring& phi) {
    with_output(path, [&](std::ostream& out) { write_colouring(out, phi); });
}

WeightedGraph load_weighted(const std::filesystem::path& path) {
    return with_input(path, [](std::istream& in) { return read_weighted(in); });
}

void save_weighted(const std::filesystem::path& path, const WeightedGraph& f) {
    with_output(path, [&](std::ostream& out) { write_weighted(out, f); });
}

}  // namespace canonram
