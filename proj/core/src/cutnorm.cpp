#include <canonram/cutnorm.hpp>
#include <canonram/errors.hpp>
#include <canonram/random.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace canonram {

WeightedGraph::WeightedGraph(Vertex n) : n_(n), w_(static_cast<std::size_t>(n) * n, 0.0) {}

WeightedGraph WeightedGraph::constant(Vertex n, double c) {
    WeightedGraph f(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) f.set(u, v, c);
    return f;
}

WeightedGraph WeightedGraph::indicator(const OrderedGraph& g) {
    WeightedGraph f(g.n());
    for (const Edge& e : g.edges()) f.set(e.u, e.v, 1.0);
    return f;
}

void WeightedGraph::set(Vertex u, Vertex v, double w) {
    if (u == v) throw std::invalid_argument("WeightedGraph: diagonal weights are fixed at zero");
    if (u == 0 || v == 0 || u > n_ || v > n_) throw std::out_of_range("WeightedGraph: vertex out of range");
    if (!std::isfinite(w)) throw std::invalid_argument("WeightedGraph: weight must be finite");
    w_[index(u, v)] = w;
    w_[index(v, u)] = w;
}

bool WeightedGraph::within(double lo, double hi) const {
    return std::all_of(w_.begin(), w_.end(), [&](double x) { return x >= lo && x <= hi; });
}

bool WeightedGraph::is_indicator() const {
    return std::all_of(w_.begin(), w_.end(), [](double x) { return x == 0.0 || x == 1.0; });
}

double WeightedGraph::max_abs() const {
    double m = 0.0;
    for (double x : w_) m = std::max(m, std::abs(x));
    return m;
}

WeightedGraph WeightedGraph::operator-(const WeightedGraph& other) const {
    if (other.n_ != n_) throw std::invalid_argument("WeightedGraph: vertex counts differ");
    WeightedGraph out(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] = w_[i] - other.w_[i];
    return out;
}

WeightedGraph WeightedGraph::operator+(const WeightedGraph& other) const {
    if (other.n_ != n_) throw std::invalid_argument("WeightedGraph: vertex counts differ");
    WeightedGraph out(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] = w_[i] + other.w_[i];
    return out;
}

WeightedGraph WeightedGraph::scaled(double alpha) const {
    WeightedGraph out(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) out.w_[i] = alpha * w_[i];
    return out;
}

PatternGraph::PatternGraph(unsigned ell_, std::vector<std::pair<unsigned, unsigned>> edges_) : ell(ell_) {
    for (auto [u, v] : edges_) {
        if (u == v) throw std::invalid_argument("PatternGraph: loops are not allowed");
        if (u == 0 || v == 0 || u > ell || v > ell) throw std::invalid_argument("PatternGraph: vertex out of range");
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("PatternGraph: repeated edge");
}

PatternGraph PatternGraph::complete(unsigned ell) {
    std::vector<std::pair<unsigned, unsigned>> e;
    for (unsigned u = 1; u <= ell; ++u)
        for (unsigned v = u + 1; v <= ell; ++v) e.emplace_back(u, v);
    return PatternGraph(ell, std::move(e));
}

PatternGraph PatternGraph::cycle(unsigned ell) {
    if (ell < 3) throw std::invalid_argument("PatternGraph::cycle: need at least three vertices");
    std::vector<std::pair<unsigned, unsigned>> e;
    for (unsigned u = 1; u < ell; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(1, ell);
    return PatternGraph(ell, std::move(e));
}

double eval_e(const WeightedGraph& f, const VertexSet& u, const VertexSet& w) {
    long double s = 0.0L;
    for (Vertex a : u) {
        if (a > f.n()) throw std::out_of_range("eval_e: vertex out of range");
        for (Vertex b : w) {
            if (b > f.n()) throw std::out_of_range("eval_e: vertex out of range");
            if (a != b) s += f.at(a, b);
        }
    }
    return static_cast<double>(s);
}

// ---------------------------------------------------------------------------
// Cut-norm

double cutnorm_exact(const WeightedGraph& f) {
    const Vertex n = f.n();
    if (n > kCutnormExactMaxN)
        throw TooLarge("cutnorm_exact: n = " + std::to_string(n) + " exceeds guard of " +
                       std::to_string(kCutnormExactMaxN));
    if (n == 0) return 0.0;
    // col[w] = e_f(U, {w}); for fixed U the best W takes every positive
    // (or every negative) column.
    std::vector<long double> col(n, 0.0L);
    long double best = 0.0L;
    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t gray = 0;
    for (std::uint64_t k = 1; k < total; ++k) {
        const std::uint64_t next = k ^ (k >> 1);
        const auto flipped = static_cast<Vertex>(std::countr_zero(gray ^ next));
        const long double sign = (next >> flipped) & 1U ? 1.0L : -1.0L;
        const Vertex x = flipped + 1;
        for (Vertex w = 1; w <= n; ++w)
            if (w != x) col[w - 1] += sign * f.at(x, w);
        gray = next;
        long double pos = 0.0L;
        long double neg = 0.0L;
        for (long double c : col) (c > 0 ? pos : neg) += c;
        best = std::max({best, pos, -neg});
    }
    return static_cast<double>(best / (static_cast<long double>(n) * n));
}

double cutnorm_heuristic(const WeightedGraph& f, unsigned restarts, std::uint64_t seed) {
    if (restarts < 1) throw std::invalid_argument("cutnorm_heuristic: restarts must be at least 1");
    const Vertex n = f.n();
    if (n == 0) return 0.0;
    Rng rng(seed);
    long double best = 0.0L;
    std::vector<char> in_u(n + 1);
    std::vector<char> in_w(n + 1);
    std::vector<long double> sums(n + 1);

    // Sums over the chosen side; returns sign-selected set and its value.
    auto respond = [&](const std::vector<char>& from, std::vector<char>& to, int& sign) {
        for (Vertex b = 1; b <= n; ++b) {
            long double s = 0.0L;
            for (Vertex a = 1; a <= n; ++a)
                if (from[a] && a != b) s += f.at(a, b);
            sums[b] = s;
        }
        long double pos = 0.0L;
        long double neg = 0.0L;
        for (Vertex b = 1; b <= n; ++b) (sums[b] > 0 ? pos : neg) += sums[b];
        sign = pos >= -neg ? 1 : -1;
        for (Vertex b = 1; b <= n; ++b) to[b] = sign > 0 ? sums[b] > 0 : sums[b] < 0;
        return sign > 0 ? pos : -neg;
    };

    for (unsigned r = 0; r < restarts; ++r) {
        bool any = false;
        for (Vertex v = 1; v <= n; ++v) any |= (in_u[v] = bernoulli(rng, 0.5)) != 0;
        if (!any) in_u[1 + uniform_below(rng, n)] = 1;
        long double value = -1.0L;
        int sign = 1;
        for (;;) {
            const long double vw = respond(in_u, in_w, sign);
            // Re-choosing U against W with the same sign never lowers the value.
            for (Vertex a = 1; a <= n; ++a) {
                long double s = 0.0L;
                for (Vertex b = 1; b <= n; ++b)
                    if (in_w[b] && a != b) s += f.at(a, b);
                sums[a] = s;
            }
            long double vu = 0.0L;
            for (Vertex a = 1; a <= n; ++a) {
                in_u[a] = sign > 0 ? sums[a] > 0 : sums[a] < 0;
                if (in_u[a]) vu += sign * sums[a];
            }
            const long double cur = std::max(vw, vu);
            if (!(cur > value)) break;
            value = cur;
        }
        best = std::max(best, value);
    }
    return static_cast<double>(best / (static_cast<long double>(n) * n));
}

// ---------------------------------------------------------------------------
// Homomorphism densities

namespace {

struct HomSum {
    const WeightedGraph& f;
    std::vector<std::vector<unsigned>> back;  // back[i]: earlier positions adjacent to i
    std::vector<Vertex> tuple;

    long double recurse(unsigned pos, long double acc) {
        if (pos == tuple.size()) return acc;
        long double s = 0.0L;
        for (Vertex v = 1; v <= f.n(); ++v) {
            long double prod = acc;
            for (unsigned j : back[pos]) {
                prod *= tuple[j] == v ? 0.0L : static_cast<long double>(f.at(tuple[j], v));
                if (prod == 0.0L) break;
            }
            if (prod == 0.0L) continue;
            tuple[pos] = v;
            s += recurse(pos + 1, prod);
        }
        return s;
    }
};

}  // namespace

double hom_density(const WeightedGraph& f, const PatternGraph& h) {
    if (h.ell > kHomDensityMaxEll)
        throw TooLarge("hom_density: pattern has more than " + std::to_string(kHomDensityMaxEll) + " vertices");
    if (f.max_abs() > kHomDensityWeightCap) throw RangeViolation("hom_density: weight exceeds 1e6 in absolute value");
    const Vertex n = f.n();
    if (n == 0) return 0.0;
    const long double norm = std::pow(static_cast<long double>(n), static_cast<long double>(h.ell));

    if (h.ell >= 2 && h.is_complete() && f.is_indicator()) {
        std::vector<Edge> edges;
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v)
                if (f.at(u, v) == 1.0) edges.push_back({u, v});
        const auto count = count_cliques(OrderedGraph(n, std::move(edges)), h.ell);
        return static_cast<double>(static_cast<long double>(count) / norm);
    }

    HomSum sum{f, std::vector<std::vector<unsigned>>(h.ell), std::vector<Vertex>(h.ell, 0)};
    for (auto [u, v] : h.edges) sum.back[v - 1].push_back(u - 1);
    return static_cast<double>(sum.recurse(0, 1.0L) / norm);
}

LemmaCheck counting_lemma_check(const WeightedGraph& f, const WeightedGraph& g, const PatternGraph& h) {
    if (!f.within(0.0, 1.0) || !g.within(0.0, 1.0))
        throw RangeViolation("counting_lemma_check: weights must lie in [0, 1]");
    LemmaCheck out;
    out.lhs = std::abs(hom_density(f, h) - hom_density(g, h));
    out.rhs = 2.0 * static_cast<double>(h.edge_count()) * cutnorm_exact(f - g);
    out.holds = out.lhs <= out.rhs + kLemmaSlack;
    return out;
}

OrderedGraph sample_graph_from_weights(const WeightedGraph& d, std::uint64_t seed) {
    if (!d.within(0.0, 1.0)) throw RangeViolation("sample_graph_from_weights: weights must lie in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= d.n(); ++u)
        for (Vertex v = u + 1; v <= d.n(); ++v)
            if (bernoulli(rng, d.at(u, v))) edges.push_back({u, v});
    return OrderedGraph(d.n(), std::move(edges));
}

double weighted_degree(const WeightedGraph& f, Vertex v, const VertexSet& u) {
    long double s = 0.0L;
    for (Vertex x : u)
        if (x != v) s += f.at(v, x);
    return static_cast<double>(s);
}

DegreeLemmaResult degree_lemma_check(const WeightedGraph& f, const WeightedGraph& g, const VertexSet& u, double eps) {
    if (f.n() != g.n()) throw std::invalid_argument("degree_lemma_check: vertex counts differ");
    if (!u.empty() && u.max() > f.n()) throw std::out_of_range("degree_lemma_check: U leaves the vertex set");
    DegreeLemmaResult out;
    out.measured = cutnorm_exact(f - g);
    if (out.measured > eps + kLemmaSlack)
        throw HypothesisViolated("degree_lemma_check: cut-norm of f - g exceeds eps");
    const double root = std::cbrt(std::max(eps, 0.0));
    const double n = f.n();
    if (!(static_cast<double>(u.size()) > 2.0 * root * n))
        throw HypothesisViolated("degree_lemma_check: |U| must exceed 2 eps^{1/3} n");
    const double tol = root * static_cast<double>(u.size());
    for (Vertex v = 1; v <= f.n(); ++v)
        if (std::abs(weighted_degree(f, v, u) - weighted_degree(g, v, u)) > tol + kLemmaSlack) ++out.violations;
    out.bound = root * n;
    out.holds = static_cast<double>(out.violations) <= out.bound + kLemmaSlack;
    return out;
}

// ---------------------------------------------------------------------------
// 2-density

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    num = n / g;
    den = d / g;
}

std::string Rational::to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering Rational::operator<=>(const Rational& other) const {
    return static_cast<i128>(num) * other.den <=> static_cast<i128>(other.num) * den;
}

Rational two_density(const PatternGraph& h) {
    if (h.ell < 3) throw TooFewVertices("two_density: need at least three vertices");
    return Rational(static_cast<std::int64_t>(h.edge_count()) - 1, static_cast<std::int64_t>(h.ell) - 2);
}

bool is_strictly_balanced(const PatternGraph& h) {
    if (h.ell < 3) throw TooFewVertices("is_strictly_balanced: need at least three vertices");
    if (h.ell > kBalancedMaxEll)
        throw TooLarge("is_strictly_balanced: more than " + std::to_string(kBalancedMaxEll) + " vertices");
    const Rational whole = two_density(h);
    // Dropping edges only lowers the density, so induced subgraphs on proper
    // vertex subsets are the only candidates.
    const unsigned full = (1U << h.ell) - 1;
    for (unsigned mask = 1; mask < full; ++mask) {
        const int k = std::popcount(mask);
        if (k < 3) continue;
        std::int64_t e = 0;
        for (auto [u, v] : h.edges)
            if (((mask >> (u - 1)) & 1U) && ((mask >> (v - 1)) & 1U)) ++e;
        if (Rational(e - 1, k - 2) >= whole) return false;
    }
    return true;
}

}  // namespace canonram
