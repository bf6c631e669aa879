#include <canonram/adversaries.hpp>
#include <canonram/random.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace canonram {

void AdversarySpec::validate() const {
    if (kind == AdversaryKind::RandomR && r < 1) throw std::invalid_argument("RandomR needs r >= 1");
    if (kind == AdversaryKind::BoundedRandom) {
        if (lambda < 1) throw std::invalid_argument("BoundedRandom needs lambda >= 1");
        if (r < 1) throw std::invalid_argument("BoundedRandom needs a palette r >= 1");
    }
}

std::string to_string(AdversaryKind kind) {
    switch (kind) {
        case AdversaryKind::RandomR: return "random";
        case AdversaryKind::Injective: return "injective";
        case AdversaryKind::MinOrder: return "min";
        case AdversaryKind::MaxOrder: return "max";
        case AdversaryKind::GreedyProper: return "greedy";
        case AdversaryKind::BoundedRandom: return "bounded";
    }
    return "unknown";
}

AdversaryKind parse_adversary_kind(const std::string& name) {
    std::string s = name;
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
    if (s == "random" || s == "random_r" || s == "randomr") return AdversaryKind::RandomR;
    if (s == "injective") return AdversaryKind::Injective;
    if (s == "min" || s == "min_order" || s == "minorder") return AdversaryKind::MinOrder;
    if (s == "max" || s == "max_order" || s == "maxorder") return AdversaryKind::MaxOrder;
    if (s == "greedy" || s == "greedy_proper" || s == "greedyproper") return AdversaryKind::GreedyProper;
    if (s == "bounded" || s == "bounded_random" || s == "boundedrandom") return AdversaryKind::BoundedRandom;
    throw std::invalid_argument("unknown adversary kind '" + name + "'");
}

AdversarySpec parse_adversary_spec(const std::string& text, std::uint64_t seed) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (;;) {
        const auto colon = text.find(':', start);
        parts.push_back(text.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    AdversarySpec spec;
    spec.kind = parse_adversary_kind(parts[0]);
    spec.seed = seed;
    auto number = [&](std::size_t k) { return static_cast<std::uint64_t>(std::stoull(parts.at(k))); };
    if (spec.kind == AdversaryKind::RandomR && parts.size() > 1) spec.r = number(1);
    if (spec.kind == AdversaryKind::BoundedRandom) {
        if (parts.size() > 1) spec.lambda = number(1);
        if (parts.size() > 2) spec.r = number(2);
    }
    spec.validate();
    return spec;
}

namespace {

std::vector<Colour> greedy_proper(const OrderedGraph& g) {
    // used[v] holds the colours already present at v; a colour c is absent
    // at both endpoints iff it is in neither list.
    std::vector<std::vector<bool>> used(static_cast<std::size_t>(g.n()) + 1);
    std::vector<Colour> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        auto& a = used[e.u];
        auto& b = used[e.v];
        Colour c = 0;
        while ((c < a.size() && a[c]) || (c < b.size() && b[c])) ++c;
        for (auto* row : {&a, &b}) {
            if (row->size() <= c) row->resize(c + 1, false);
            (*row)[c] = true;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<Colour> bounded_random(const OrderedGraph& g, const AdversarySpec& spec, Rng& rng) {
    std::vector<std::unordered_map<Colour, std::uint64_t>> load(static_cast<std::size_t>(g.n()) + 1);
    std::vector<Colour> out;
    out.reserve(g.edge_count());
    Colour fresh = spec.r;
    for (const Edge& e : g.edges()) {
        Colour chosen = 0;
        bool placed = false;
        for (int attempt = 0; attempt < kBoundedRandomMaxDraws; ++attempt) {
            const Colour c = uniform_below(rng, spec.r);
            const auto a = load[e.u].find(c);
            const auto b = load[e.v].find(c);
            const std::uint64_t la = a == load[e.u].end() ? 0 : a->second;
            const std::uint64_t lb = b == load[e.v].end() ? 0 : b->second;
            if (la < spec.lambda && lb < spec.lambda) {
                chosen = c;
                placed = true;
                break;
            }
        }
        if (!placed) chosen = fresh++;
        ++load[e.u][chosen];
        ++load[e.v][chosen];
        out.push_back(chosen);
    }
    return out;
}

}  // namespace

EdgeColouring generate_colouring(std::shared_ptr<const OrderedGraph> g, const AdversarySpec& spec) {
    spec.validate();
    const OrderedGraph& graph = *g;
    std::vector<Colour> colours;
    colours.reserve(graph.edge_count());
    Rng rng(spec.seed);
    switch (spec.kind) {
        case AdversaryKind::RandomR:
            for (std::size_t id = 0; id < graph.edge_count(); ++id) colours.push_back(uniform_below(rng, spec.r));
            break;
        case AdversaryKind::Injective:
            for (std::size_t id = 0; id < graph.edge_count(); ++id) colours.push_back(id);
            break;
        case AdversaryKind::MinOrder:
            for (const Edge& e : graph.edges()) colours.push_back(e.u);
            break;
        case AdversaryKind::MaxOrder:
            for (const Edge& e : graph.edges()) colours.push_back(e.v);
            break;
        case AdversaryKind::GreedyProper: colours = greedy_proper(graph); break;
        case AdversaryKind::BoundedRandom: colours = bounded_random(graph, spec, rng); break;
    }
    return EdgeColouring(std::move(g), std::move(colours));
}

std::uint64_t max_colour_multiplicity(const EdgeColouring& phi) {
    const OrderedGraph& g = phi.host();
    const Bitset all = VertexSet::range(g.n()).mask(g.n());
    std::uint64_t best = 0;
    for (Vertex v = 1; v <= g.n(); ++v) best = std::max(best, max_colour_degree(phi, v, all));
    return best;
}

bool verify_properness(const EdgeColouring& phi) { return max_colour_multiplicity(phi) <= 1; }

}  // namespace canonram
