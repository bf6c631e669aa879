#include <canonram/colouring.hpp>
#include <canonram/errors.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace canonram {

// ---------------------------------------------------------------------------
// EdgeColouring

EdgeColouring::EdgeColouring(std::shared_ptr<const OrderedGraph> host, std::vector<Colour> colours)
    : host_(std::move(host)), colours_(std::move(colours)) {
    if (!host_) throw std::invalid_argument("EdgeColouring: null host graph");
    if (colours_.size() != host_->edge_count())
        throw std::invalid_argument("EdgeColouring: " + std::to_string(colours_.size()) + " colours for " +
                                    std::to_string(host_->edge_count()) + " edges");
}

Colour EdgeColouring::at(Vertex a, Vertex b) const {
    const auto id = host_->edge_id(a, b);
    if (!id) throw NotAClique("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    return colours_[*id];
}

std::optional<Colour> EdgeColouring::find(Vertex a, Vertex b) const {
    const auto id = host_->edge_id(a, b);
    if (!id) return std::nullopt;
    return colours_[*id];
}

std::vector<Colour> EdgeColouring::palette() const {
    std::vector<Colour> p(colours_);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
}

EdgeColouring EdgeColouring::relabelled_dense() const {
    std::unordered_map<Colour, Colour> ids;
    std::vector<Colour> out;
    out.reserve(colours_.size());
    for (Colour c : colours_) {
        const auto [it, fresh] = ids.try_emplace(c, static_cast<Colour>(ids.size()));
        out.push_back(it->second);
    }
    return EdgeColouring(host_, std::move(out));
}

EdgeColouring EdgeColouring::restricted_to(std::shared_ptr<const OrderedGraph> sub) const {
    std::vector<Colour> out;
    out.reserve(sub->edge_count());
    for (const Edge& e : sub->edges()) {
        const auto id = host_->edge_id(e.u, e.v);
        if (!id) throw std::invalid_argument("restricted_to: graph is not a subgraph of the host");
        out.push_back(colours_[*id]);
    }
    return EdgeColouring(std::move(sub), std::move(out));
}

// ---------------------------------------------------------------------------
// Patterns

std::string_view to_string(PatternTag tag) noexcept {
    switch (tag) {
        case PatternTag::Monochromatic: return "mono";
        case PatternTag::Rainbow: return "rainbow";
        case PatternTag::MinColoured: return "min";
        case PatternTag::MaxColoured: return "max";
        case PatternTag::NonStrictMin: return "nonstrict_min";
        case PatternTag::NonStrictMax: return "nonstrict_max";
    }
    return "unknown";
}

namespace {
constexpr PatternTag kAllTags[] = {PatternTag::Monochromatic, PatternTag::Rainbow,      PatternTag::MinColoured,
                                   PatternTag::MaxColoured,   PatternTag::NonStrictMin, PatternTag::NonStrictMax};
}

std::string_view PatternSet::primary_name() const noexcept {
    for (int k = 0; k < 4; ++k)
        if (contains(kAllTags[k])) return canonram::to_string(kAllTags[k]);
    return "none";
}

std::string PatternSet::to_string() const {
    std::string out;
    for (auto t : kAllTags) {
        if (!contains(t)) continue;
        if (!out.empty()) out += '+';
        out += canonram::to_string(t);
    }
    return out.empty() ? "none" : out;
}

namespace {

void require_increasing(std::span<const Vertex> vertices) {
    for (std::size_t i = 1; i < vertices.size(); ++i)
        if (vertices[i - 1] >= vertices[i])
            throw std::invalid_argument("vertex tuple must be strictly increasing");
}

std::vector<Colour> clique_colours(const EdgeColouring& phi, std::span<const Vertex> vertices) {
    const std::size_t ell = vertices.size();
    std::vector<Colour> table(ell * ell, 0);
    for (std::size_t i = 0; i < ell; ++i)
        for (std::size_t j = i + 1; j < ell; ++j) table[i * ell + j] = phi.at(vertices[i], vertices[j]);
    return table;
}

}  // namespace

PatternSet classify_copy(const EdgeColouring& phi, std::span<const Vertex> vertices) {
    require_increasing(vertices);
    const std::size_t ell = vertices.size();
    const auto table = clique_colours(phi, vertices);
    return detail::classify_positions(ell, [&](std::size_t i, std::size_t j) { return table[i * ell + j]; });
}

CanonicalWitness make_witness(const EdgeColouring& phi, std::span<const Vertex> vertices) {
    CanonicalWitness w;
    w.vertices.assign(vertices.begin(), vertices.end());
    w.tags = classify_copy(phi, vertices);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            w.evidence.emplace_back(Edge(vertices[i], vertices[j]), phi.at(vertices[i], vertices[j]));
    return w;
}

bool verify_witness(const EdgeColouring& phi, const CanonicalWitness& w) {
    try {
        const PatternSet tags = classify_copy(phi, w.vertices);
        if (tags != w.tags || !tags.is_canonical()) return false;
        std::size_t k = 0;
        for (std::size_t i = 0; i < w.vertices.size(); ++i) {
            for (std::size_t j = i + 1; j < w.vertices.size(); ++j, ++k) {
                if (k >= w.evidence.size()) return false;
                const auto& [edge, colour] = w.evidence[k];
                if (edge != Edge(w.vertices[i], w.vertices[j]) || colour != phi.at(edge.u, edge.v)) return false;
            }
        }
        return k == w.evidence.size();
    } catch (const Error&) {
        return false;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

// ---------------------------------------------------------------------------
// Colour degrees

namespace {

void require_vertex(const EdgeColouring& phi, Vertex v) {
    if (v < 1 || v > phi.host().n()) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

template <class Accept>
std::uint64_t max_multiplicity(const EdgeColouring& phi, Vertex v, Accept&& accept) {
    const auto nb = phi.host().neighbours(v);
    const auto ids = phi.host().incident_edge_ids(v);
    std::vector<Colour> seen;
    seen.reserve(nb.size());
    for (std::size_t k = 0; k < nb.size(); ++k)
        if (accept(nb[k])) seen.push_back(phi.of_id(ids[k]));
    if (seen.empty()) return 0;
    std::sort(seen.begin(), seen.end());
    std::uint64_t best = 1;
    std::uint64_t run = 1;
    for (std::size_t k = 1; k < seen.size(); ++k) {
        run = seen[k] == seen[k - 1] ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

bool in_mask(const Bitset& mask, Vertex w) { return w < mask.size() && mask.test(w); }

}  // namespace

std::uint64_t colour_degree(const EdgeColouring& phi, Vertex v, const VertexSet& u, Colour c) {
    require_vertex(phi, v);
    std::uint64_t d = 0;
    for (Vertex w : u)
        if (auto col = phi.find(v, w); col && *col == c) ++d;
    return d;
}

std::uint64_t directed_colour_degree(const EdgeColouring& phi, Vertex v, const VertexSet& u, Colour c,
                                     Direction dir) {
    require_vertex(phi, v);
    std::uint64_t d = 0;
    for (Vertex w : u) {
        if (dir == Direction::Less ? !(v < w) : !(v > w)) continue;
        if (auto col = phi.find(v, w); col && *col == c) ++d;
    }
    return d;
}

std::uint64_t max_colour_degree(const EdgeColouring& phi, Vertex v, const Bitset& u_mask) {
    return max_multiplicity(phi, v, [&](Vertex w) { return in_mask(u_mask, w); });
}

std::uint64_t max_directed_colour_degree(const EdgeColouring& phi, Vertex v, const Bitset& u_mask, Direction dir) {
    return max_multiplicity(phi, v, [&](Vertex w) {
        return in_mask(u_mask, w) && (dir == Direction::Less ? v < w : v > w);
    });
}

bool is_delta_p_bounded(const EdgeColouring& phi, const VertexSet& u, double delta, double p) {
    if (u.empty()) throw std::invalid_argument("is_delta_p_bounded: U must be nonempty");
    const double bound = delta * p * static_cast<double>(u.size());
    const Bitset mask = u.mask(phi.host().n());
    for (Vertex v : u)
        if (static_cast<double>(max_colour_degree(phi, v, mask)) > bound) return false;
    return true;
}

BoundedSplit bounded_side_split(const EdgeColouring& phi, const VertexSet& u, double delta, double p) {
    if (u.empty()) throw std::invalid_argument("bounded_side_split: U must be nonempty");
    const double threshold = 8.0 * delta * p * static_cast<double>(u.size());
    const Bitset mask = u.mask(phi.host().n());
    std::vector<Vertex> bad;
    std::vector<Vertex> good;
    for (Vertex v : u) {
        if (static_cast<double>(max_colour_degree(phi, v, mask)) >= threshold)
            bad.push_back(v);
        else
            good.push_back(v);
    }
    return BoundedSplit{VertexSet(std::move(bad)), VertexSet(std::move(good))};
}

bool unbounded_condition_holds(const EdgeColouring& phi, const VertexSet& u, double delta, double p) {
    if (u.empty()) throw std::invalid_argument("unbounded_condition_holds: U must be nonempty");
    const auto split = bounded_side_split(phi, u, delta, p);
    return 2 * split.unbounded.size() >= u.size();
}

VertexSet unbounded_vertices(const EdgeColouring& phi, const VertexSet& u, double delta, double p, Direction dir) {
    if (u.empty()) return {};
    const double threshold = 4.0 * delta * p * static_cast<double>(u.size());
    const Bitset mask = u.mask(phi.host().n());
    std::vector<Vertex> out;
    for (Vertex v : u)
        if (static_cast<double>(max_directed_colour_degree(phi, v, mask, dir)) >= threshold) out.push_back(v);
    return VertexSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Transversal clique counters

namespace {

void require_disjoint(std::span<const VertexSet> classes) {
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = i + 1; j < classes.size(); ++j)
            if (!classes[i].disjoint_from(classes[j]))
                throw std::invalid_argument("vertex classes must be mutually disjoint");
}

/// Number of ways to extend with one vertex from each of classes[from..]
/// inside `cand`, every chosen vertex adjacent to all others.
std::uint64_t count_extensions(const OrderedGraph& g, std::span<const Bitset> masks, std::size_t from,
                               const Bitset& cand) {
    if (from == masks.size()) return 1;
    const Bitset here = cand & masks[from];
    if (from + 1 == masks.size()) return here.count();
    std::uint64_t total = 0;
    here.for_each([&](std::size_t v) {
        total += count_extensions(g, masks, from + 1, cand & g.row(static_cast<Vertex>(v)));
        return true;
    });
    return total;
}

std::vector<Bitset> class_masks(const OrderedGraph& g, std::span<const VertexSet> classes) {
    std::vector<Bitset> masks;
    masks.reserve(classes.size());
    for (const auto& c : classes) {
        if (c.max() > g.n()) throw std::invalid_argument("vertex class outside host vertex range");
        masks.push_back(c.mask(g.n()));
    }
    return masks;
}

Bitset full_mask(const OrderedGraph& g) { return VertexSet::range(g.n()).mask(g.n()); }

}  // namespace

std::uint64_t transversal_clique_count(const OrderedGraph& g, std::span<const VertexSet> classes) {
    require_disjoint(classes);
    const auto masks = class_masks(g, classes);
    return count_extensions(g, masks, 0, full_mask(g));
}

std::uint64_t nonrainbow_cherry_count(const EdgeColouring& phi, std::span<const VertexSet> classes) {
    if (classes.size() < 3) throw std::invalid_argument("nonrainbow_cherry_count: need at least 3 classes");
    require_disjoint(classes);
    const OrderedGraph& g = phi.host();
    const auto masks = class_masks(g, classes);
    std::uint64_t total = 0;
    for (Vertex u1 : classes[0]) {
        const Bitset n1 = g.row(u1);
        (n1 & masks[1]).for_each([&](std::size_t i2) {
            const auto u2 = static_cast<Vertex>(i2);
            const Colour c12 = phi.at(u1, u2);
            const Bitset n12 = n1 & g.row(u2);
            (n12 & masks[2]).for_each([&](std::size_t i3) {
                const auto u3 = static_cast<Vertex>(i3);
                if (phi.at(u1, u3) == c12) total += count_extensions(g, masks, 3, n12 & g.row(u3));
                return true;
            });
            return true;
        });
    }
    return total;
}

std::uint64_t nonrainbow_matching_count(const EdgeColouring& phi, std::span<const VertexSet> classes) {
    if (classes.size() < 4) throw std::invalid_argument("nonrainbow_matching_count: need at least 4 classes");
    require_disjoint(classes);
    const OrderedGraph& g = phi.host();
    const auto masks = class_masks(g, classes);
    std::uint64_t total = 0;
    for (Vertex u1 : classes[0]) {
        const Bitset n1 = g.row(u1);
        (n1 & masks[1]).for_each([&](std::size_t i2) {
            const auto u2 = static_cast<Vertex>(i2);
            const Colour c12 = phi.at(u1, u2);
            const Bitset n12 = n1 & g.row(u2);
            (n12 & masks[2]).for_each([&](std::size_t i3) {
                const auto u3 = static_cast<Vertex>(i3);
                const Bitset n123 = n12 & g.row(u3);
                (n123 & masks[3]).for_each([&](std::size_t i4) {
                    const auto u4 = static_cast<Vertex>(i4);
                    if (phi.at(u3, u4) == c12) total += count_extensions(g, masks, 4, n123 & g.row(u4));
                    return true;
                });
                return true;
            });
            return true;
        });
    }
    return total;
}

// ---------------------------------------------------------------------------
// Densities and colour partition

namespace {
void require_density_args(std::initializer_list<const VertexSet*> sets, double p) {
    if (!(p > 0.0)) throw std::domain_error("density: p must be positive");
    for (const auto* s : sets)
        if (s->empty()) throw std::invalid_argument("density: classes must be nonempty");
}
}  // namespace

double pair_density(const OrderedGraph& s, const VertexSet& ui, const VertexSet& uj, double p) {
    require_density_args({&ui, &uj}, p);
    if (!ui.disjoint_from(uj)) throw std::invalid_argument("pair_density: classes must be disjoint");
    const auto e = static_cast<double>(edge_count_between(s, ui, uj));
    return e / (p * static_cast<double>(ui.size()) * static_cast<double>(uj.size()));
}

double cherry_density(const OrderedGraph& s, const VertexSet& u1, const VertexSet& u2, const VertexSet& u3,
                      double p) {
    require_density_args({&u1, &u2, &u3}, p);
    const VertexSet classes[] = {u1, u2, u3};
    require_disjoint(classes);
    long double sum = 0;
    for (Vertex u : u1)
        sum += static_cast<long double>(degree_into(s, u, u2)) * static_cast<long double>(degree_into(s, u, u3));
    const long double denom = static_cast<long double>(p) * p * u1.size() * u2.size() * u3.size();
    return static_cast<double>(sum / denom);
}

std::vector<std::vector<Colour>> greedy_colour_partition(const std::map<Colour, std::uint64_t>& weights,
                                                         std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("greedy_colour_partition: cap must be positive");
    std::vector<std::vector<Colour>> classes;
    std::uint64_t load = 0;
    for (const auto& [colour, w] : weights) {
        if (w > cap)
            throw WeightExceedsCap("colour " + std::to_string(colour) + " has weight " + std::to_string(w) +
                                   " > cap " + std::to_string(cap));
        if (classes.empty() || load + w > cap) {
            classes.emplace_back();
            load = 0;
        }
        classes.back().push_back(colour);
        load += w;
    }
    return classes;
}

}  // namespace canonram
