#include <canonram/errors.hpp>
#include <canonram/graph.hpp>
#include <canonram/random.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace canonram {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::initializer_list<Vertex> members) : VertexSet(std::vector<Vertex>(members)) {}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (!members_.empty() && members_.front() == 0)
        throw std::invalid_argument("VertexSet: vertices are 1-based");
}

VertexSet VertexSet::range(Vertex n) {
    VertexSet s;
    s.members_.resize(n);
    for (Vertex v = 1; v <= n; ++v) s.members_[v - 1] = v;
    return s;
}

VertexSet VertexSet::from_bitset(const Bitset& bits) {
    VertexSet s;
    bits.for_each([&](std::size_t i) {
        if (i != 0) s.members_.push_back(static_cast<Vertex>(i));
        return true;
    });
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Bitset VertexSet::mask(Vertex n) const {
    Bitset b(static_cast<std::size_t>(n) + 1);
    for (Vertex v : members_) {
        if (v > n) break;
        b.set(v);
    }
    return b;
}

VertexSet VertexSet::without(const VertexSet& other) const {
    VertexSet out;
    std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::back_inserter(out.members_));
    return out;
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
    auto a = members_.begin();
    auto b = other.members_.begin();
    while (a != members_.end() && b != other.members_.end()) {
        if (*a == *b) return false;
        if (*a < *b)
            ++a;
        else
            ++b;
    }
    return true;
}

bool VertexSet::subset_of(const VertexSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

// ---------------------------------------------------------------------------
// OrderedGraph

OrderedGraph::OrderedGraph(Vertex n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
        if (e.u == e.v) throw std::invalid_argument("OrderedGraph: loop at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.v > n_)
            throw std::invalid_argument("OrderedGraph: edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                        "} outside [1," + std::to_string(n_) + "]");
    }
    std::sort(edges_.begin(), edges_.end());
    const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw std::invalid_argument("OrderedGraph: duplicate edge {" + std::to_string(dup->u) + "," +
                                    std::to_string(dup->v) + "}");

    rows_.assign(static_cast<std::size_t>(n_) + 1, Bitset(static_cast<std::size_t>(n_) + 1));
    std::vector<std::size_t> deg(static_cast<std::size_t>(n_) + 2, 0);
    for (const Edge& e : edges_) {
        rows_[e.u].set(e.v);
        rows_[e.v].set(e.u);
        ++deg[e.u];
        ++deg[e.v];
    }
    offsets_.assign(static_cast<std::size_t>(n_) + 2, 0);
    for (Vertex v = 1; v <= n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
    adj_.resize(2 * edges_.size());
    adj_ids_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end());
    // Edges are sorted, so for each vertex the lower neighbours arrive in
    // increasing order before the upper ones; a final per-row sort keeps
    // the lists sorted regardless.
    for (std::size_t id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adj_[fill[e.u]] = e.v;
        adj_ids_[fill[e.u]++] = static_cast<std::uint32_t>(id);
        adj_[fill[e.v]] = e.u;
        adj_ids_[fill[e.v]++] = static_cast<std::uint32_t>(id);
    }
    for (Vertex v = 1; v <= n_; ++v) {
        const std::size_t lo = offsets_[v];
        const std::size_t hi = offsets_[v + 1];
        std::vector<std::pair<Vertex, std::uint32_t>> row;
        row.reserve(hi - lo);
        for (std::size_t k = lo; k < hi; ++k) row.emplace_back(adj_[k], adj_ids_[k]);
        if (!std::is_sorted(row.begin(), row.end())) {
            std::sort(row.begin(), row.end());
            for (std::size_t k = lo; k < hi; ++k) {
                adj_[k] = row[k - lo].first;
                adj_ids_[k] = row[k - lo].second;
            }
        }
    }
}

OrderedGraph OrderedGraph::complete(Vertex n) {
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return OrderedGraph(n, std::move(edges));
}

bool OrderedGraph::adjacent(Vertex a, Vertex b) const {
    if (a == 0 || b == 0 || a > n_ || b > n_) return false;
    return rows_[a].test(b);
}

std::optional<std::size_t> OrderedGraph::edge_id(Vertex a, Vertex b) const {
    if (!adjacent(a, b)) return std::nullopt;
    const auto nb = neighbours(a);
    const auto it = std::lower_bound(nb.begin(), nb.end(), b);
    return incident_edge_ids(a)[static_cast<std::size_t>(it - nb.begin())];
}

std::span<const Vertex> OrderedGraph::neighbours(Vertex v) const {
    return std::span<const Vertex>(adj_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::span<const std::uint32_t> OrderedGraph::incident_edge_ids(Vertex v) const {
    return std::span<const std::uint32_t>(adj_ids_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

bool OrderedGraph::is_complete() const noexcept {
    const auto n = static_cast<std::size_t>(n_);
    return edges_.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

OrderedGraph OrderedGraph::filtered(const std::vector<bool>& keep) const {
    std::vector<Edge> kept;
    for (std::size_t id = 0; id < edges_.size(); ++id)
        if (keep[id]) kept.push_back(edges_[id]);
    return OrderedGraph(n_, std::move(kept));
}

// ---------------------------------------------------------------------------
// Sampling and counting

GnpSample gnp_generate(Vertex n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp_generate: n must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gnp_generate: p must lie in [0,1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (bernoulli(rng, p)) edges.emplace_back(u, v);
    return GnpSample{OrderedGraph(n, std::move(edges)), p, seed};
}

namespace {

std::uint64_t count_sets_recurse(const OrderedGraph& g, std::size_t need, const Bitset& cand) {
    if (need == 1) return cand.count();
    std::uint64_t total = 0;
    cand.for_each([&](std::size_t i) {
        Bitset next = cand & g.row(static_cast<Vertex>(i));
        next.clear_through(i);
        if (next.count() >= need - 1) total += count_sets_recurse(g, need - 1, next);
        return true;
    });
    return total;
}

}  // namespace

std::uint64_t count_clique_sets(const OrderedGraph& g, unsigned ell) {
    if (ell < 1) throw std::invalid_argument("count_clique_sets: ell must be positive");
    if (g.n() == 0) return 0;
    Bitset all = VertexSet::range(g.n()).mask(g.n());
    return count_sets_recurse(g, ell, all);
}

u128 count_cliques(const OrderedGraph& g, unsigned ell) {
    if (ell < 2) throw std::invalid_argument("count_cliques: ell must be at least 2");
    u128 value = count_clique_sets(g, ell);
    for (unsigned k = 2; k <= ell; ++k) {
        u128 next = 0;
        if (__builtin_mul_overflow(value, static_cast<u128>(k), &next))
            throw CountOverflow("count_cliques: labelled K_" + std::to_string(ell) + " count exceeds 128 bits");
        value = next;
    }
    return value;
}

std::vector<std::vector<Vertex>> enumerate_cliques(const OrderedGraph& g, unsigned ell,
                                                   const std::optional<VertexSet>& within, std::size_t limit) {
    if (ell < 2) throw std::invalid_argument("enumerate_cliques: ell must be at least 2");
    std::vector<std::vector<Vertex>> out;
    if (limit == 0) return out;
    for_each_clique(g, ell, within, [&](std::span<const Vertex> c) {
        out.emplace_back(c.begin(), c.end());
        return out.size() < limit;
    });
    return out;
}

std::uint64_t degree_into(const OrderedGraph& g, Vertex v, const VertexSet& u) {
    if (v < 1 || v > g.n()) throw std::invalid_argument("degree_into: vertex out of range");
    std::uint64_t d = 0;
    for (Vertex w : u)
        if (g.adjacent(v, w)) ++d;
    return d;
}

std::uint64_t edge_count_between(const OrderedGraph& g, const VertexSet& x, const VertexSet& y) {
    std::uint64_t total = 0;
    for (Vertex v : x) {
        if (v > g.n()) throw std::invalid_argument("edge_count_between: vertex out of range");
        total += degree_into(g, v, y);
    }
    return total;
}

// ---------------------------------------------------------------------------
// Clean subgraph

namespace {

/// Mutable adjacency used only during the clean scan.
struct WorkingGraph {
    std::vector<Bitset> rows;

    bool has_k_cliques_at_least(std::size_t k, const Bitset& cand, std::size_t want, std::size_t& found) const {
        if (k == 0) return ++found >= want;
        return !cand.for_each([&](std::size_t i) {
            Bitset next = cand & rows[i];
            next.clear_through(i);
            return !has_k_cliques_at_least(k - 1, next, want, found);
        });
    }

    /// True iff the edge uv lies in two distinct ell-cliques sharing >= 3 vertices.
    /// Both cliques contain u and v, so they correspond to two distinct
    /// (ell-2)-cliques of the common neighbourhood C that share a vertex w,
    /// i.e. some w in C has at least two (ell-3)-cliques in C ∩ N(w).
    bool edge_is_overloaded(Vertex u, Vertex v, unsigned ell) const {
        if (ell < 4) return false;
        const Bitset common = rows[u] & rows[v];
        return !common.for_each([&](std::size_t w) {
            const Bitset inner = common & rows[w];
            std::size_t found = 0;
            return !has_k_cliques_at_least(ell - 3, inner, 2, found);
        });
    }
};

}  // namespace

OrderedGraph clean_subgraph(const OrderedGraph& g, unsigned ell) {
    if (ell < 3) throw std::invalid_argument("clean_subgraph: ell must be at least 3");
    WorkingGraph work;
    work.rows.reserve(static_cast<std::size_t>(g.n()) + 1);
    for (Vertex v = 0; v <= g.n(); ++v) work.rows.push_back(v == 0 ? Bitset(g.n() + 1) : g.row(v));

    std::vector<bool> keep(g.edge_count(), true);
    const auto edges = g.edges();
    for (std::size_t id = 0; id < edges.size(); ++id) {
        const Edge e = edges[id];
        if (work.edge_is_overloaded(e.u, e.v, ell)) {
            keep[id] = false;
            work.rows[e.u].reset(e.v);
            work.rows[e.v].reset(e.u);
        }
    }
    return g.filtered(keep);
}

bool has_overlapping_cliques(const OrderedGraph& g, unsigned ell) {
    if (ell < 3) return false;
    const auto cliques = enumerate_cliques(g, ell);
    for (std::size_t a = 0; a < cliques.size(); ++a) {
        for (std::size_t b = a + 1; b < cliques.size(); ++b) {
            std::size_t shared = 0;
            auto x = cliques[a].begin();
            auto y = cliques[b].begin();
            while (x != cliques[a].end() && y != cliques[b].end()) {
                if (*x == *y) {
                    ++shared;
                    ++x;
                    ++y;
                } else if (*x < *y) {
                    ++x;
                } else {
                    ++y;
                }
            }
            if (shared >= 3) return true;
        }
    }
    return false;
}

}  // namespace canonram
