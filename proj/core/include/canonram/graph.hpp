#pragma once

#include <canonram/bitset.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace canonram {

/// Vertices are 1-based: a graph on n vertices uses {1, ..., n}.
using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    constexpr Edge() = default;
    constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free subset of {1, ..., n}. Iteration is increasing.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> members);
    explicit VertexSet(std::vector<Vertex> members);

    /// {1, ..., n}
    static VertexSet range(Vertex n);
    static VertexSet from_bitset(const Bitset& bits);

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;
    Vertex max() const noexcept { return members_.empty() ? 0 : members_.back(); }

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    std::span<const Vertex> members() const noexcept { return members_; }

    /// Bitset over indices 0..n with bit v set for each member; members above n are ignored.
    Bitset mask(Vertex n) const;

    VertexSet without(const VertexSet& other) const;
    bool disjoint_from(const VertexSet& other) const;
    bool subset_of(const VertexSet& other) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Simple undirected graph on the ordered vertex set {1, ..., n}.
/// Immutable after construction; safe to share across threads.
class OrderedGraph {
public:
    OrderedGraph() = default;

    /// Throws std::invalid_argument on loops, duplicates, or out-of-range endpoints.
    OrderedGraph(Vertex n, std::vector<Edge> edges);

    static OrderedGraph complete(Vertex n);
    static OrderedGraph empty(Vertex n) { return OrderedGraph(n, {}); }

    Vertex n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    /// Edges in lexicographic order; positions are the edge ids used elsewhere.
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool adjacent(Vertex a, Vertex b) const;
    std::optional<std::size_t> edge_id(Vertex a, Vertex b) const;

    /// Row bitset of N(v) over indices 0..n.
    const Bitset& row(Vertex v) const { return rows_[v]; }

    /// Sorted neighbour list of v and the matching edge ids.
    std::span<const Vertex> neighbours(Vertex v) const;
    std::span<const std::uint32_t> incident_edge_ids(Vertex v) const;

    std::size_t degree(Vertex v) const { return neighbours(v).size(); }
    bool is_complete() const noexcept;

    /// Graph with the same vertex set and only the edges for which keep[id] is true.
    OrderedGraph filtered(const std::vector<bool>& keep) const;

    bool same_edges(const OrderedGraph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }
    friend bool operator==(const OrderedGraph& a, const OrderedGraph& b) noexcept { return a.same_edges(b); }

private:
    Vertex n_ = 0;
    std::vector<Edge> edges_;
    std::vector<Bitset> rows_;
    std::vector<std::size_t> offsets_;
    std::vector<Vertex> adj_;
    std::vector<std::uint32_t> adj_ids_;
};

/// G(n, p) sample together with the parameters that reproduce it.
struct GnpSample {
    OrderedGraph graph;
    double p = 0.0;
    std::uint64_t seed = 0;
};

/// Binomial random graph. Pairs are visited in lexicographic order and each
/// consumes exactly one draw of the library Rng seeded with `seed`.
GnpSample gnp_generate(Vertex n, double p, std::uint64_t seed);

/// Unsigned 128-bit integer (GCC/Clang extension).
__extension__ using u128 = unsigned __int128;
__extension__ using i128 = __int128;

/// Number of labelled copies of K_ell, i.e. (number of ell-cliques) * ell!.
/// Throws CountOverflow when the value does not fit in 128 bits.
u128 count_cliques(const OrderedGraph& g, unsigned ell);

/// Number of ell-vertex subsets inducing K_ell.
std::uint64_t count_clique_sets(const OrderedGraph& g, unsigned ell);

namespace detail {

template <class Fn>
bool clique_recurse(const OrderedGraph& g, unsigned ell, std::vector<Vertex>& stack, const Bitset& cand,
                    Fn& fn) {
    if (stack.size() == ell) return fn(std::span<const Vertex>(stack));
    const std::size_t need = ell - stack.size();
    if (cand.count() < need) return true;
    return cand.for_each([&](std::size_t i) {
        const auto v = static_cast<Vertex>(i);
        Bitset next = cand & g.row(v);
        next.clear_through(v);
        stack.push_back(v);
        const bool go = clique_recurse(g, ell, stack, next, fn);
        stack.pop_back();
        return go;
    });
}

}  // namespace detail

/// Streams every ell-clique inside `within` (default: all vertices) as an
/// increasing tuple, in lexicographic order. `fn` returns false to stop early.
/// Returns false iff the stream was stopped.
template <class Fn>
bool for_each_clique(const OrderedGraph& g, unsigned ell, const std::optional<VertexSet>& within, Fn&& fn) {
    if (ell == 0 || g.n() == 0) return true;
    Bitset cand = within ? within->mask(g.n()) : VertexSet::range(g.n()).mask(g.n());
    cand.reset(0);
    std::vector<Vertex> stack;
    stack.reserve(ell);
    return detail::clique_recurse(g, ell, stack, cand, fn);
}

/// Collected form of for_each_clique.
std::vector<std::vector<Vertex>> enumerate_cliques(const OrderedGraph& g, unsigned ell,
                                                   const std::optional<VertexSet>& within = std::nullopt,
                                                   std::size_t limit = SIZE_MAX);

/// |{(x, y) in X x Y : xy in E}|; edges inside X ∩ Y are counted twice.
std::uint64_t edge_count_between(const OrderedGraph& g, const VertexSet& x, const VertexSet& y);

/// |N(v) ∩ U|
std::uint64_t degree_into(const OrderedGraph& g, Vertex v, const VertexSet& u);

/// The ell-clean subgraph: scan edges in lexicographic order and delete the
/// current edge whenever, in the current graph, it lies in two distinct
/// ell-cliques (distinct vertex sets) sharing at least three vertices.
OrderedGraph clean_subgraph(const OrderedGraph& g, unsigned ell);

/// True iff some two distinct ell-cliques of g share at least three vertices.
/// Exhaustive pairwise check; meant for verification.
bool has_overlapping_cliques(const OrderedGraph& g, unsigned ell);

}  // namespace canonram
