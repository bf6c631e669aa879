#pragma once

#include <canonram/graph.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace canonram {

/// Colour ids are opaque non-negative integers; they need not be contiguous.
using Colour = std::uint64_t;

/// Total map from the edge set of a host graph to colours.
/// The host is shared, so a colouring can outlive the caller's graph handle.
class EdgeColouring {
public:
    /// `colours[id]` is the colour of host->edges()[id].
    EdgeColouring(std::shared_ptr<const OrderedGraph> host, std::vector<Colour> colours);

    /// Colours every edge by fn(edge).
    template <class Fn>
    static EdgeColouring from_function(std::shared_ptr<const OrderedGraph> host, Fn&& fn) {
        std::vector<Colour> colours;
        colours.reserve(host->edge_count());
        for (const Edge& e : host->edges()) colours.push_back(static_cast<Colour>(fn(e)));
        return EdgeColouring(std::move(host), std::move(colours));
    }

    const OrderedGraph& host() const noexcept { return *host_; }
    const std::shared_ptr<const OrderedGraph>& host_ptr() const noexcept { return host_; }

    std::span<const Colour> colours() const noexcept { return colours_; }
    Colour of_id(std::size_t id) const { return colours_[id]; }

    /// Colour of edge ab; throws NotAClique when ab is not an edge of the host.
    Colour at(Vertex a, Vertex b) const;
    std::optional<Colour> find(Vertex a, Vertex b) const;

    /// Distinct colours in increasing order.
    std::vector<Colour> palette() const;

    /// Same partition of the edges with colours renumbered 0, 1, 2, ... in
    /// order of first appearance along the lexicographic edge order.
    EdgeColouring relabelled_dense() const;

    /// Same colours on the subgraph formed by edges of `sub`, which must be a subgraph of the host.
    EdgeColouring restricted_to(std::shared_ptr<const OrderedGraph> sub) const;

private:
    std::shared_ptr<const OrderedGraph> host_;
    std::vector<Colour> colours_;
};

/// Canonical patterns (a)-(d) plus the two non-strict relaxations.
enum class PatternTag : std::uint8_t {
    Monochromatic = 1U << 0,
    Rainbow = 1U << 1,
    MinColoured = 1U << 2,
    MaxColoured = 1U << 3,
    NonStrictMin = 1U << 4,
    NonStrictMax = 1U << 5,
};

std::string_view to_string(PatternTag tag) noexcept;

/// Small bitmask set of PatternTag.
class PatternSet {
public:
    constexpr PatternSet() = default;
    constexpr PatternSet(std::initializer_list<PatternTag> tags) {
        for (auto t : tags) insert(t);
    }

    constexpr void insert(PatternTag t) noexcept { bits_ |= static_cast<std::uint8_t>(t); }
    constexpr bool contains(PatternTag t) const noexcept { return (bits_ & static_cast<std::uint8_t>(t)) != 0; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::uint8_t bits() const noexcept { return bits_; }

    /// At least one of Monochromatic, Rainbow, MinColoured, MaxColoured.
    constexpr bool is_canonical() const noexcept { return (bits_ & 0x0F) != 0; }

    /// Name of the first strict tag in the order mono, rainbow, min, max; "none" otherwise.
    std::string_view primary_name() const noexcept;

    /// All tags, '+'-joined; "none" if empty.
    std::string to_string() const;

    friend constexpr bool operator==(PatternSet, PatternSet) = default;

private:
    std::uint8_t bits_ = 0;
};

/// An increasing tuple of clique vertices, the patterns it realises, and
/// the colours of its edges in lexicographic edge order.
struct CanonicalWitness {
    std::vector<Vertex> vertices;
    PatternSet tags;
    std::vector<std::pair<Edge, Colour>> evidence;
};

namespace detail {

/// Pattern classification over an arbitrary colour lookup colour_of(i, j)
/// for positions i < j of the tuple. Shared by every search path.
template <class ColourOf>
PatternSet classify_positions(std::size_t ell, ColourOf&& colour_of) {
    PatternSet tags;
    if (ell < 2) return tags;
    bool mono = true;
    bool rainbow = true;
    bool min_fwd = true;  // same min endpoint => same colour
    bool min_bwd = true;  // same colour => same min endpoint
    bool max_fwd = true;
    bool max_bwd = true;
    // Edges are (i, j) with i < j in tuple positions; the tuple is increasing,
    // so min(e) = position i and max(e) = position j.
    const Colour first = colour_of(0, 1);
    for (std::size_t i = 0; i < ell; ++i) {
        for (std::size_t j = i + 1; j < ell; ++j) {
            const Colour c = colour_of(i, j);
            if (c != first) mono = false;
            for (std::size_t a = 0; a < ell; ++a) {
                for (std::size_t b = a + 1; b < ell; ++b) {
                    if (a < i || (a == i && b <= j)) continue;  // each unordered pair of edges once
                    const Colour d = colour_of(a, b);
                    const bool same_colour = c == d;
                    if (same_colour) rainbow = false;
                    const bool same_min = i == a;
                    const bool same_max = j == b;
                    if (same_min && !same_colour) min_fwd = false;
                    if (same_colour && !same_min) min_bwd = false;
                    if (same_max && !same_colour) max_fwd = false;
                    if (same_colour && !same_max) max_bwd = false;
                }
            }
        }
    }
    if (mono) tags.insert(PatternTag::Monochromatic);
    if (rainbow) tags.insert(PatternTag::Rainbow);
    if (min_fwd) tags.insert(PatternTag::NonStrictMin);
    if (max_fwd) tags.insert(PatternTag::NonStrictMax);
    if (min_fwd && min_bwd) tags.insert(PatternTag::MinColoured);
    if (max_fwd && max_bwd) tags.insert(PatternTag::MaxColoured);
    return tags;
}

}  // namespace detail

/// Every tag whose defining predicate holds on the clique `vertices`.
/// Throws NotAClique if an edge is missing, std::invalid_argument if the
/// tuple is not strictly increasing.
PatternSet classify_copy(const EdgeColouring& phi, std::span<const Vertex> vertices);

/// Witness for `vertices` with tags and evidence filled in from phi.
CanonicalWitness make_witness(const EdgeColouring& phi, std::span<const Vertex> vertices);

/// Re-checks a witness against phi: clique, evidence, and tags all consistent, and canonical.
bool verify_witness(const EdgeColouring& phi, const CanonicalWitness& w);

enum class Direction : std::uint8_t { Less, Greater };

/// d_c(v, U) = |{w in U : vw in E, phi(vw) = c}|
std::uint64_t colour_degree(const EdgeColouring& phi, Vertex v, const VertexSet& u, Colour c);

/// d^<_c(v, U) counts w > v; d^>_c(v, U) counts w < v.
std::uint64_t directed_colour_degree(const EdgeColouring& phi, Vertex v, const VertexSet& u, Colour c,
                                     Direction dir);

/// max_c d_c(v, U), computed in one pass over N(v).
std::uint64_t max_colour_degree(const EdgeColouring& phi, Vertex v, const Bitset& u_mask);
std::uint64_t max_directed_colour_degree(const EdgeColouring& phi, Vertex v, const Bitset& u_mask, Direction dir);

/// For all u in U and colours c: d_c(u, U) <= delta * p * |U|.
bool is_delta_p_bounded(const EdgeColouring& phi, const VertexSet& u, double delta, double p);

/// |{u in U : some d_c(u, U) >= 8 delta p |U|}| >= |U| / 2, compared exactly as 2*count >= |U|.
bool unbounded_condition_holds(const EdgeColouring& phi, const VertexSet& u, double delta, double p);

/// B^dir(U) = {v in U : some d^dir_c(v, U) >= 4 delta p |U|}.
VertexSet unbounded_vertices(const EdgeColouring& phi, const VertexSet& u, double delta, double p, Direction dir);

struct BoundedSplit {
    VertexSet unbounded;  // B(U)
    VertexSet rest;       // U' = U \ B(U)
};

/// B(U) = {u in U : some d_c(u, U) >= 8 delta p |U|} and its complement in U.
BoundedSplit bounded_side_split(const EdgeColouring& phi, const VertexSet& u, double delta, double p);

/// Labelled transversal ell-cliques (u_1, ..., u_ell), u_i in classes[i],
/// with phi(u_1 u_2) = phi(u_1 u_3). Classes must be disjoint, ell >= 3.
std::uint64_t nonrainbow_cherry_count(const EdgeColouring& phi, std::span<const VertexSet> classes);

/// As above with phi(u_1 u_2) = phi(u_3 u_4). Requires ell >= 4.
std::uint64_t nonrainbow_matching_count(const EdgeColouring& phi, std::span<const VertexSet> classes);

/// Number of transversal ell-cliques (one vertex from each class).
std::uint64_t transversal_clique_count(const OrderedGraph& g, std::span<const VertexSet> classes);

/// e_S(Ui, Uj) / (p |Ui| |Uj|) for disjoint nonempty classes.
double pair_density(const OrderedGraph& s, const VertexSet& ui, const VertexSet& uj, double p);

/// sum_{u in U1} d_S(u, U2) d_S(u, U3) / (p^2 |U1| |U2| |U3|).
double cherry_density(const OrderedGraph& s, const VertexSet& u1, const VertexSet& u2, const VertexSet& u3,
                      double p);

/// Next-fit partition of colours (ascending id) into classes of total weight <= cap.
/// Throws WeightExceedsCap if a single colour is heavier than cap.
std::vector<std::vector<Colour>> greedy_colour_partition(const std::map<Colour, std::uint64_t>& weights,
                                                         std::uint64_t cap);

}  // namespace canonram
