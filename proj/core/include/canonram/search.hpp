#pragma once

#include <canonram/colouring.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

namespace canonram {

struct SearchOutcome {
    bool found = false;
    std::optional<CanonicalWitness> witness;
    /// Cliques classified (canonical search) or partial tuples visited (rainbow search).
    std::uint64_t nodes_explored = 0;
};

/// Lexicographically first ell-clique inside `within` carrying a strict
/// canonical pattern.
SearchOutcome find_canonical_copy(const EdgeColouring& phi, unsigned ell,
                                  const std::optional<VertexSet>& within = std::nullopt);

/// Lexicographically first rainbow ell-clique inside `within`. Partial
/// tuples are abandoned as soon as two of their edges share a colour.
SearchOutcome find_rainbow_copy(const EdgeColouring& phi, unsigned ell,
                                const std::optional<VertexSet>& within = std::nullopt);

/// Parameters of the arrow relation G -> (K_ell)_r.
struct ArrowQuery {
    unsigned ell = 3;
    unsigned r = 2;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

enum class ArrowStatus : std::uint8_t { Arrows, DoesNotArrow, ResourceLimit };

struct ArrowResult {
    ArrowStatus status = ArrowStatus::ResourceLimit;
    /// A colouring with colours in {0..r-1} free of monochromatic K_ell; present iff DoesNotArrow.
    std::optional<std::vector<Colour>> witness;
    std::uint64_t nodes_explored = 0;
};

/// Decides whether every r-colouring of E(G) has a monochromatic K_ell.
/// Backtracking over edges (most constrained first) with unit propagation
/// on cliques and colour-renaming symmetry breaking. Exceeding `budget`
/// decision nodes yields ArrowStatus::ResourceLimit.
ArrowResult arrows_mono(const OrderedGraph& g, const ArrowQuery& q, std::uint64_t budget = kDefaultNodeBudget);

inline constexpr std::size_t kCanonicalArrowMaxEdges = 12;

struct CanonicalArrowResult {
    bool arrows = false;
    std::uint64_t partitions_checked = 0;
    /// First partition (as a restricted growth string over edge ids) without a canonical K_ell.
    std::optional<std::vector<Colour>> counterexample;
};

/// G ->* (K_ell) decided by enumerating every partition of E(G) into colour
/// classes as a restricted growth string. Stops at the first counterexample.
/// Throws TooManyEdges above kCanonicalArrowMaxEdges edges.
CanonicalArrowResult canonical_arrow_exhaustive(const OrderedGraph& g, unsigned ell);

/// Calls fn(rgs) for every restricted growth string of length m
/// (rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1])), in lexicographic order.
/// fn returns false to stop. Returns the number of strings visited.
template <class Fn>
std::uint64_t for_each_restricted_growth_string(std::size_t m, Fn&& fn) {
    std::vector<Colour> a(m, 0);
    std::vector<Colour> prefix_max(m, 0);  // max of a[0..i]
    std::uint64_t visited = 0;
    if (m == 0) {
        ++visited;
        fn(static_cast<const std::vector<Colour>&>(a));
        return visited;
    }
    for (;;) {
        ++visited;
        if (!fn(static_cast<const std::vector<Colour>&>(a))) return visited;
        // Rightmost position that can still be incremented.
        std::size_t i = m - 1;
        while (i > 0 && a[i] > prefix_max[i - 1]) --i;
        if (i == 0) return visited;
        ++a[i];
        prefix_max[i] = std::max(prefix_max[i - 1], a[i]);
        for (std::size_t k = i + 1; k < m; ++k) {
            a[k] = 0;
            prefix_max[k] = prefix_max[k - 1];
        }
    }
}

}  // namespace canonram
