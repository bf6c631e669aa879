#pragma once

#include <canonram/colouring.hpp>

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace canonram {

/// Parameters of the deterministic canonical-clique procedure on K_n.
struct ErConstants {
    unsigned ell = 3;
    double delta = 0.0;
    unsigned steps = 0;  // L

    /// delta = 1 / (4 ell^3), L = 2 (ell - 2)^2 + 2.
    static ErConstants defaults(unsigned ell);

    /// log2 of the vertex count for which the procedure is guaranteed to
    /// succeed: 6 ell^2 (log2 ell + 1). Recorded only; never enforced.
    double guaranteed_log2_n() const;

    void validate() const;
};

struct SequenceStep {
    Vertex vertex = 0;
    Colour colour = 0;
    Direction direction = Direction::Less;
    std::uint64_t degree = 0;  // d^dir_colour(vertex, S_{i-1})
};

/// Nested monochromatic neighbourhoods: after step i the surviving set is
/// S_i = N^{dir_i}_{c_i}(v_i) ∩ S_{i-1}, with S_0 = V.
struct NeighbourhoodSequence {
    std::vector<SequenceStep> steps;
    std::vector<VertexSet> surviving;  // surviving[i] = S_{i+1}
    double delta = 0.0;
    Vertex n = 0;

    const VertexSet& final_set() const { return surviving.back(); }
};

/// No vertex of the current surviving set has a qualifying directed colour
/// degree; the colouring is bounded there.
struct BoundedSubsetSignal {
    VertexSet surviving;
    NeighbourhoodSequence partial;
};

using SequenceResult = std::variant<NeighbourhoodSequence, BoundedSubsetSignal>;

/// Greedy nested-neighbourhood construction. At each step picks (v, c, dir)
/// in the current set S with d^dir_c(v, S) > delta |S| / 2, maximising the
/// degree and breaking ties by smaller vertex, smaller colour, then < before >.
/// Asserts |S_i| > (delta/2)^i n after every step (throws InvariantBreach).
/// Throws NotComplete unless the host is complete.
SequenceResult build_sequence(const EdgeColouring& phi, const ErConstants& consts);

/// Pigeonhole extraction of a monochromatic, min-coloured or max-coloured
/// K_ell from a sequence with at least 2 (ell-2)^2 + 2 steps.
CanonicalWitness extract_canonical(const EdgeColouring& phi, const NeighbourhoodSequence& seq, unsigned ell);

inline constexpr unsigned kDefaultSamplingRounds = 50;

struct RainbowSampleResult {
    std::optional<CanonicalWitness> witness;
    unsigned rounds_used = 0;
};

/// Bounded-case rainbow search: keep each vertex of U with probability
/// 2 ell / |U|, delete the largest vertex of every conflicting triple (two
/// same-coloured edges sharing a vertex) and quadruple (same-coloured
/// disjoint pair) in lexicographic order, and return a surviving ell-clique.
/// Throws NotBounded unless d_c(v, U) <= delta |U| for all v in U and colours c.
RainbowSampleResult rainbow_by_sampling(const EdgeColouring& phi, const VertexSet& u, unsigned ell, double delta,
                                        std::uint64_t seed, unsigned rounds = kDefaultSamplingRounds);

enum class ErBranch : std::uint8_t { Sequence, RainbowSampling, ExhaustiveFallback };

const char* to_string(ErBranch b) noexcept;

struct ErResult {
    CanonicalWitness witness;
    ErBranch branch = ErBranch::Sequence;
    SequenceResult sequence;
};

/// Driver: sequence branch, else rainbow sampling on the bounded subset,
/// else an exhaustive canonical search. The returned witness always
/// verifies. Throws NoWitness when even the exhaustive search fails.
ErResult er_find(const EdgeColouring& phi, unsigned ell, std::uint64_t seed = 0);

}  // namespace canonram
