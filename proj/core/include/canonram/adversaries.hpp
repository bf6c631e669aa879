#pragma once

#include <canonram/colouring.hpp>

#include <cstdint>
#include <memory>
#include <string>

namespace canonram {

enum class AdversaryKind : std::uint8_t { RandomR, Injective, MinOrder, MaxOrder, GreedyProper, BoundedRandom };

/// Declarative description of a structured edge colouring.
///
/// RandomR draws i.i.d. uniform colours from {0, ..., r-1}. BoundedRandom
/// draws from the same palette but rejects a draw that would give either
/// endpoint more than `lambda` edges of that colour; after 100 rejected
/// draws the edge receives a fresh colour r, r+1, ... instead.
struct AdversarySpec {
    AdversaryKind kind = AdversaryKind::Injective;
    std::uint64_t r = 2;
    std::uint64_t lambda = 1;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument when r or lambda is out of range for the kind.
    void validate() const;
};

std::string to_string(AdversaryKind kind);

/// Accepts "random", "injective", "min", "max", "greedy", "bounded" and
/// their long forms ("random_r", "min_order", "max_order", "greedy_proper",
/// "bounded_random").
AdversaryKind parse_adversary_kind(const std::string& name);

/// Parses "kind[:a[:b]]", e.g. "random:5", "bounded:3:40" (lambda 3, palette 40), "greedy".
AdversarySpec parse_adversary_spec(const std::string& text, std::uint64_t seed = 0);

inline constexpr int kBoundedRandomMaxDraws = 100;

/// Colours every edge of g as described by spec. Deterministic in (g, spec).
EdgeColouring generate_colouring(std::shared_ptr<const OrderedGraph> g, const AdversarySpec& spec);

/// No two incident edges share a colour.
bool verify_properness(const EdgeColouring& phi);

/// max over v and c of d_c(v, V).
std::uint64_t max_colour_multiplicity(const EdgeColouring& phi);

}  // namespace canonram
