#include <canonram/erdos_rado.hpp>
#include <canonram/errors.hpp>
#include <canonram/random.hpp>
#include <canonram/search.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace canonram {

ErConstants ErConstants::defaults(unsigned ell) {
    ErConstants c;
    c.ell = ell;
    const double l = ell;
    c.delta = 1.0 / (4.0 * l * l * l);
    c.steps = 2 * (ell - 2) * (ell - 2) + 2;
    return c;
}

double ErConstants::guaranteed_log2_n() const {
    const double l = ell;
    return 6.0 * l * l * (std::log2(l) + 1.0);
}

void ErConstants::validate() const {
    if (ell < 3) throw std::invalid_argument("ErConstants: ell must be at least 3");
    if (!(delta > 0.0)) throw std::invalid_argument("ErConstants: delta must be positive");
    if (steps < ell) throw std::invalid_argument("ErConstants: L must be at least ell");
}

const char* to_string(ErBranch b) noexcept {
    switch (b) {
        case ErBranch::Sequence: return "sequence";
        case ErBranch::RainbowSampling: return "rainbow_sampling";
        case ErBranch::ExhaustiveFallback: return "exhaustive_fallback";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Nested neighbourhoods

namespace {

struct Candidate {
    Vertex vertex = 0;
    Colour colour = 0;
    Direction direction = Direction::Less;
    std::uint64_t degree = 0;
};

/// Ordering of candidates: larger degree first, then smaller vertex, smaller colour, < before >.
bool better(const Candidate& a, const Candidate& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    if (a.vertex != b.vertex) return a.vertex < b.vertex;
    if (a.colour != b.colour) return a.colour < b.colour;
    return a.direction == Direction::Less && b.direction == Direction::Greater;
}

std::optional<Candidate> best_step(const EdgeColouring& phi, const VertexSet& s) {
    std::optional<Candidate> best;
    std::map<Colour, std::uint64_t> up;
    std::map<Colour, std::uint64_t> down;
    for (Vertex v : s) {
        up.clear();
        down.clear();
        for (Vertex w : s) {
            if (w == v) continue;
            (w > v ? up : down)[phi.at(v, w)]++;
        }
        for (const auto* counts : {&up, &down}) {
            const Direction dir = counts == &up ? Direction::Less : Direction::Greater;
            for (const auto& [c, d] : *counts) {
                const Candidate cand{v, c, dir, d};
                if (!best || better(cand, *best)) best = cand;
            }
        }
    }
    return best;
}

}  // namespace

SequenceResult build_sequence(const EdgeColouring& phi, const ErConstants& consts) {
    consts.validate();
    const OrderedGraph& g = phi.host();
    if (!g.is_complete()) throw NotComplete("build_sequence: host graph is not complete");

    NeighbourhoodSequence seq;
    seq.delta = consts.delta;
    seq.n = g.n();
    VertexSet current = VertexSet::range(g.n());
    for (unsigned i = 1; i <= consts.steps; ++i) {
        const auto step = best_step(phi, current);
        const double threshold = consts.delta * static_cast<double>(current.size()) / 2.0;
        if (!step || !(static_cast<double>(step->degree) > threshold))
            return BoundedSubsetSignal{std::move(current), std::move(seq)};

        std::vector<Vertex> next;
        for (Vertex w : current) {
            if (w == step->vertex) continue;
            const bool related = step->direction == Direction::Less ? step->vertex < w : step->vertex > w;
            if (related && phi.at(step->vertex, w) == step->colour) next.push_back(w);
        }
        current = VertexSet(std::move(next));

        const double floor = std::pow(consts.delta / 2.0, static_cast<double>(i)) * static_cast<double>(g.n());
        if (!(static_cast<double>(current.size()) > floor))
            throw InvariantBreach("build_sequence: |S_" + std::to_string(i) + "| = " + std::to_string(current.size()) +
                                  " does not exceed (delta/2)^i n");
        seq.steps.push_back({step->vertex, step->colour, step->direction, step->degree});
        seq.surviving.push_back(current);
    }
    return seq;
}

CanonicalWitness extract_canonical(const EdgeColouring& phi, const NeighbourhoodSequence& seq, unsigned ell) {
    if (ell < 3) throw std::invalid_argument("extract_canonical: ell must be at least 3");
    const std::size_t block = static_cast<std::size_t>(ell - 2) * (ell - 2) + 1;
    if (seq.steps.size() < 2 * block)
        throw SequenceTooShort("extract_canonical: need " + std::to_string(2 * block) + " steps, have " +
                               std::to_string(seq.steps.size()));
    if (seq.surviving.empty() || seq.final_set().empty())
        throw EmptyFinalSet("extract_canonical: final surviving set is empty");

    // Among 2*block steps one comparator occurs at least block times.
    std::vector<std::size_t> less;
    std::vector<std::size_t> greater;
    for (std::size_t i = 0; i < seq.steps.size(); ++i)
        (seq.steps[i].direction == Direction::Less ? less : greater).push_back(i);
    const bool use_less = less.size() >= greater.size();
    std::vector<std::size_t> chosen = use_less ? less : greater;
    chosen.resize(block);

    // Every later sequence vertex and every vertex of the final set lies in
    // N^dir_{c_i}(v_i), so edge v_i x has colour c_i for all such x.
    const Vertex last = *seq.final_set().begin();
    std::map<Colour, std::vector<std::size_t>> by_colour;
    for (auto i : chosen) by_colour[seq.steps[i].colour].push_back(i);

    std::vector<Vertex> verts;
    for (const auto& [c, idx] : by_colour) {
        if (idx.size() + 1 >= ell) {
            for (std::size_t k = 0; k + 1 < ell; ++k) verts.push_back(seq.steps[idx[k]].vertex);
            break;
        }
    }
    if (verts.empty()) {
        // At most ell-2 repeats per colour among block = (ell-2)^2 + 1 entries,
        // so at least ell-1 distinct colours occur.
        for (const auto& [c, idx] : by_colour) {
            verts.push_back(seq.steps[idx.front()].vertex);
            if (verts.size() + 1 == ell) break;
        }
    }
    verts.push_back(last);
    std::sort(verts.begin(), verts.end());

    CanonicalWitness w = make_witness(phi, verts);
    if (!w.tags.is_canonical())
        throw InvariantBreach("extract_canonical: extracted clique is not canonical");
    return w;
}

// ---------------------------------------------------------------------------
// Bounded branch

RainbowSampleResult rainbow_by_sampling(const EdgeColouring& phi, const VertexSet& u, unsigned ell, double delta,
                                        std::uint64_t seed, unsigned rounds) {
    if (ell < 3) throw std::invalid_argument("rainbow_by_sampling: ell must be at least 3");
    if (u.empty()) throw std::invalid_argument("rainbow_by_sampling: U must be nonempty");
    const OrderedGraph& g = phi.host();
    const Bitset mask = u.mask(g.n());
    const double cap = delta * static_cast<double>(u.size());
    for (Vertex v : u)
        if (static_cast<double>(max_colour_degree(phi, v, mask)) > cap)
            throw NotBounded("rainbow_by_sampling: vertex " + std::to_string(v) + " exceeds delta |U| in one colour");

    const double keep = std::min(1.0, 2.0 * ell / static_cast<double>(u.size()));
    Rng rng(seed);
    RainbowSampleResult res;
    for (unsigned round = 1; round <= rounds; ++round) {
        res.rounds_used = round;
        std::vector<Vertex> sample;
        for (Vertex v : u)
            if (bernoulli(rng, keep)) sample.push_back(v);
        if (sample.size() < ell) continue;

        const std::size_t k = sample.size();
        std::vector<bool> alive(k, true);
        auto colour = [&](std::size_t i, std::size_t j) { return phi.find(sample[i], sample[j]); };
        auto same = [](const std::optional<Colour>& x, const std::optional<Colour>& y) { return x && y && *x == *y; };

        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                for (std::size_t c = b + 1; c < k; ++c) {
                    if (!alive[a] || !alive[b] || !alive[c]) continue;
                    const auto ab = colour(a, b), ac = colour(a, c), bc = colour(b, c);
                    if (same(ab, ac) || same(ab, bc) || same(ac, bc)) alive[c] = false;
                }
        for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = a + 1; b < k; ++b)
                for (std::size_t c = b + 1; c < k; ++c)
                    for (std::size_t d = c + 1; d < k; ++d) {
                        if (!alive[a] || !alive[b] || !alive[c] || !alive[d]) continue;
                        if (same(colour(a, b), colour(c, d)) || same(colour(a, c), colour(b, d)) ||
                            same(colour(a, d), colour(b, c)))
                            alive[d] = false;
                    }

        std::vector<Vertex> survivors;
        for (std::size_t i = 0; i < k; ++i)
            if (alive[i]) survivors.push_back(sample[i]);
        if (survivors.size() < ell) continue;
        const auto cliques = enumerate_cliques(g, ell, VertexSet(survivors), 1);
        if (cliques.empty()) continue;
        CanonicalWitness w = make_witness(phi, cliques.front());
        if (!w.tags.contains(PatternTag::Rainbow))
            throw InvariantBreach("rainbow_by_sampling: surviving clique is not rainbow");
        res.witness = std::move(w);
        return res;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Driver

ErResult er_find(const EdgeColouring& phi, unsigned ell, std::uint64_t seed) {
    const OrderedGraph& g = phi.host();
    if (g.n() < ell) throw std::invalid_argument("er_find: need n >= ell");
    const ErConstants consts = ErConstants::defaults(ell);
    SequenceResult seq = build_sequence(phi, consts);

    if (const auto* full = std::get_if<NeighbourhoodSequence>(&seq)) {
        CanonicalWitness w = extract_canonical(phi, *full, ell);
        return ErResult{std::move(w), ErBranch::Sequence, std::move(seq)};
    }

    const auto& signal = std::get<BoundedSubsetSignal>(seq);
    if (signal.surviving.size() >= ell) {
        try {
            auto sampled = rainbow_by_sampling(phi, signal.surviving, ell, consts.delta, seed);
            if (sampled.witness) return ErResult{std::move(*sampled.witness), ErBranch::RainbowSampling, std::move(seq)};
        } catch (const NotBounded&) {
            // fall through to the exhaustive search
        }
    }

    auto outcome = find_canonical_copy(phi, ell);
    if (!outcome.found) throw NoWitness("er_find: colouring has no canonical K_" + std::to_string(ell));
    return ErResult{std::move(*outcome.witness), ErBranch::ExhaustiveFallback, std::move(seq)};
}

}  // namespace canonram
