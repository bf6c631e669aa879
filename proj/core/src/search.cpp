#include <canonram/errors.hpp>
#include <canonram/search.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace canonram {

SearchOutcome find_canonical_copy(const EdgeColouring& phi, unsigned ell, const std::optional<VertexSet>& within) {
    if (ell < 3) throw std::invalid_argument("find_canonical_copy: ell must be at least 3");
    SearchOutcome out;
    for_each_clique(phi.host(), ell, within, [&](std::span<const Vertex> clique) {
        ++out.nodes_explored;
        if (!classify_copy(phi, clique).is_canonical()) return true;
        out.found = true;
        out.witness = make_witness(phi, clique);
        return false;
    });
    return out;
}

namespace {

struct RainbowSearch {
    const EdgeColouring& phi;
    const OrderedGraph& g;
    unsigned ell;
    std::vector<Vertex> stack;
    std::vector<Colour> used;
    std::uint64_t nodes = 0;

    bool recurse(const Bitset& cand) {
        if (stack.size() == ell) return true;
        if (cand.count() < ell - stack.size()) return false;
        bool done = false;
        cand.for_each([&](std::size_t i) {
            const auto v = static_cast<Vertex>(i);
            ++nodes;
            const std::size_t mark = used.size();
            bool ok = true;
            for (Vertex s : stack) {
                const Colour c = phi.at(s, v);
                if (std::find(used.begin(), used.end(), c) != used.end()) {
                    ok = false;
                    break;
                }
                used.push_back(c);
            }
            if (ok) {
                Bitset next = cand & g.row(v);
                next.clear_through(v);
                stack.push_back(v);
                if (recurse(next)) {
                    done = true;
                    return false;
                }
                stack.pop_back();
            }
            used.resize(mark);
            return true;
        });
        return done;
    }
};

}  // namespace

SearchOutcome find_rainbow_copy(const EdgeColouring& phi, unsigned ell, const std::optional<VertexSet>& within) {
    if (ell < 3) throw std::invalid_argument("find_rainbow_copy: ell must be at least 3");
    const OrderedGraph& g = phi.host();
    RainbowSearch search{phi, g, ell, {}, {}, 0};
    search.stack.reserve(ell);
    Bitset cand = within ? within->mask(g.n()) : VertexSet::range(g.n()).mask(g.n());
    if (cand.size() > 0) cand.reset(0);
    SearchOutcome out;
    if (g.n() > 0 && search.recurse(cand)) {
        out.found = true;
        out.witness = make_witness(phi, search.stack);
    }
    out.nodes_explored = search.nodes;
    return out;
}

// ---------------------------------------------------------------------------
// Classical arrow relation

namespace {

struct CliqueIndex {
    std::vector<std::vector<std::uint32_t>> clique_edges;  // edge ids per clique
    std::vector<std::vector<std::uint32_t>> edge_cliques;  // clique ids per edge
};

CliqueIndex index_cliques(const OrderedGraph& g, unsigned ell) {
    CliqueIndex idx;
    idx.edge_cliques.resize(g.edge_count());
    for_each_clique(g, ell, std::nullopt, [&](std::span<const Vertex> c) {
        std::vector<std::uint32_t> ids;
        ids.reserve(c.size() * (c.size() - 1) / 2);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j)
                ids.push_back(static_cast<std::uint32_t>(*g.edge_id(c[i], c[j])));
        const auto q = static_cast<std::uint32_t>(idx.clique_edges.size());
        for (auto e : ids) idx.edge_cliques[e].push_back(q);
        idx.clique_edges.push_back(std::move(ids));
        return true;
    });
    return idx;
}

constexpr int kUncoloured = -1;

class ArrowSolver {
public:
    ArrowSolver(const OrderedGraph& g, const ArrowQuery& q, std::uint64_t budget)
        : idx_(index_cliques(g, q.ell)), r_(q.r), budget_(budget) {
        const std::size_t m = g.edge_count();
        colour_.assign(m, kUncoloured);
        const std::uint64_t full = q.r == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << q.r) - 1);
        domain_.assign(m, full);
    }

    ArrowResult solve() {
        ArrowResult res;
        if (idx_.clique_edges.empty()) {
            res.status = ArrowStatus::DoesNotArrow;
            res.witness = std::vector<Colour>(colour_.size(), 0);
            return res;
        }
        const auto outcome = search();
        res.nodes_explored = nodes_;
        if (outcome == Outcome::Found) {
            res.status = ArrowStatus::DoesNotArrow;
            std::vector<Colour> w(colour_.size());
            for (std::size_t e = 0; e < w.size(); ++e)
                w[e] = colour_[e] == kUncoloured ? static_cast<Colour>(std::countr_zero(domain_[e]))
                                                 : static_cast<Colour>(colour_[e]);
            res.witness = std::move(w);
        } else if (outcome == Outcome::Exhausted) {
            res.status = ArrowStatus::Arrows;
        } else {
            res.status = ArrowStatus::ResourceLimit;
        }
        return res;
    }

private:
    enum class Outcome { Found, Exhausted, OutOfBudget };

    struct TrailEntry {
        std::uint32_t edge;
        std::uint64_t domain;
        int colour;
    };

    Outcome search() {
        const auto e = pick_edge();
        if (!e) return Outcome::Found;
        int max_used = -1;
        for (int c : colour_) max_used = std::max(max_used, c);
        const std::uint64_t dom = domain_[*e];
        for (unsigned c = 0; c < r_; ++c) {
            if (!((dom >> c) & 1U)) continue;
            if (static_cast<int>(c) > max_used + 1) break;  // unused colours are interchangeable
            if (++nodes_ > budget_) return Outcome::OutOfBudget;
            const std::size_t mark = trail_.size();
            if (assign_and_propagate(*e, static_cast<int>(c))) {
                const auto sub = search();
                if (sub != Outcome::Exhausted) return sub;
            }
            undo(mark);
        }
        return Outcome::Exhausted;
    }

    std::optional<std::uint32_t> pick_edge() const {
        std::optional<std::uint32_t> best;
        int best_size = 0;
        std::size_t best_deg = 0;
        for (std::uint32_t e = 0; e < colour_.size(); ++e) {
            if (colour_[e] != kUncoloured || idx_.edge_cliques[e].empty()) continue;
            const int size = std::popcount(domain_[e]);
            const std::size_t deg = idx_.edge_cliques[e].size();
            if (!best || size < best_size || (size == best_size && deg > best_deg)) {
                best = e;
                best_size = size;
                best_deg = deg;
            }
        }
        return best;
    }

    void set_domain(std::uint32_t e, std::uint64_t dom, int colour) {
        trail_.push_back({e, domain_[e], colour_[e]});
        domain_[e] = dom;
        colour_[e] = colour;
    }

    void undo(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto t = trail_.back();
            trail_.pop_back();
            domain_[t.edge] = t.domain;
            colour_[t.edge] = t.colour;
        }
    }

    bool assign_and_propagate(std::uint32_t first, int c) {
        std::vector<std::pair<std::uint32_t, int>> queue{{first, c}};
        while (!queue.empty()) {
            const auto [e, colour] = queue.back();
            queue.pop_back();
            if (colour_[e] != kUncoloured) {
                if (colour_[e] != colour) return false;
                continue;
            }
            if (!((domain_[e] >> colour) & 1U)) return false;
            set_domain(e, std::uint64_t{1} << colour, colour);
            for (auto q : idx_.edge_cliques[e]) {
                int shared = kUncoloured;
                bool mono = true;
                std::optional<std::uint32_t> free_edge;
                std::size_t free_count = 0;
                for (auto f : idx_.clique_edges[q]) {
                    if (colour_[f] == kUncoloured) {
                        ++free_count;
                        free_edge = f;
                        continue;
                    }
                    if (shared == kUncoloured)
                        shared = colour_[f];
                    else if (shared != colour_[f])
                        mono = false;
                }
                if (!mono || free_count > 1) continue;
                if (free_count == 0) return false;  // monochromatic clique
                const std::uint64_t dom = domain_[*free_edge] & ~(std::uint64_t{1} << shared);
                if (dom == domain_[*free_edge]) continue;
                if (dom == 0) return false;
                set_domain(*free_edge, dom, kUncoloured);
                if (std::popcount(dom) == 1) queue.emplace_back(*free_edge, std::countr_zero(dom));
            }
        }
        return true;
    }

    CliqueIndex idx_;
    unsigned r_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> colour_;
    std::vector<std::uint64_t> domain_;
    std::vector<TrailEntry> trail_;
};

}  // namespace

ArrowResult arrows_mono(const OrderedGraph& g, const ArrowQuery& q, std::uint64_t budget) {
    if (q.ell < 3) throw std::invalid_argument("arrows_mono: ell must be at least 3");
    if (q.r < 2 || q.r > 64) throw std::invalid_argument("arrows_mono: r must lie in [2, 64]");
    return ArrowSolver(g, q, budget).solve();
}

// ---------------------------------------------------------------------------
// Canonical arrow by exhaustive partition enumeration

CanonicalArrowResult canonical_arrow_exhaustive(const OrderedGraph& g, unsigned ell) {
    if (ell < 3) throw std::invalid_argument("canonical_arrow_exhaustive: ell must be at least 3");
    if (g.edge_count() > kCanonicalArrowMaxEdges)
        throw TooManyEdges("canonical_arrow_exhaustive: " + std::to_string(g.edge_count()) + " edges exceeds guard of " +
                           std::to_string(kCanonicalArrowMaxEdges));
    const CliqueIndex idx = index_cliques(g, ell);
    CanonicalArrowResult res;
    if (idx.clique_edges.empty()) {
        res.partitions_checked = 1;  // any colouring is a counterexample
        res.counterexample = std::vector<Colour>(g.edge_count(), 0);
        return res;
    }
    // Position (i, j) of the clique maps to the k-th entry of clique_edges,
    // matching the row-major i < j order used when indexing.
    std::vector<std::size_t> pos(static_cast<std::size_t>(ell) * ell, 0);
    for (std::size_t i = 0, k = 0; i < ell; ++i)
        for (std::size_t j = i + 1; j < ell; ++j) pos[i * ell + j] = k++;

    bool all_canonical = true;
    res.partitions_checked = for_each_restricted_growth_string(g.edge_count(), [&](const std::vector<Colour>& rgs) {
        for (const auto& edges : idx.clique_edges) {
            const auto tags = detail::classify_positions(
                ell, [&](std::size_t i, std::size_t j) { return rgs[edges[pos[i * ell + j]]]; });
            if (tags.is_canonical()) return true;
        }
        all_canonical = false;
        res.counterexample = rgs;
        return false;
    });
    res.arrows = all_canonical;
    return res;
}

}  // namespace canonram
