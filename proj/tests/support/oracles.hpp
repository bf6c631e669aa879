#pragma once

// Slow reference implementations and seeded generators shared by the unit
// and acceptance tests. Nothing here calls into the library's algorithms
// beyond the basic containers.

#include <canonram/colouring.hpp>
#include <canonram/cutnorm.hpp>
#include <canonram/graph.hpp>
#include <canonram/random.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <vector>

namespace oracle {

using canonram::Colour;
using canonram::Edge;
using canonram::OrderedGraph;
using canonram::Vertex;

inline canonram::Rng rng_for(std::uint64_t seed) {
    return canonram::Rng(canonram::mix64(seed ^ 0x7e57'0000'0000'0000ULL));
}

inline OrderedGraph random_graph(Vertex n, double p, canonram::Rng& rng) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (canonram::uniform01(rng) < p) edges.emplace_back(u, v);
    return OrderedGraph(n, std::move(edges));
}

inline std::shared_ptr<const OrderedGraph> shared(OrderedGraph g) {
    return std::make_shared<const OrderedGraph>(std::move(g));
}

inline canonram::EdgeColouring random_colouring(std::shared_ptr<const OrderedGraph> g, std::uint64_t r,
                                                canonram::Rng& rng) {
    std::vector<Colour> c(g->edge_count());
    for (auto& x : c) x = canonram::uniform_below(rng, r);
    return canonram::EdgeColouring(std::move(g), std::move(c));
}

/// Every k-subset of {1..n} in lexicographic order.
template <class Fn>
void for_each_subset(Vertex n, unsigned k, Fn&& fn) {
    if (k > n) return;
    std::vector<Vertex> s(k);
    for (unsigned i = 0; i < k; ++i) s[i] = i + 1;
    for (;;) {
        fn(static_cast<const std::vector<Vertex>&>(s));
        int i = static_cast<int>(k) - 1;
        while (i >= 0 && s[i] == n - k + 1 + static_cast<unsigned>(i)) --i;
        if (i < 0) return;
        ++s[i];
        for (unsigned j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

inline bool is_clique(const OrderedGraph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

inline std::vector<std::vector<Vertex>> cliques(const OrderedGraph& g, unsigned k) {
    std::vector<std::vector<Vertex>> out;
    for_each_subset(g.n(), k, [&](const std::vector<Vertex>& s) {
        if (is_clique(g, s)) out.push_back(s);
    });
    return out;
}

inline std::size_t shared_count(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t c = 0;
    for (Vertex x : a) c += std::count(b.begin(), b.end(), x);
    return c;
}

inline bool has_overlap(const OrderedGraph& g, unsigned ell) {
    const auto cs = cliques(g, ell);
    for (std::size_t i = 0; i < cs.size(); ++i)
        for (std::size_t j = i + 1; j < cs.size(); ++j)
            if (shared_count(cs[i], cs[j]) >= 3) return true;
    return false;
}

/// Direct simulation of the lexicographic clean scan: an edge goes when two
/// distinct ell-cliques of the current graph contain it and share >= 3 vertices.
inline OrderedGraph clean(const OrderedGraph& g, unsigned ell) {
    std::set<Edge> alive(g.edges().begin(), g.edges().end());
    auto adjacent = [&](Vertex a, Vertex b) { return alive.count(Edge(a, b)) > 0; };
    for (const Edge& e : g.edges()) {
        std::vector<std::vector<Vertex>> with_e;
        for_each_subset(g.n(), ell, [&](const std::vector<Vertex>& s) {
            if (std::find(s.begin(), s.end(), e.u) == s.end() || std::find(s.begin(), s.end(), e.v) == s.end())
                return;
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j)
                    if (!adjacent(s[i], s[j])) return;
            with_e.push_back(s);
        });
        bool drop = false;
        for (std::size_t i = 0; i < with_e.size() && !drop; ++i)
            for (std::size_t j = i + 1; j < with_e.size() && !drop; ++j)
                drop = shared_count(with_e[i], with_e[j]) >= 3;
        if (drop) alive.erase(e);
    }
    return OrderedGraph(g.n(), std::vector<Edge>(alive.begin(), alive.end()));
}

struct Tags {
    bool mono = false, rainbow = false, min = false, max = false, ns_min = false, ns_max = false;
};

/// Pattern predicates straight from their definitions on the edge list.
template <class ColourOf>
Tags classify(const std::vector<Vertex>& s, ColourOf&& colour) {
    std::vector<std::pair<Edge, Colour>> es;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) es.push_back({Edge(s[i], s[j]), colour(s[i], s[j])});
    Tags t;
    t.mono = t.rainbow = t.min = t.max = t.ns_min = t.ns_max = true;
    for (const auto& [e, c] : es) {
        for (const auto& [f, d] : es) {
            if (e == f) continue;
            const bool same = c == d;
            if (!same) t.mono = false;
            if (same) t.rainbow = false;
            if ((e.u == f.u) != same) t.min = false;
            if ((e.v == f.v) != same) t.max = false;
            if (e.u == f.u && !same) t.ns_min = false;
            if (e.v == f.v && !same) t.ns_max = false;
        }
    }
    return t;
}

inline Tags classify(const canonram::EdgeColouring& phi, const std::vector<Vertex>& s) {
    return classify(s, [&](Vertex a, Vertex b) { return phi.at(a, b); });
}

inline bool canonical(const Tags& t) { return t.mono || t.rainbow || t.min || t.max; }

/// Every r-colouring of E(G) has a monochromatic ell-clique (r^m enumeration).
inline bool arrows(const OrderedGraph& g, unsigned ell, unsigned r) {
    const auto cs = cliques(g, ell);
    std::vector<std::vector<std::size_t>> ids;
    for (const auto& s : cs) {
        std::vector<std::size_t> e;
        for (std::size_t i = 0; i < s.size(); ++i)
            for (std::size_t j = i + 1; j < s.size(); ++j) e.push_back(*g.edge_id(s[i], s[j]));
        ids.push_back(e);
    }
    const std::size_t m = g.edge_count();
    std::vector<unsigned> col(m, 0);
    for (;;) {
        bool mono_found = false;
        for (const auto& e : ids) {
            bool same = true;
            for (auto x : e) same = same && col[x] == col[e.front()];
            if (same) {
                mono_found = true;
                break;
            }
        }
        if (!mono_found) return false;
        std::size_t k = 0;
        while (k < m && ++col[k] == r) col[k++] = 0;
        if (k == m) return true;
    }
}

/// n^-2 max over all (U, W) of |e_f(U, W)|, both sets enumerated.
inline double cutnorm(const canonram::WeightedGraph& f) {
    const Vertex n = f.n();
    long double best = 0;
    for (std::uint32_t u = 0; u < (1U << n); ++u) {
        for (std::uint32_t w = 0; w < (1U << n); ++w) {
            long double s = 0;
            for (Vertex a = 1; a <= n; ++a)
                for (Vertex b = 1; b <= n; ++b)
                    if (a != b && ((u >> (a - 1)) & 1U) && ((w >> (b - 1)) & 1U)) s += f.at(a, b);
            best = std::max(best, std::fabs(s));
        }
    }
    return static_cast<double>(best / (static_cast<long double>(n) * n));
}

/// n^-ell sum over all ell-tuples (odometer) of the edge-weight product.
inline double hom_density(const canonram::WeightedGraph& f, const canonram::PatternGraph& h) {
    const Vertex n = f.n();
    std::vector<Vertex> t(h.ell, 1);
    long double s = 0;
    for (;;) {
        long double prod = 1;
        for (auto [a, b] : h.edges) prod *= t[a - 1] == t[b - 1] ? 0.0L : f.at(t[a - 1], t[b - 1]);
        s += prod;
        std::size_t k = 0;
        while (k < t.size() && ++t[k] > n) t[k++] = 1;
        if (k == t.size()) break;
    }
    return static_cast<double>(s / std::pow(static_cast<long double>(n), h.ell));
}

inline canonram::WeightedGraph random_weights(Vertex n, canonram::Rng& rng, double lo = 0.0, double hi = 1.0) {
    canonram::WeightedGraph f(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) f.set(u, v, lo + (hi - lo) * canonram::uniform01(rng));
    return f;
}

/// Weights k/256 for integer k in [lo*256, hi*256]; sums are exact in long double.
inline canonram::WeightedGraph dyadic_weights(Vertex n, canonram::Rng& rng, int lo = -256, int hi = 256) {
    canonram::WeightedGraph f(n);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            f.set(u, v, static_cast<double>(lo + static_cast<int>(canonram::uniform_below(rng, hi - lo + 1))) / 256.0);
    return f;
}

/// Labelled transversal cliques (one vertex per class, in class order) whose
/// edge (p0,p1) and edge (p2,p3) share a colour, enumerated directly.
inline std::uint64_t transversal_pairs(const canonram::EdgeColouring& phi,
                                       const std::vector<std::vector<Vertex>>& classes, int a0, int a1, int b0,
                                       int b1) {
    const auto& g = phi.host();
    std::uint64_t count = 0;
    std::vector<Vertex> pick(classes.size());
    std::vector<std::size_t> idx(classes.size(), 0);
    for (;;) {
        for (std::size_t i = 0; i < classes.size(); ++i) pick[i] = classes[i][idx[i]];
        bool clique = true;
        for (std::size_t i = 0; i < pick.size() && clique; ++i)
            for (std::size_t j = i + 1; j < pick.size() && clique; ++j) clique = g.adjacent(pick[i], pick[j]);
        if (clique && phi.at(pick[a0], pick[a1]) == phi.at(pick[b0], pick[b1])) ++count;
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == classes[k].size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return count;
}

}  // namespace oracle
