#pragma once

#include <canonram/graph.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace canonram {

/// Symmetric real weights on the pairs of [n], zero diagonal.
class WeightedGraph {
public:
    WeightedGraph() = default;
    explicit WeightedGraph(Vertex n);

    static WeightedGraph constant(Vertex n, double c);
    /// Indicator 1_G of the edge set.
    static WeightedGraph indicator(const OrderedGraph& g);

    Vertex n() const noexcept { return n_; }
    double at(Vertex u, Vertex v) const { return w_[index(u, v)]; }
    /// Sets w(u,v) = w(v,u). Throws invalid_argument on u == v or non-finite w.
    void set(Vertex u, Vertex v, double w);

    /// True when every weight lies in [lo, hi].
    bool within(double lo, double hi) const;
    /// True when every weight is 0 or 1.
    bool is_indicator() const;
    double max_abs() const;

    WeightedGraph operator-(const WeightedGraph& other) const;
    WeightedGraph operator+(const WeightedGraph& other) const;
    WeightedGraph scaled(double alpha) const;

    bool operator==(const WeightedGraph&) const = default;

private:
    std::size_t index(Vertex u, Vertex v) const {
        return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
    }

    Vertex n_ = 0;
    std::vector<double> w_;  // row-major n x n
};

/// A small fixed graph H on {1..ell}.
struct PatternGraph {
    unsigned ell = 0;
    std::vector<std::pair<unsigned, unsigned>> edges;  // u < v, sorted, no repeats

    PatternGraph() = default;
    PatternGraph(unsigned ell, std::vector<std::pair<unsigned, unsigned>> edges);

    static PatternGraph complete(unsigned ell);
    static PatternGraph cycle(unsigned ell);

    std::size_t edge_count() const noexcept { return edges.size(); }
    bool is_complete() const noexcept { return edges.size() == static_cast<std::size_t>(ell) * (ell - 1) / 2; }
};

/// sum over u in U, w in W of f(uw), diagonal terms zero.
double eval_e(const WeightedGraph& f, const VertexSet& u, const VertexSet& w);

inline constexpr Vertex kCutnormExactMaxN = 22;

/// n^-2 max over U, W of |e_f(U, W)| by a Gray-code scan of every U.
/// Throws TooLarge above kCutnormExactMaxN.
double cutnorm_exact(const WeightedGraph& f);

/// Alternating local search over (U, W) from random starts; a lower bound
/// on cutnorm_exact.
double cutnorm_heuristic(const WeightedGraph& f, unsigned restarts, std::uint64_t seed);

inline constexpr double kHomDensityWeightCap = 1e6;
inline constexpr unsigned kHomDensityMaxEll = 8;

/// Lambda_H(f) = n^-ell sum over vertex ell-tuples of prod over edges of f.
/// Indicator weights with complete H use the clique counter. Throws
/// RangeViolation for weights above kHomDensityWeightCap in absolute value
/// and TooLarge for patterns above kHomDensityMaxEll vertices.
double hom_density(const WeightedGraph& f, const PatternGraph& h);

inline constexpr double kLemmaSlack = 1e-9;

struct LemmaCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
};

/// |Lambda_H(f) - Lambda_H(g)| against 2 e(H) ||f - g||. Throws
/// RangeViolation unless both arguments lie in [0, 1].
LemmaCheck counting_lemma_check(const WeightedGraph& f, const WeightedGraph& g, const PatternGraph& h);

/// Each pair kept independently with probability d(uv), pairs drawn in lexicographic order.
OrderedGraph sample_graph_from_weights(const WeightedGraph& d, std::uint64_t seed);

/// d_f(v, U) = sum over u in U \ {v} of f(vu).
double weighted_degree(const WeightedGraph& f, Vertex v, const VertexSet& u);

struct DegreeLemmaResult {
    std::size_t violations = 0;
    double bound = 0.0;     // eps^{1/3} n
    double measured = 0.0;  // cutnorm_exact(f - g)
    bool holds = true;
};

/// Counts v with |d_f(v,U) - d_g(v,U)| > eps^{1/3} |U|. Throws
/// HypothesisViolated when ||f - g|| > eps or |U| <= 2 eps^{1/3} n.
DegreeLemmaResult degree_lemma_check(const WeightedGraph& f, const WeightedGraph& g, const VertexSet& u, double eps);

/// Reduced fraction with positive denominator.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t num, std::int64_t den);

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    std::string to_string() const;

    bool operator==(const Rational&) const = default;
    std::strong_ordering operator<=>(const Rational& other) const;
};

/// (e(H) - 1) / (v(H) - 2). Throws TooFewVertices below three vertices.
Rational two_density(const PatternGraph& h);

inline constexpr unsigned kBalancedMaxEll = 8;

/// Every proper subgraph on at least three vertices has strictly smaller
/// 2-density. Throws TooLarge above kBalancedMaxEll vertices.
bool is_strictly_balanced(const PatternGraph& h);

}  // namespace canonram
