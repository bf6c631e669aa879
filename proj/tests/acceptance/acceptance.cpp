// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Reference values come from the slow
// implementations in support/oracles.hpp.

#include <canonram/adversaries.hpp>
#include <canonram/colouring.hpp>
#include <canonram/cutnorm.hpp>
#include <canonram/erdos_rado.hpp>
#include <canonram/errors.hpp>
#include <canonram/graph.hpp>
#include <canonram/harness.hpp>
#include <canonram/search.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "support/oracles.hpp"

using namespace canonram;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

std::string format(const char* fmt, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, fmt, args...);
    return buf;
}

// --------------------------------------------------------------------------

Outcome exhaustive_k4() {
    const auto res = canonical_arrow_exhaustive(OrderedGraph::complete(4), 3);
    return {res.arrows && res.partitions_checked == 203,
            format("arrows=%d partitions=%llu", res.arrows ? 1 : 0,
                   static_cast<unsigned long long>(res.partitions_checked))};
}

Outcome classical_arrows() {
    const auto k6 = OrderedGraph::complete(6);
    const auto k5 = OrderedGraph::complete(5);
    const bool a6 = arrows_mono(k6, {3, 2}).status == ArrowStatus::Arrows;
    const auto r5 = arrows_mono(k5, {3, 2});
    const bool a5 = r5.status == ArrowStatus::Arrows;
    const bool o6 = oracle::arrows(k6, 3, 2);
    const bool o5 = oracle::arrows(k5, 3, 2);
    bool witness_ok = r5.witness.has_value();
    if (witness_ok) {
        const EdgeColouring phi(oracle::shared(k5), *r5.witness);
        for (const auto& s : oracle::cliques(k5, 3)) witness_ok = witness_ok && !oracle::classify(phi, s).mono;
    }
    return {a6 && !a5 && o6 && !o5 && witness_ok,
            format("K6: %d (enum %d), K5: %d (enum %d), K5 witness valid: %d", a6, o6, a5, o5, witness_ok)};
}

Outcome clique_concentration() {
    const int seeds = 200;
    std::vector<double> xs;
    for (int s = 0; s < seeds; ++s)
        xs.push_back(static_cast<double>(count_cliques(gnp_generate(64, 0.5, static_cast<std::uint64_t>(s)).graph, 4)));
    double mean = 0;
    for (double x : xs) mean += x;
    mean /= seeds;
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= seeds - 1;
    const double se = std::sqrt(var / seeds);
    const double expected = 64.0 * 63 * 62 * 61 * std::pow(0.5, 6);
    return {std::abs(mean - expected) <= 3 * se,
            format("mean=%.1f expected=%.1f se=%.1f z=%.2f", mean, expected, se, (mean - expected) / se)};
}

Outcome counting_lemma() {
    auto rng = oracle::rng_for(4004);
    const auto h = PatternGraph::complete(3);
    int violations = 0;
    double worst = -1e300;
    for (int t = 0; t < 1000; ++t) {
        const auto f = oracle::random_weights(10, rng);
        const auto g = oracle::random_weights(10, rng);
        const auto r = counting_lemma_check(f, g, h);
        // Independent recomputation of both sides.
        const double lhs = std::abs(oracle::hom_density(f, h) - oracle::hom_density(g, h));
        const double rhs = 6.0 * cutnorm_exact(f - g);
        if (!(lhs <= rhs + 1e-9) || !r.holds || std::abs(r.lhs - lhs) > 1e-12 || std::abs(r.rhs - rhs) > 1e-12)
            ++violations;
        worst = std::max(worst, lhs - rhs);
    }
    return {violations == 0, format("violations=%d max(lhs-rhs)=%.4f", violations, worst)};
}

Outcome degree_lemma() {
    auto rng = oracle::rng_for(5005);
    const Vertex n = 12;
    const double noise_levels[] = {0.02, 0.1, 0.3, 1.0};
    int instances = 0, violations = 0, resampled = 0;
    std::size_t flagged = 0;
    while (instances < 500) {
        const auto f = oracle::random_weights(n, rng);
        const double sigma = noise_levels[uniform_below(rng, 4)];
        // Half the instances spread the noise over all pairs, half push whole
        // rows of one or two vertices, which is what moves individual degrees.
        const bool rows = bernoulli(rng, 0.5);
        const Vertex hot1 = 1 + static_cast<Vertex>(uniform_below(rng, n));
        const Vertex hot2 = 1 + static_cast<Vertex>(uniform_below(rng, n));
        WeightedGraph g(n);
        for (Vertex u = 1; u <= n; ++u)
            for (Vertex v = u + 1; v <= n; ++v) {
                double d = sigma * (2 * uniform01(rng) - 1);
                if (rows) d = (u == hot1 || v == hot1 || u == hot2 || v == hot2) ? sigma : 0.0;
                g.set(u, v, std::clamp(f.at(u, v) + d, 0.0, 1.0));
            }
        const double eps = cutnorm_exact(f - g);
        const double root = std::cbrt(eps);
        const auto min_size = static_cast<std::size_t>(std::floor(2 * root * n)) + 1;
        if (min_size > n) {
            ++resampled;
            continue;
        }
        const std::size_t size = min_size + uniform_below(rng, n - min_size + 1);
        std::vector<Vertex> perm(n);
        for (Vertex v = 0; v < n; ++v) perm[v] = v + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        const VertexSet u(std::vector<Vertex>(perm.begin(), perm.begin() + static_cast<long>(size)));
        const auto res = degree_lemma_check(f, g, u, eps);
        // Recount directly.
        std::size_t bad = 0;
        for (Vertex v = 1; v <= n; ++v) {
            double df = 0, dg = 0;
            for (Vertex w : u)
                if (w != v) df += f.at(v, w), dg += g.at(v, w);
            if (std::abs(df - dg) > root * static_cast<double>(size) + kLemmaSlack) ++bad;
        }
        if (!res.holds || bad != res.violations || static_cast<double>(bad) > root * n + kLemmaSlack) ++violations;
        flagged += bad;
        ++instances;
    }
    return {violations == 0, format("instances=%d violations=%d flagged_vertices=%zu resampled=%d", instances,
                                    violations, flagged, resampled)};
}

Outcome clean_invariants() {
    int bad = 0;
    std::size_t removed = 0, pairs = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        const auto g = gnp_generate(50, 0.3, s).graph;
        const auto c = clean_subgraph(g, 4);
        removed += g.edge_count() - c.edge_count();
        const auto k4 = oracle::cliques(c, 4);
        pairs += k4.size() * (k4.size() - 1) / 2;
        const bool ok = oracle::cliques(c, 5).empty() && !oracle::has_overlap(c, 4) && clean_subgraph(c, 4) == c;
        if (!ok) ++bad;
    }
    return {bad == 0, format("bad_samples=%d edges_removed=%zu K4_pairs_checked=%zu", bad, removed, pairs)};
}

ExperimentConfig threshold_config() {
    ExperimentConfig cfg;
    cfg.ell = 4;
    cfg.n_grid = {60, 120};
    cfg.c_grid = {0.3, 0.6, 1.0, 1.5, 2.5};
    cfg.exponent_mode = ExponentMode::Canonical;
    cfg.adversary.kind = AdversaryKind::GreedyProper;
    cfg.predicate = Predicate::Rainbow;
    cfg.trials = 200;
    cfg.master_seed = 1;
    return cfg;
}

SweepResult threshold_sweep;

Outcome threshold_probe() {
    const auto cfg = threshold_config();
    threshold_sweep = run_sweep(cfg, 1);
    const auto& sm = threshold_sweep.summary;
    bool monotone = true;
    std::string rates;
    for (std::size_t i = 0; i < sm.size(); ++i) {
        rates += format("%s n=%u C=%g %.3f", i ? ";" : "", sm[i].n, sm[i].c, sm[i].p_hat);
        if (i + 1 < sm.size() && sm[i + 1].n == sm[i].n && sm[i + 1].p_hat < sm[i].p_hat &&
            sm[i + 1].ci_hi < sm[i].ci_lo)
            monotone = false;
    }
    double lo = -1, hi = -1;
    for (const auto& s : sm) {
        if (s.n != 120) continue;
        if (s.c == 0.3) lo = s.p_hat;
        if (s.c == 2.5) hi = s.p_hat;
    }
    return {monotone && lo >= 0 && lo < 0.2 && hi > 0.8,
            format("monotone=%d low=%.3f high=%.3f |", monotone, lo, hi) + rates};
}

Outcome er_round_trip() {
    const std::uint64_t palettes[] = {2, 5, 30, 435};
    auto host = oracle::shared(OrderedGraph::complete(30));
    auto rng = oracle::rng_for(8008);
    int failures = 0, seq_runs = 0, sampled = 0, fallback = 0;
    for (int t = 0; t < 10000; ++t) {
        AdversarySpec spec;
        spec.kind = AdversaryKind::RandomR;
        spec.r = palettes[uniform_below(rng, 4)];
        spec.seed = rng();
        const auto phi = generate_colouring(host, spec);
        try {
            const auto res = er_find(phi, 3, spec.seed);
            const auto tags = classify_copy(phi, res.witness.vertices);
            bool ok = verify_witness(phi, res.witness) && tags == res.witness.tags && tags.is_canonical();
            if (res.branch == ErBranch::Sequence) {
                ++seq_runs;
                const auto& seq = std::get<NeighbourhoodSequence>(res.sequence);
                for (std::size_t i = 0; i < seq.steps.size(); ++i)
                    ok = ok && static_cast<double>(seq.surviving[i].size()) >
                                   std::pow(seq.delta / 2, static_cast<double>(i + 1)) * 30;
            } else if (res.branch == ErBranch::RainbowSampling) {
                ++sampled;
            } else {
                ++fallback;
            }
            if (!ok) ++failures;
        } catch (const std::exception&) {
            ++failures;
        }
    }
    return {failures == 0, format("failures=%d sequence=%d rainbow_sampling=%d exhaustive=%d", failures, seq_runs,
                                  sampled, fallback)};
}

Outcome heuristic_soundness() {
    auto rng = oracle::rng_for(9009);
    int violations = 0, equal = 0;
    for (int t = 0; t < 1000; ++t) {
        const Vertex n = 4 + static_cast<Vertex>(uniform_below(rng, 9));
        const auto f = oracle::dyadic_weights(n, rng);
        const double h = cutnorm_heuristic(f, 8, static_cast<std::uint64_t>(t));
        const double e = cutnorm_exact(f);
        if (h > e) ++violations;
        if (h == e) ++equal;
    }
    return {violations == 0, format("violations=%d equality=%d/1000", violations, equal)};
}

Outcome nonrainbow_counters() {
    auto rng = oracle::rng_for(1010);
    int mismatches = 0;
    std::uint64_t total_cherry = 0, total_matching = 0;
    for (int t = 0; t < 100; ++t) {
        const double p = 0.5 + 0.5 * uniform01(rng);
        auto g = oracle::shared(oracle::random_graph(20, p, rng));
        const auto phi = oracle::random_colouring(g, 2 + uniform_below(rng, 4), rng);
        std::vector<Vertex> perm(20);
        for (Vertex v = 0; v < 20; ++v) perm[v] = v + 1;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::vector<Vertex>> raw(4);
        std::vector<VertexSet> classes;
        for (int i = 0; i < 4; ++i) {
            raw[i].assign(perm.begin() + 5 * i, perm.begin() + 5 * i + 5);
            classes.emplace_back(raw[i]);
        }
        const auto cherry = nonrainbow_cherry_count(phi, classes);
        const auto matching = nonrainbow_matching_count(phi, classes);
        if (cherry != oracle::transversal_pairs(phi, raw, 0, 1, 0, 2)) ++mismatches;
        if (matching != oracle::transversal_pairs(phi, raw, 0, 1, 2, 3)) ++mismatches;
        total_cherry += cherry;
        total_matching += matching;
    }
    return {mismatches == 0, format("mismatches=%d cherry_total=%llu matching_total=%llu", mismatches,
                                    static_cast<unsigned long long>(total_cherry),
                                    static_cast<unsigned long long>(total_matching))};
}

std::string csv_without_elapsed(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    write_records_csv(out, records);
    std::istringstream in(out.str());
    std::string line, stripped;
    while (std::getline(in, line)) stripped += line.substr(0, line.rfind(',')) + "\n";
    return stripped;
}

Outcome reproducibility() {
    if (threshold_sweep.records.empty()) threshold_sweep = run_sweep(threshold_config(), 1);
    // Re-run from the serialised config, on a different thread count.
    const auto cfg = ExperimentConfig::from_json(nlohmann::json::parse(threshold_config().to_json().dump()));
    const auto again = run_sweep(cfg, 2);
    const std::string a = csv_without_elapsed(threshold_sweep.records);
    const std::string b = csv_without_elapsed(again.records);
    std::ostringstream sa, sb;
    write_summary_csv(sa, threshold_sweep.summary);
    write_summary_csv(sb, again.summary);
    return {a == b && sa.str() == sb.str(),
            format("records=%zu bytes=%zu identical=%d summary_identical=%d", again.records.size(), a.size(), a == b,
                   sa.str() == sb.str())};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "exhaustive K4 canonical triangle", 1, exhaustive_k4},
        {2, "classical arrows K6 / K5", 5, classical_arrows},
        {3, "K4 count concentration in G(64, 1/2)", 30, clique_concentration},
        {4, "counting lemma on K3", 60, counting_lemma},
        {5, "degree / cut-norm lemma", 60, degree_lemma},
        {6, "clean subgraph invariants", 60, clean_invariants},
        {7, "rainbow K4 threshold probe", 600, threshold_probe},
        {8, "Erdos-Rado witness round trip", 300, er_round_trip},
        {9, "cut-norm heuristic soundness", 60, heuristic_soundness},
        {10, "non-rainbow counters", 30, nonrainbow_counters},
        {11, "sweep reproducibility", 600, reproducibility},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        const bool pass = out.pass && in_time;
        if (!pass) ++failed;
        std::printf("%s [%2d] %s (%.2fs / %.0fs%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs, c.budget_s,
                    in_time ? "" : " over budget", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
