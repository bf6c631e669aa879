#include <canonram/errors.hpp>
#include <canonram/harness.hpp>
#include <canonram/random.hpp>
#include <canonram/search.hpp>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace canonram {

std::string to_string(ExponentMode m) {
    return m == ExponentMode::Canonical ? "canonical" : "upper_window";
}

std::string to_string(Predicate p) {
    switch (p) {
        case Predicate::Rainbow: return "rainbow";
        case Predicate::Canonical: return "canonical";
        case Predicate::MonoAfterTwoColour: return "mono_after_2colour";
    }
    return "unknown";
}

ExponentMode parse_exponent_mode(const std::string& s) {
    if (s == "canonical") return ExponentMode::Canonical;
    if (s == "upper_window") return ExponentMode::UpperWindow;
    throw std::invalid_argument("unknown exponent_mode '" + s + "'");
}

Predicate parse_predicate(const std::string& s) {
    if (s == "rainbow") return Predicate::Rainbow;
    if (s == "canonical") return Predicate::Canonical;
    if (s == "mono_after_2colour") return Predicate::MonoAfterTwoColour;
    throw std::invalid_argument("unknown predicate '" + s + "'");
}

void ExperimentConfig::validate() const {
    if (ell < 3) throw std::invalid_argument("config: ell must be at least 3");
    if (n_grid.empty()) throw std::invalid_argument("config: n_grid is empty");
    if (c_grid.empty()) throw std::invalid_argument("config: c_grid is empty");
    for (Vertex n : n_grid)
        if (n < 1) throw std::invalid_argument("config: vertex counts must be positive");
    for (double c : c_grid)
        if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("config: C values must be positive and finite");
    if (trials < 1) throw std::invalid_argument("config: trials must be at least 1");
    if (budget < 1) throw std::invalid_argument("config: budget must be at least 1");
    adversary.validate();
}

double ExperimentConfig::exponent() const {
    const double l = ell;
    if (exponent_mode == ExponentMode::Canonical) return -2.0 / (l + 1.0);
    return -(2.0 * l - 2.0) / (l * l + l - 4.0);
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
    ExperimentConfig cfg;
    cfg.ell = j.at("ell").get<unsigned>();
    cfg.n_grid = j.at("n_grid").get<std::vector<Vertex>>();
    cfg.c_grid = j.at("c_grid").get<std::vector<double>>();
    cfg.exponent_mode = parse_exponent_mode(j.value("exponent_mode", std::string("canonical")));
    if (j.contains("adversary")) {
        const auto& a = j.at("adversary");
        cfg.adversary.kind = parse_adversary_kind(a.at("kind").get<std::string>());
        cfg.adversary.r = a.value("r", std::uint64_t{2});
        cfg.adversary.lambda = a.value("lambda", std::uint64_t{1});
    }
    cfg.trials = j.at("trials").get<std::uint32_t>();
    cfg.master_seed = j.value("master_seed", std::uint64_t{0});
    cfg.clean_mode = j.value("clean_mode", false);
    cfg.predicate = parse_predicate(j.value("predicate", std::string("rainbow")));
    cfg.budget = j.value("budget", cfg.budget);
    cfg.validate();
    return cfg;
}

nlohmann::json ExperimentConfig::to_json() const {
    return {
        {"ell", ell},
        {"n_grid", n_grid},
        {"c_grid", c_grid},
        {"exponent_mode", to_string(exponent_mode)},
        {"adversary", {{"kind", to_string(adversary.kind)}, {"r", adversary.r}, {"lambda", adversary.lambda}}},
        {"trials", trials},
        {"master_seed", master_seed},
        {"clean_mode", clean_mode},
        {"predicate", to_string(predicate)},
        {"budget", budget},
    };
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config " + path.string());
    return ExperimentConfig::from_json(nlohmann::json::parse(in));
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, Vertex n, double c, std::uint32_t trial) {
    std::uint64_t s = combine_seed(master_seed, n);
    s = combine_seed(s, std::bit_cast<std::uint64_t>(c));
    return combine_seed(s, trial);
}

double cell_probability(const ExperimentConfig& cfg, Vertex n, double c, bool& clamped) {
    const double p = c * std::pow(static_cast<double>(n), cfg.exponent());
    clamped = p > 1.0 || p < 0.0;
    return std::clamp(p, 0.0, 1.0);
}

namespace {

constexpr std::uint64_t kAdversaryStream = 0xad5e'75a1'0000'0001ULL;

struct Evaluation {
    bool found = false;
    std::string pattern;
    std::vector<Vertex> witness;
};

Evaluation evaluate(const ExperimentConfig& cfg, const std::shared_ptr<const OrderedGraph>& g, std::uint64_t seed) {
    Evaluation ev;
    if (cfg.predicate == Predicate::MonoAfterTwoColour) {
        const auto res = arrows_mono(*g, ArrowQuery{cfg.ell, 2}, cfg.budget);
        if (res.status == ArrowStatus::Arrows) {
            ev.found = true;
            ev.pattern = "mono";
        } else if (res.status == ArrowStatus::ResourceLimit) {
            ev.pattern = "resource_limit";
        }
        return ev;
    }
    AdversarySpec spec = cfg.adversary;
    spec.seed = combine_seed(seed, kAdversaryStream);
    const EdgeColouring phi = generate_colouring(g, spec);
    const SearchOutcome out =
        cfg.predicate == Predicate::Rainbow ? find_rainbow_copy(phi, cfg.ell) : find_canonical_copy(phi, cfg.ell);
    if (out.found && out.witness) {
        ev.found = true;
        ev.pattern = std::string(out.witness->tags.primary_name());
        ev.witness = out.witness->vertices;
    }
    return ev;
}

}  // namespace

TrialRecord run_trial(const ExperimentConfig& cfg, Vertex n, double c, std::uint32_t trial) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.ell = cfg.ell;
    rec.n = n;
    rec.c = c;
    bool clamped = false;
    rec.p = cell_probability(cfg, n, c, clamped);
    rec.adversary = cfg.adversary.kind;
    rec.clean = cfg.clean_mode;
    rec.trial = trial;
    rec.seed = derive_trial_seed(cfg.master_seed, n, c, trial);

    GnpSample sample = gnp_generate(n, rec.p, rec.seed);
    auto g = std::make_shared<const OrderedGraph>(cfg.clean_mode ? clean_subgraph(sample.graph, cfg.ell)
                                                                 : std::move(sample.graph));
    Evaluation ev = evaluate(cfg, g, rec.seed);
    rec.found = ev.found;
    rec.pattern = std::move(ev.pattern);
    rec.witness = std::move(ev.witness);
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

SweepResult run_sweep(const ExperimentConfig& cfg, unsigned threads,
                      const std::function<void(const std::string&)>& warn) {
    cfg.validate();
    SweepResult result;

    struct Job {
        Vertex n;
        double c;
        std::uint32_t trial;
    };
    std::vector<Job> jobs;
    for (Vertex n : cfg.n_grid) {
        for (double c : cfg.c_grid) {
            bool clamped = false;
            const double p = cell_probability(cfg, n, c, clamped);
            if (clamped) {
                result.warnings.push_back(fmt::format("n={} C={}: p = C n^{} clamped to {}", n, c, cfg.exponent(), p));
                if (warn) warn(result.warnings.back());
            }
            for (std::uint32_t t = 0; t < cfg.trials; ++t) jobs.push_back({n, c, t});
        }
    }

    result.records.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= jobs.size() || failed.load()) return;
            try {
                result.records[i] = run_trial(cfg, jobs[i].n, jobs[i].c, jobs[i].trial);
            } catch (...) {
                if (!failed.exchange(true)) failure = std::current_exception();
                return;
            }
        }
    };
    const unsigned k = std::max(1U, threads);
    if (k == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t i = 0; i < result.records.size(); i += cfg.trials) {
        const TrialRecord& first = result.records[i];
        CellSummary s;
        s.ell = first.ell;
        s.n = first.n;
        s.c = first.c;
        s.p = first.p;
        s.adversary = first.adversary;
        s.trials = cfg.trials;
        for (std::size_t j = i; j < i + cfg.trials; ++j) s.successes += result.records[j].found ? 1 : 0;
        s.p_hat = static_cast<double>(s.successes) / s.trials;
        const auto ci = wilson_interval(s.successes, s.trials);
        s.ci_lo = ci.lo;
        s.ci_hi = ci.hi;
        result.summary.push_back(s);
    }
    return result;
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be at least 1");
    if (successes > trials) throw std::invalid_argument("wilson_interval: successes exceed trials");
    constexpr double z = 1.96;
    const double n = static_cast<double>(trials);
    const double ph = static_cast<double>(successes) / n;
    const double denom = 1.0 + z * z / n;
    const double centre = (ph + z * z / (2.0 * n)) / denom;
    const double half = z * std::sqrt(ph * (1.0 - ph) / n + z * z / (4.0 * n * n)) / denom;
    WilsonInterval w{std::max(0.0, centre - half), std::min(1.0, centre + half)};
    if (successes == 0) w.lo = 0.0;
    if (successes == trials) w.hi = 1.0;
    return w;
}

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records) {
    out << "ell,n,C,p,adversary,clean,trial,seed,found,pattern,elapsed_ms\n";
    for (const auto& r : records)
        fmt::print(out, "{},{},{},{},{},{},{},{},{},{},{:.3f}\n", r.ell, r.n, r.c, r.p, to_string(r.adversary),
                   r.clean ? 1 : 0, r.trial, r.seed, r.found ? 1 : 0, r.pattern, r.elapsed_ms);
}

void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summary) {
    out << "ell,n,C,p,adversary,trials,successes,p_hat,ci_lo,ci_hi\n";
    for (const auto& s : summary)
        fmt::print(out, "{},{},{},{},{},{},{},{},{},{}\n", s.ell, s.n, s.c, s.p, to_string(s.adversary), s.trials,
                   s.successes, s.p_hat, s.ci_lo, s.ci_hi);
}

nlohmann::json sweep_to_json(const ExperimentConfig& cfg, const SweepResult& result) {
    nlohmann::json records = nlohmann::json::array();
    for (const auto& r : result.records) {
        records.push_back({{"ell", r.ell},
                           {"n", r.n},
                           {"C", r.c},
                           {"p", r.p},
                           {"adversary", to_string(r.adversary)},
                           {"clean", r.clean},
                           {"trial", r.trial},
                           {"seed", r.seed},
                           {"found", r.found},
                           {"pattern", r.pattern},
                           {"witness", r.witness},
                           {"elapsed_ms", r.elapsed_ms}});
    }
    nlohmann::json summary = nlohmann::json::array();
    for (const auto& s : result.summary) {
        summary.push_back({{"ell", s.ell},
                           {"n", s.n},
                           {"C", s.c},
                           {"p", s.p},
                           {"adversary", to_string(s.adversary)},
                           {"trials", s.trials},
                           {"successes", s.successes},
                           {"p_hat", s.p_hat},
                           {"ci_lo", s.ci_lo},
                           {"ci_hi", s.ci_hi}});
    }
    return {{"config", cfg.to_json()},
            {"note", "success rates are for the configured adversary only, not for every colouring"},
            {"warnings", result.warnings},
            {"records", std::move(records)},
            {"summary", std::move(summary)}};
}

std::vector<TrialRecord> records_from_json(const nlohmann::json& j) {
    std::vector<TrialRecord> out;
    for (const auto& r : j.at("records")) {
        TrialRecord rec;
        rec.ell = r.at("ell").get<unsigned>();
        rec.n = r.at("n").get<Vertex>();
        rec.c = r.at("C").get<double>();
        rec.p = r.at("p").get<double>();
        rec.adversary = parse_adversary_kind(r.at("adversary").get<std::string>());
        rec.clean = r.at("clean").get<bool>();
        rec.trial = r.at("trial").get<std::uint32_t>();
        rec.seed = r.at("seed").get<std::uint64_t>();
        rec.found = r.at("found").get<bool>();
        rec.pattern = r.at("pattern").get<std::string>();
        rec.witness = r.value("witness", std::vector<Vertex>{});
        rec.elapsed_ms = r.value("elapsed_ms", 0.0);
        out.push_back(std::move(rec));
    }
    return out;
}

CorollaryReport verify_corollary_mode(const std::vector<TrialRecord>& records) {
    CorollaryReport report;
    for (const auto& r : records)
        if (!r.clean) throw std::invalid_argument("verify_corollary_mode: records come from a non-clean sweep");
    for (const auto& r : records) {
        const auto where = fmt::format("n={} C={} trial={}", r.n, r.c, r.trial);
        const OrderedGraph g = clean_subgraph(gnp_generate(r.n, r.p, r.seed).graph, r.ell);
        if (r.ell >= 4 && count_clique_sets(g, r.ell + 1) != 0)
            throw InvariantBreach(where + ": cleaned graph contains K_" + std::to_string(r.ell + 1));
        if (has_overlapping_cliques(g, r.ell))
            throw InvariantBreach(where + ": cleaned graph has two cliques sharing three vertices");
        if (!r.witness.empty()) {
            if (r.witness.size() != r.ell) throw InvariantBreach(where + ": witness has the wrong size");
            for (std::size_t i = 0; i < r.witness.size(); ++i)
                for (std::size_t j = i + 1; j < r.witness.size(); ++j)
                    if (!g.adjacent(r.witness[i], r.witness[j]))
                        throw InvariantBreach(where + ": witness is not a clique of the cleaned graph");
            ++report.witnesses_checked;
        }
        report.cleaned_edges_total += g.edge_count();
        ++report.trials_checked;
    }
    return report;
}

}  // namespace canonram
