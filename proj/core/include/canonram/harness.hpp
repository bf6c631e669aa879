#pragma once

#include <canonram/adversaries.hpp>
#include <canonram/graph.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace canonram {

enum class ExponentMode : std::uint8_t { Canonical, UpperWindow };
enum class Predicate : std::uint8_t { Rainbow, Canonical, MonoAfterTwoColour };

std::string to_string(ExponentMode m);
std::string to_string(Predicate p);
ExponentMode parse_exponent_mode(const std::string& s);
Predicate parse_predicate(const std::string& s);

struct ExperimentConfig {
    unsigned ell = 4;
    std::vector<Vertex> n_grid;
    std::vector<double> c_grid;
    ExponentMode exponent_mode = ExponentMode::Canonical;
    AdversarySpec adversary;  // seed is ignored; each trial derives its own
    std::uint32_t trials = 1;
    std::uint64_t master_seed = 0;
    bool clean_mode = false;
    Predicate predicate = Predicate::Rainbow;
    std::uint64_t budget = 1'000'000;  // node budget for mono_after_2colour

    /// Throws std::invalid_argument on an unusable config.
    void validate() const;

    /// -2/(ell+1) or -(2 ell - 2)/(ell^2 + ell - 4).
    double exponent() const;

    static ExperimentConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

ExperimentConfig load_config(const std::filesystem::path& path);

/// Stable per-trial seed from (master_seed, n, C, trial). C enters through its IEEE-754 bit pattern.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, Vertex n, double c, std::uint32_t trial);

struct TrialRecord {
    unsigned ell = 0;
    Vertex n = 0;
    double c = 0.0;
    double p = 0.0;
    AdversaryKind adversary = AdversaryKind::Injective;
    bool clean = false;
    std::uint32_t trial = 0;
    std::uint64_t seed = 0;
    bool found = false;
    std::string pattern;            // empty when nothing was found; "resource_limit" on budget exhaustion
    std::vector<Vertex> witness;    // JSON only
    double elapsed_ms = 0.0;
};

struct CellSummary {
    unsigned ell = 0;
    Vertex n = 0;
    double c = 0.0;
    double p = 0.0;
    AdversaryKind adversary = AdversaryKind::Injective;
    std::uint32_t trials = 0;
    std::uint32_t successes = 0;
    double p_hat = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
};

struct SweepResult {
    std::vector<TrialRecord> records;  // sorted by (n, C, trial) in grid order
    std::vector<CellSummary> summary;
    std::vector<std::string> warnings;
};

/// Edge probability C n^exponent clamped to [0, 1]; sets `clamped` when clamping happened.
double cell_probability(const ExperimentConfig& cfg, Vertex n, double c, bool& clamped);

/// Runs a single trial; deterministic in (cfg, n, c, trial).
TrialRecord run_trial(const ExperimentConfig& cfg, Vertex n, double c, std::uint32_t trial);

/// Runs every cell of the grid. Output is independent of `threads`.
SweepResult run_sweep(const ExperimentConfig& cfg, unsigned threads = 1,
                      const std::function<void(const std::string&)>& warn = {});

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Wilson score interval at z = 1.96.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials);

void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records);
void write_summary_csv(std::ostream& out, const std::vector<CellSummary>& summary);
nlohmann::json sweep_to_json(const ExperimentConfig& cfg, const SweepResult& result);
/// Reads back the records array written by sweep_to_json.
std::vector<TrialRecord> records_from_json(const nlohmann::json& j);

struct CorollaryReport {
    std::size_t trials_checked = 0;
    std::size_t witnesses_checked = 0;
    std::size_t cleaned_edges_total = 0;
};

/// Regenerates each cleaned graph from its record and re-checks the clean
/// invariants (K_{ell+1}-freeness for ell >= 4, no two ell-cliques sharing
/// three vertices) and that every witness is a clique of the cleaned graph.
/// Throws std::invalid_argument on records from a non-clean sweep and
/// InvariantBreach on any failed check.
CorollaryReport verify_corollary_mode(const std::vector<TrialRecord>& records);

}  // namespace canonram
