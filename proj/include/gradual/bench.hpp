#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gradual/core.hpp"
#include "gradual/result.hpp"

namespace gradual::bench {

enum class Algorithm { Graank, Paraminer, AcoGraank, AcoParaminer, Ga, Pso };

const std::vector<std::string>& algorithm_names();
std::string to_string(Algorithm a);
/// Throws Error listing the valid names when `name` is unknown.
Algorithm parse_algorithm(const std::string& name);

/// Tunables shared by the CLI and experiment files. Unset fields keep each
/// miner's defaults.
struct MinerOptions {
    std::optional<std::size_t> max_iter;
    std::optional<double> rho;
    std::optional<double> alpha;
    std::optional<std::size_t> stall_window;
    std::optional<double> pc;
    std::optional<double> c1;
    std::optional<double> c2;
    std::optional<double> inertia;
    std::optional<std::size_t> pop_size;
    std::optional<std::size_t> max_candidates;
    bool maximal_only = false;
};

/// Seconds since an arbitrary epoch. Tests inject a fixed clock to make
/// reports byte-stable.
using Clock = std::function<double()>;
Clock steady_clock();

/// Runs one miner and fills in wall_time from `clock`.
MiningResult run_algorithm(Algorithm algo, const NumericDataset& d, double sigma, std::uint64_t seed,
                           const MinerOptions& options, const Clock& clock = steady_clock());

struct ExperimentSpec {
    std::vector<std::string> datasets;
    std::vector<Algorithm> algorithms;
    std::vector<double> sigmas;
    std::size_t repeats = 3;
    std::uint64_t seed_base = 0;
    bool has_id_column = false;
    MinerOptions options;

    void validate() const;
};

/// Experiment file: one `key = value` per line, `#` comments, arrays as
/// `[a, b, c]`. Keys: datasets, algorithms, sigmas, repeats, seed_base,
/// has_id_column, max_iter, rho, alpha, stall_window, pc, c1, c2, inertia,
/// pop_size, max_candidates, maximal_only.
ExperimentSpec parse_experiment_spec(std::istream& in);
ExperimentSpec load_experiment_spec(const std::string& path);

struct RunRecord {
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    bool ok = true;
    std::string error;
    double runtime = 0.0;
    std::size_t patterns = 0;
    std::size_t memory = 0;
    std::size_t iterations = 0;
    std::size_t candidates_generated = 0;
    std::size_t candidates_evaluated = 0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

struct Aggregates {
    double std_dev_runtime = 0.0;
    double best_runtime = 0.0;
    double mean_runtime = 0.0;
    double worst_runtime = 0.0;
    std::size_t fewest_patterns = 0;
    double mean_patterns = 0.0;
    std::size_t most_patterns = 0;
    std::size_t min_mem = 0;
    double mean_mem = 0.0;
    std::size_t max_mem = 0;

    friend bool operator==(const Aggregates&, const Aggregates&) = default;
};

/// Aggregates over the successful runs; population standard deviation.
Aggregates aggregate(const std::vector<RunRecord>& runs);

struct ReportCell {
    std::string dataset;
    std::string algorithm;
    double sigma = 0.0;
    bool failed = false;
    std::vector<RunRecord> runs;
    Aggregates stats;

    friend bool operator==(const ReportCell&, const ReportCell&) = default;
};

struct Report {
    std::vector<ReportCell> cells;

    bool any_failed() const;
    friend bool operator==(const Report&, const Report&) = default;
};

/// Runs every (dataset, algorithm, sigma) cell `repeats` times with seeds
/// seed_base + run_index. Resource-limit errors mark the cell failed instead
/// of aborting the matrix.
Report run_experiments(const ExperimentSpec& spec, const Clock& clock = steady_clock());

enum class ReportFormat { Json, Csv };
ReportFormat parse_format(const std::string& name);

std::string report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
Report report_from_json(const std::string& text);

/// Writes through a temporary file and renames it into place.
void emit_report(const Report& r, ReportFormat format, const std::string& path);

void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace gradual::bench
