// gpmine: command-line front end for the gradual pattern miners.
//
//   gpmine mine  --data FILE --algo graank --min-sup 0.5 [...]
//   gpmine bench EXPERIMENT_FILE [--repeats R] [--seed S] [--format json|csv] [--out PATH]

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gradual/bench.hpp"
#include "gradual/core.hpp"
#include "gradual/result.hpp"

namespace {

using namespace gradual;

std::string patterns_csv(const MiningResult& r, const NumericDataset& d) {
    std::ostringstream out;
    out << "pattern,size,support\n";
    for (const auto& sp : r.patterns) {
        out << '"' << sp.pattern.to_string(d.attribute_names()) << "\"," << sp.pattern.size() << ',' << sp.support
            << '\n';
    }
    return out.str();
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
    } else {
        bench::write_file_atomically(path, text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gradual pattern mining: exact, transactional, ant-colony and evolutionary miners"};
    app.require_subcommand(1);

    // mine
    auto* mine = app.add_subcommand("mine", "Mine gradual patterns from one CSV dataset");
    std::string data_path, algo_name = "graank", format = "json", out_path;
    bool id_column = false;
    double sigma = 0.5;
    std::uint64_t seed = 0;
    bench::MinerOptions opts;
    std::optional<std::size_t> max_iter, pop_size, stall_window, max_candidates;
    std::optional<double> rho, pc, c1, c2, alpha;

    mine->add_option("--data", data_path, "CSV file with a header row")->required()->check(CLI::ExistingFile);
    mine->add_flag("--id-column", id_column, "Treat the first column as a row id");
    mine->add_option("--algo", algo_name, "graank, paraminer, aco-graank, aco-paraminer, ga or pso")
        ->capture_default_str();
    mine->add_option("--min-sup", sigma, "Minimum support in (0, 1]")->capture_default_str();
    mine->add_option("--max-iter", max_iter, "Iteration budget for ACO, GA and PSO");
    mine->add_option("--rho", rho, "Pheromone evaporation factor in [0, 1)");
    mine->add_option("--alpha", alpha, "Pheromone exponent");
    mine->add_option("--stall-window", stall_window, "Stop after this many unproductive iterations");
    mine->add_option("--pc", pc, "GA offspring proportion");
    mine->add_option("--c1", c1, "PSO cognitive coefficient");
    mine->add_option("--c2", c2, "PSO social coefficient");
    mine->add_option("--pop-size", pop_size, "GA/PSO population size");
    mine->add_option("--max-candidates", max_candidates, "GRAANK per-level candidate cap");
    mine->add_option("--seed", seed, "Random seed")->capture_default_str();
    mine->add_option("--format", format, "json or csv")->capture_default_str();
    mine->add_option("--out", out_path, "Output file (default stdout)");
    mine->add_flag("--maximal-only", opts.maximal_only, "Report only maximal patterns");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run an experiment matrix and write a report");
    std::string spec_path, bench_format = "json", bench_out;
    std::optional<std::size_t> repeats;
    std::optional<std::uint64_t> seed_base;
    std::optional<std::size_t> bench_max_iter;
    bool bench_maximal = false;
    bench_cmd->add_option("experiment", spec_path, "Experiment file (key = value lines)")
        ->required()
        ->check(CLI::ExistingFile);
    bench_cmd->add_option("--repeats", repeats, "Runs per cell (overrides the file)");
    bench_cmd->add_option("--seed", seed_base, "Seed base (overrides the file)");
    bench_cmd->add_option("--max-iter", bench_max_iter, "Iteration budget (overrides the file)");
    bench_cmd->add_option("--format", bench_format, "json or csv")->capture_default_str();
    bench_cmd->add_option("--out", bench_out, "Report file (default stdout)");
    bench_cmd->add_flag("--maximal-only", bench_maximal, "Count only maximal patterns");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*mine) {
            const auto algo = bench::parse_algorithm(algo_name);
            if (format != "json" && format != "csv") throw Error("unknown format '" + format + "'; valid: json, csv");
            opts.max_iter = max_iter;
            opts.rho = rho;
            opts.alpha = alpha;
            opts.stall_window = stall_window;
            opts.pc = pc;
            opts.c1 = c1;
            opts.c2 = c2;
            opts.pop_size = pop_size;
            opts.max_candidates = max_candidates;
            const auto d = load_csv(data_path, id_column);
            const auto r = bench::run_algorithm(algo, d, sigma, seed, opts);
            emit(format == "json" ? to_json(r, &d) + "\n" : patterns_csv(r, d), out_path);
            return 0;
        }

        auto spec = bench::load_experiment_spec(spec_path);
        if (repeats) spec.repeats = *repeats;
        if (seed_base) spec.seed_base = *seed_base;
        if (bench_max_iter) spec.options.max_iter = bench_max_iter;
        if (bench_maximal) spec.options.maximal_only = true;
        const auto fmt = bench::parse_format(bench_format);
        const auto report = bench::run_experiments(spec);
        if (bench_out.empty() || bench_out == "-") {
            std::cout << (fmt == bench::ReportFormat::Json ? bench::report_to_json(report)
                                                           : bench::report_to_csv(report));
        } else {
            bench::emit_report(report, fmt, bench_out);
        }
        if (report.any_failed()) {
            std::cerr << "failed cells:\n";
            for (const auto& c : report.cells) {
                if (!c.failed) continue;
                std::cerr << "  " << c.dataset << " " << c.algorithm << " sigma=" << c.sigma;
                for (const auto& run : c.runs) {
                    if (!run.ok) {
                        std::cerr << ": " << run.error;
                        break;
                    }
                }
                std::cerr << '\n';
            }
            return 1;
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
