#include "gradual/bench.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <new>
#include <sstream>

#include "gradual/aco.hpp"
#include "gradual/evo.hpp"
#include "gradual/graank.hpp"
#include "gradual/paraminer.hpp"

namespace gradual::bench {

const std::vector<std::string>& algorithm_names() {
    static const std::vector<std::string> names = {"graank", "paraminer", "aco-graank", "aco-paraminer", "ga", "pso"};
    return names;
}

std::string to_string(Algorithm a) { return algorithm_names()[static_cast<std::size_t>(a)]; }

Algorithm parse_algorithm(const std::string& name) {
    const auto& names = algorithm_names();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == name) return static_cast<Algorithm>(i);
    }
    std::string valid;
    for (const auto& n : names) valid += (valid.empty() ? "" : ", ") + n;
    throw Error("unknown algorithm '" + name + "'; valid names: " + valid);
}

Clock steady_clock() {
    return [] {
        using namespace std::chrono;
        return duration<double>(steady_clock::now().time_since_epoch()).count();
    };
}

MiningResult run_algorithm(Algorithm algo, const NumericDataset& d, double sigma, std::uint64_t seed,
                           const MinerOptions& o, const Clock& clock) {
    const double start = clock();
    MiningResult r;
    switch (algo) {
    case Algorithm::Graank: {
        GraankConfig cfg{sigma};
        if (o.max_candidates) cfg.max_candidates_per_level = *o.max_candidates;
        cfg.maximal_only = o.maximal_only;
        r = mine_graank(d, cfg);
        break;
    }
    case Algorithm::Paraminer:
        r = mine_paraminer(d, ParaminerConfig{sigma});
        break;
    case Algorithm::AcoGraank:
    case Algorithm::AcoParaminer: {
        AcoConfig cfg;
        cfg.sigma = sigma;
        cfg.seed = seed;
        if (o.max_iter) cfg.max_iter = *o.max_iter;
        if (o.rho) cfg.rho = *o.rho;
        if (o.alpha) cfg.alpha = *o.alpha;
        if (o.stall_window) cfg.stall_window = *o.stall_window;
        r = algo == Algorithm::AcoGraank ? mine_aco_graank(d, cfg) : mine_aco_paraminer(d, cfg);
        break;
    }
    case Algorithm::Ga:
    case Algorithm::Pso: {
        EvoConfig cfg;
        cfg.sigma = sigma;
        cfg.seed = seed;
        if (o.max_iter) cfg.max_iter = *o.max_iter;
        if (o.pc) cfg.pc = *o.pc;
        if (o.c1) cfg.c1 = *o.c1;
        if (o.c2) cfg.c2 = *o.c2;
        if (o.inertia) cfg.inertia = *o.inertia;
        if (o.pop_size) cfg.pop_size = *o.pop_size;
        if (o.stall_window) cfg.stall_window = *o.stall_window;
        r = algo == Algorithm::Ga ? mine_ga(d, cfg) : mine_pso(d, cfg);
        break;
    }
    }
    if (o.maximal_only && algo != Algorithm::Graank) r.patterns = maximal_only(r.patterns);
    r.wall_time = clock() - start;
    return r;
}

void ExperimentSpec::validate() const {
    if (datasets.empty()) throw Error("experiment: no datasets");
    if (algorithms.empty()) throw Error("experiment: no algorithms");
    if (sigmas.empty()) throw Error("experiment: no sigmas");
    if (repeats < 1) throw Error("experiment: repeats must be >= 1");
    for (double s : sigmas) {
        if (!(s > 0.0 && s <= 1.0)) throw Error("experiment: sigma " + std::to_string(s) + " outside (0, 1]");
    }
}

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> parse_list(const std::string& raw) {
    std::string body = strip(raw);
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw Error("experiment: unterminated array '" + raw + "'");
        body = body.substr(1, body.size() - 2);
    }
    std::vector<std::string> out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != v.size() || v.empty()) throw Error("experiment: '" + key + "' expects a number, got '" + v + "'");
    return x;
}

std::size_t to_size(const std::string& key, const std::string& v) {
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
        throw Error("experiment: '" + key + "' expects a non-negative integer, got '" + v + "'");
    }
    return static_cast<std::size_t>(std::stoull(v));
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    throw Error("experiment: '" + key + "' expects true/false, got '" + v + "'");
}

}  // namespace

ExperimentSpec parse_experiment_spec(std::istream& in) {
    ExperimentSpec spec;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw Error("experiment line " + std::to_string(line_no) + ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        auto& o = spec.options;

        if (key == "datasets") {
            spec.datasets = parse_list(value);
        } else if (key == "algorithms") {
            spec.algorithms.clear();
            for (const auto& a : parse_list(value)) spec.algorithms.push_back(parse_algorithm(a));
        } else if (key == "sigmas") {
            spec.sigmas.clear();
            for (const auto& s : parse_list(value)) spec.sigmas.push_back(to_double(key, s));
        } else if (key == "repeats") {
            spec.repeats = to_size(key, value);
        } else if (key == "seed_base") {
            spec.seed_base = to_size(key, value);
        } else if (key == "has_id_column") {
            spec.has_id_column = to_bool(key, value);
        } else if (key == "max_iter") {
            o.max_iter = to_size(key, value);
        } else if (key == "rho") {
            o.rho = to_double(key, value);
        } else if (key == "alpha") {
            o.alpha = to_double(key, value);
        } else if (key == "stall_window") {
            o.stall_window = to_size(key, value);
        } else if (key == "pc") {
            o.pc = to_double(key, value);
        } else if (key == "c1") {
            o.c1 = to_double(key, value);
        } else if (key == "c2") {
            o.c2 = to_double(key, value);
        } else if (key == "inertia") {
            o.inertia = to_double(key, value);
        } else if (key == "pop_size") {
            o.pop_size = to_size(key, value);
        } else if (key == "max_candidates") {
            o.max_candidates = to_size(key, value);
        } else if (key == "maximal_only") {
            o.maximal_only = to_bool(key, value);
        } else {
            throw Error("experiment line " + std::to_string(line_no) + ": unknown key '" + key + "'");
        }
    }
    spec.validate();
    return spec;
}

ExperimentSpec load_experiment_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open experiment file '" + path + "'");
    return parse_experiment_spec(in);
}

bool Report::any_failed() const {
    for (const auto& c : cells) {
        if (c.failed) return true;
    }
    return false;
}

Report run_experiments(const ExperimentSpec& spec, const Clock& clock) {
    spec.validate();
    std::vector<NumericDataset> data;
    for (const auto& path : spec.datasets) data.push_back(load_csv(path, spec.has_id_column));

    Report report;
    for (std::size_t di = 0; di < data.size(); ++di) {
        for (Algorithm algo : spec.algorithms) {
            for (double sigma : spec.sigmas) {
                ReportCell cell{spec.datasets[di], to_string(algo), sigma, false, {}, {}};
                for (std::size_t run = 0; run < spec.repeats; ++run) {
                    RunRecord rec;
                    rec.run_index = run;
                    rec.seed = spec.seed_base + run;
                    try {
                        const auto r = run_algorithm(algo, data[di], sigma, rec.seed, spec.options, clock);
                        rec.runtime = r.wall_time;
                        rec.patterns = r.patterns.size();
                        rec.memory = r.peak_tracked_bytes;
                        rec.iterations = r.iterations;
                        rec.candidates_generated = r.candidates_generated;
                        rec.candidates_evaluated = r.candidates_evaluated;
                    } catch (const ResourceLimitError& e) {
                        rec.ok = false;
                        rec.error = e.what();
                    } catch (const std::bad_alloc&) {
                        rec.ok = false;
                        rec.error = "out of memory";
                    }
                    if (!rec.ok) cell.failed = true;
                    cell.runs.push_back(std::move(rec));
                }
                cell.stats = aggregate(cell.runs);
                report.cells.push_back(std::move(cell));
            }
        }
    }
    return report;
}

}  // namespace gradual::bench
