#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "gradual/bench.hpp"

namespace gradual::bench {

using nlohmann::json;

Aggregates aggregate(const std::vector<RunRecord>& runs) {
    Aggregates a;
    std::vector<const RunRecord*> ok;
    for (const auto& r : runs) {
        if (r.ok) ok.push_back(&r);
    }
    if (ok.empty()) return a;
    const double k = static_cast<double>(ok.size());

    a.best_runtime = a.worst_runtime = ok.front()->runtime;
    a.fewest_patterns = a.most_patterns = ok.front()->patterns;
    a.min_mem = a.max_mem = ok.front()->memory;
    double rt_sum = 0.0, pat_sum = 0.0, mem_sum = 0.0;
    for (const auto* r : ok) {
        rt_sum += r->runtime;
        pat_sum += static_cast<double>(r->patterns);
        mem_sum += static_cast<double>(r->memory);
        a.best_runtime = std::min(a.best_runtime, r->runtime);
        a.worst_runtime = std::max(a.worst_runtime, r->runtime);
        a.fewest_patterns = std::min(a.fewest_patterns, r->patterns);
        a.most_patterns = std::max(a.most_patterns, r->patterns);
        a.min_mem = std::min(a.min_mem, r->memory);
        a.max_mem = std::max(a.max_mem, r->memory);
    }
    a.mean_runtime = rt_sum / k;
    a.mean_patterns = pat_sum / k;
    a.mean_mem = mem_sum / k;
    double var = 0.0;
    for (const auto* r : ok) var += (r->runtime - a.mean_runtime) * (r->runtime - a.mean_runtime);
    a.std_dev_runtime = std::sqrt(var / k);
    return a;
}

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::Json;
    if (name == "csv") return ReportFormat::Csv;
    throw Error("unknown report format '" + name + "'; valid formats: json, csv");
}

namespace {

json stats_to_json(const Aggregates& a) {
    return json{{"std_dev_runtime", a.std_dev_runtime}, {"best_runtime", a.best_runtime},
                {"mean_runtime", a.mean_runtime},       {"worst_runtime", a.worst_runtime},
                {"fewest_patterns", a.fewest_patterns}, {"mean_patterns", a.mean_patterns},
                {"most_patterns", a.most_patterns},     {"min_mem", a.min_mem},
                {"mean_mem", a.mean_mem},               {"max_mem", a.max_mem}};
}

json run_to_json(const RunRecord& r) {
    json j{{"run_index", r.run_index},
           {"seed", r.seed},
           {"status", r.ok ? "ok" : "failed"},
           {"runtime", r.runtime},
           {"patterns", r.patterns},
           {"memory", r.memory},
           {"iterations", r.iterations},
           {"candidates_generated", r.candidates_generated},
           {"candidates_evaluated", r.candidates_evaluated}};
    if (!r.ok) j["error"] = r.error;
    return j;
}

std::string number(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string report_to_json(const Report& r) {
    json cells = json::array();
    for (const auto& c : r.cells) {
        json runs = json::array();
        for (const auto& run : c.runs) runs.push_back(run_to_json(run));
        json cell{{"dataset", c.dataset},
                  {"algorithm", c.algorithm},
                  {"sigma", c.sigma},
                  {"status", c.failed ? "failed" : "ok"},
                  {"runs", std::move(runs)}};
        cell["aggregates"] = stats_to_json(c.stats);
        cells.push_back(std::move(cell));
    }
    return cells.dump(2) + "\n";
}

std::string report_to_csv(const Report& r) {
    std::string out =
        "dataset,algorithm,sigma,status,std_dev_runtime,best_runtime,mean_runtime,worst_runtime,"
        "fewest_patterns,mean_patterns,most_patterns,min_mem,mean_mem,max_mem\n";
    for (const auto& c : r.cells) {
        const auto& a = c.stats;
        out += csv_field(c.dataset) + ',' + c.algorithm + ',' + number(c.sigma) + ',' +
               (c.failed ? "failed" : "ok") + ',' + number(a.std_dev_runtime) + ',' + number(a.best_runtime) + ',' +
               number(a.mean_runtime) + ',' + number(a.worst_runtime) + ',' + std::to_string(a.fewest_patterns) +
               ',' + number(a.mean_patterns) + ',' + std::to_string(a.most_patterns) + ',' +
               std::to_string(a.min_mem) + ',' + number(a.mean_mem) + ',' + std::to_string(a.max_mem) + '\n';
    }
    return out;
}

Report report_from_json(const std::string& text) {
    Report report;
    json cells;
    try {
        cells = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(std::string("report: invalid JSON: ") + e.what());
    }
    if (!cells.is_array()) throw Error("report: top level must be an array");
    try {
        for (const auto& j : cells) {
            ReportCell c;
            c.dataset = j.at("dataset").get<std::string>();
            c.algorithm = j.at("algorithm").get<std::string>();
            c.sigma = j.at("sigma").get<double>();
            c.failed = j.at("status").get<std::string>() == "failed";
            for (const auto& jr : j.at("runs")) {
                RunRecord r;
                r.run_index = jr.at("run_index").get<std::size_t>();
                r.seed = jr.at("seed").get<std::uint64_t>();
                r.ok = jr.at("status").get<std::string>() == "ok";
                if (!r.ok) r.error = jr.value("error", std::string());
                r.runtime = jr.at("runtime").get<double>();
                r.patterns = jr.at("patterns").get<std::size_t>();
                r.memory = jr.at("memory").get<std::size_t>();
                r.iterations = jr.at("iterations").get<std::size_t>();
                r.candidates_generated = jr.at("candidates_generated").get<std::size_t>();
                r.candidates_evaluated = jr.at("candidates_evaluated").get<std::size_t>();
                c.runs.push_back(std::move(r));
            }
            const auto& s = j.at("aggregates");
            auto& a = c.stats;
            a.std_dev_runtime = s.at("std_dev_runtime").get<double>();
            a.best_runtime = s.at("best_runtime").get<double>();
            a.mean_runtime = s.at("mean_runtime").get<double>();
            a.worst_runtime = s.at("worst_runtime").get<double>();
            a.fewest_patterns = s.at("fewest_patterns").get<std::size_t>();
            a.mean_patterns = s.at("mean_patterns").get<double>();
            a.most_patterns = s.at("most_patterns").get<std::size_t>();
            a.min_mem = s.at("min_mem").get<std::size_t>();
            a.mean_mem = s.at("mean_mem").get<double>();
            a.max_mem = s.at("max_mem").get<std::size_t>();
            report.cells.push_back(std::move(c));
        }
    } catch (const json::exception& e) {
        throw Error(std::string("report: malformed cell: ") + e.what());
    }
    return report;
}

void write_file_atomically(const std::string& path, const std::string& contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write '" + tmp.string() + "'");
        out << contents;
        out.flush();
        if (!out) throw Error("failed writing '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw Error("cannot move report into '" + path + "': " + ec.message());
    }
}

void emit_report(const Report& r, ReportFormat format, const std::string& path) {
    write_file_atomically(path, format == ReportFormat::Json ? report_to_json(r) : report_to_csv(r));
}

}  // namespace gradual::bench
