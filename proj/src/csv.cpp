#include "gradual/core.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <string_view>

namespace gradual {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '"')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '"')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        auto pos = line.find(',', start);
        out.push_back(trim(line.substr(start, pos == std::string_view::npos ? line.npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

bool parse_number(std::string_view s, double& out) {
    if (s.empty()) return false;
    if (s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

NumericDataset parse_csv(std::istream& in, bool has_id_column) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> names;
    bool have_header = false;

    while (!have_header && std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
        if (trim(line).empty()) continue;
        for (auto f : split(line)) names.emplace_back(f);
        have_header = true;
    }
    if (!have_header) throw DatasetError("missing header line");
    if (has_id_column) {
        if (names.empty()) throw DatasetError("header has no columns");
        names.erase(names.begin());
    }

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        auto fields = split(line);
        if (has_id_column && !fields.empty()) fields.erase(fields.begin());
        if (fields.size() != names.size()) {
            throw DatasetError("line " + std::to_string(line_no) + ": expected " + std::to_string(names.size()) +
                               " fields, got " + std::to_string(fields.size()));
        }
        std::vector<double> row(fields.size());
        for (std::size_t c = 0; c < fields.size(); ++c) {
            if (!parse_number(fields[c], row[c])) {
                throw DatasetError("line " + std::to_string(line_no) + ": non-numeric value '" +
                                   std::string(fields[c]) + "' in column '" + names[c] + "'");
            }
        }
        rows.push_back(std::move(row));
    }
    return NumericDataset(std::move(names), std::move(rows));
}

NumericDataset load_csv(const std::string& path, bool has_id_column) {
    std::ifstream in(path);
    if (!in) throw DatasetError("cannot open dataset '" + path + "'");
    return parse_csv(in, has_id_column);
}

}  // namespace gradual
