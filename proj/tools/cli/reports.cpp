#include "reports.hpp"

#include <ostream>
#include <sstream>

namespace cech23::cli {

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string scalar_str(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void flatten(const json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        bool scalars = true;
        for (const auto& v : j)
            if (v.is_structured()) scalars = false;
        if (scalars) {
            std::string row;
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) row += "; ";
                row += scalar_str(j[i]);
            }
            out.emplace_back(prefix, row);
        } else {
            for (std::size_t i = 0; i < j.size(); ++i)
                flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
        }
    } else {
        out.emplace_back(prefix, scalar_str(j));
    }
}

void print_table_aligned(const CsvTable& t, std::ostream& out) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], row[i].size());
    };
    grow(t.header);
    for (const auto& r : t.rows) grow(r);
    auto line = [&](const std::vector<std::string>& row) {
        out << "  ";
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << "  ";
            out << row[i];
            if (i + 1 < row.size())
                out << std::string(width[i] - std::min(width[i], row[i].size()), ' ');
        }
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

}  // namespace

void emit_json(const ReportRecord& r, std::ostream& out) {
    json j;
    j["config"] = r.config;
    j["result"] = r.result;
    j["duration_ms"] = r.duration_ms;
    j["version"] = r.version;
    out << j.dump(2) << '\n';
}

void emit_csv(const ReportRecord& r, std::ostream& out) {
    auto put_row = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << csv_escape(row[i]);
        }
        out << '\n';
    };
    if (!r.tables.empty()) {
        for (std::size_t t = 0; t < r.tables.size(); ++t) {
            if (t) out << '\n';
            put_row(r.tables[t].header);
            for (const auto& row : r.tables[t].rows) put_row(row);
        }
        return;
    }
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(r.result, "", kv);
    put_row({"key", "value"});
    for (const auto& [k, v] : kv) put_row({k, v});
}

void emit_text(const ReportRecord& r, std::ostream& out) {
    out << "cech23 " << r.config.value("command", "") << " (version " << r.version << ")\n";
    out << "config:\n";
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(r.config, "", kv);
    for (const auto& [k, v] : kv)
        if (k != "command") out << "  " << k << " = " << v << '\n';
    out << "result:\n";
    if (!r.tables.empty()) {
        for (const auto& t : r.tables) print_table_aligned(t, out);
        for (const auto& [k, v] : r.result.items())  // scalar summary lines
            if (v.is_primitive()) out << "  " << k << " = " << scalar_str(v) << '\n';
    } else {
        kv.clear();
        flatten(r.result, "", kv);
        for (const auto& [k, v] : kv) out << "  " << k << " = " << v << '\n';
    }
    out << "duration_ms = " << r.duration_ms << '\n';
}

void emit_report(const ReportRecord& r, const std::string& format, std::ostream& out) {
    if (format == "json")
        emit_json(r, out);
    else if (format == "csv")
        emit_csv(r, out);
    else
        emit_text(r, out);
}

}  // namespace cech23::cli
