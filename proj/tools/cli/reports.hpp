#pragma once

// Command-line front end: parses one subcommand, runs the requested
// computation, and emits a single report (JSON, CSV, or aligned text).
// Kept in a library so tests can drive the CLI in-process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace cech23::cli {

using json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;

    std::string weight = "-3,-3,-2,-2,-2";
    unsigned level = 1;
    std::string levels = "1:6";  // sweep range "lo:hi"
    std::string coeff = "q";     // q | z | fp
    std::uint64_t p = 0;
    std::vector<std::uint64_t> primes;
    unsigned n_max = 10;

    int degree = 3;  // colim
    unsigned n_lo = 1, n_hi = 6;

    std::vector<std::string> weights;  // h6j samples; empty = built-in defaults
    unsigned h6j_n_lo = 2, h6j_n_hi = 6;
    unsigned trace_lo = 2, trace_hi = 6;

    std::string phi = "inv_f123";  // residue
    double lambda = 0.0;
    std::vector<double> lambdas = {0.0, 0.25, 0.5, 0.75, 1.0};
    bool homotopy = false;
    std::string method = "quad";  // quad | mc
    std::size_t grid = 8;
    std::size_t samples = 1'000'000;
    std::uint64_t seed = 20260814;

    unsigned threads = 0;  // 0: CECH23_THREADS env, then hardware
    std::string format = "text";
    std::string dump_path;  // compute: write differentials as triple lists
};

// the fields of `cfg` that determine the result of `command`, for the echo
json config_echo(const RunConfig& cfg);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

struct ReportRecord {
    json config;
    json result;
    std::int64_t duration_ms = 0;
    std::string version;
    std::vector<CsvTable> tables;  // CSV rendering; key/value fallback if empty
};

void emit_json(const ReportRecord& r, std::ostream& out);
void emit_csv(const ReportRecord& r, std::ostream& out);
void emit_text(const ReportRecord& r, std::ostream& out);
void emit_report(const ReportRecord& r, const std::string& format, std::ostream& out);

// full CLI: args excludes the program name; returns the process exit code
// (0 ok, 2 usage error, 3 computation failure)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cech23::cli
