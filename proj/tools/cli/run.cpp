#include "reports.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "cech23/cohomology.hpp"
#include "cech23/residue.hpp"
#include "cech23/version.hpp"

namespace cech23::cli {

namespace {

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Weight parse_weight(const std::string& s) {
    auto w = Weight::parse(s);
    if (!w) throw usage_error("malformed weight '" + s + "', expected r1,r2,c1,c2,c3");
    if (!w->consistent())
        throw usage_error("inconsistent weight '" + s + "': r1+r2 must equal c1+c2+c3");
    return *w;
}

void check_prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw usage_error("p = " + std::to_string(p) + " is not prime");
    if (p > fp_max_modulus) throw usage_error("p exceeds the supported modulus bound 2^31-1");
}

CoeffDomain domain_from(const RunConfig& cfg, bool allow_integers) {
    if (cfg.coeff == "q") return CoeffDomain::rationals();
    if (cfg.coeff == "z") {
        if (!allow_integers)
            throw usage_error("this command needs a field; use --coeff q or --coeff fp");
        return CoeffDomain::integers();
    }
    if (cfg.coeff == "fp") {
        if (!cfg.p) throw usage_error("--coeff fp requires --p <prime>");
        check_prime(cfg.p);
        return CoeffDomain::prime_field(cfg.p);
    }
    throw usage_error("unknown coefficient domain '" + cfg.coeff + "' (use q, z, or fp)");
}

std::pair<unsigned, unsigned> parse_level_range(const std::string& s) {
    auto sep = s.find(':');
    std::size_t skip = 1;
    if (sep == std::string::npos) {
        sep = s.find("..");
        skip = 2;
    }
    if (sep == std::string::npos) throw usage_error("level range must look like lo:hi");
    try {
        unsigned lo = static_cast<unsigned>(std::stoul(s.substr(0, sep)));
        unsigned hi = static_cast<unsigned>(std::stoul(s.substr(sep + skip)));
        if (lo < 1 || hi < lo) throw usage_error("invalid level range '" + s + "'");
        return {lo, hi};
    } catch (const usage_error&) {
        throw;
    } catch (const std::exception&) {
        throw usage_error("invalid level range '" + s + "'");
    }
}

unsigned effective_threads(const RunConfig& cfg) {
    if (cfg.threads) return cfg.threads;
    if (const char* env = std::getenv("CECH23_THREADS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 0;  // auto
}

// runs fn(0..n-1), possibly on several threads, rethrowing the first failure
template <class Fn>
void for_each_indexed(std::size_t n, unsigned threads, Fn fn) {
    if (!threads) {
        unsigned hw = std::thread::hardware_concurrency();
        threads = hw ? hw : 1;
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&](std::size_t lo, std::size_t hi) {
        try {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    std::size_t chunk = (n + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

json dims_json(const std::array<std::size_t, 4>& dims) {
    return json::array({dims[0], dims[1], dims[2], dims[3]});
}

json torsion_json(const std::vector<Int>& tors) {
    json a = json::array();
    for (const Int& t : tors) a.push_back(t.get_str());
    return a;
}

// one level's cohomology payload in the requested domain
json level_payload(const Weight& w, unsigned level, const CoeffDomain& dom) {
    json res;
    res["level"] = level;
    if (!dom.is_field()) {
        IntCohomology c = cohomology_over_integers(w, level);
        res["term_dims"] = dims_json(c.term_dims);
        json hs = json::array();
        for (int j = 0; j <= 3; ++j) {
            const auto& hj = c.h[static_cast<std::size_t>(j)];
            hs.push_back({{"degree", j},
                          {"free_rank", hj.free_rank},
                          {"torsion", torsion_json(hj.torsion)}});
        }
        res["h"] = hs;
    } else {
        FieldCohomology c = dom.kind == CoeffDomain::Kind::rational
                                ? cohomology_over_field<Rat>(w, level, dom)
                                : cohomology_over_field<Fp>(w, level, dom);
        res["term_dims"] = dims_json(c.term_dims);
        res["h"] = dims_json(c.h);
    }
    return res;
}

void sweep_csv_rows(const json& levels, const CoeffDomain& dom, CsvTable& t) {
    if (dom.is_field()) {
        t.header = {"level", "c0", "c1", "c2", "c3", "h0", "h1", "h2", "h3"};
        for (const auto& row : levels) {
            std::vector<std::string> r{row["level"].dump()};
            for (const auto& d : row["term_dims"]) r.push_back(d.dump());
            for (const auto& h : row["h"]) r.push_back(h.dump());
            t.rows.push_back(std::move(r));
        }
    } else {
        t.header = {"level", "c0", "c1", "c2", "c3"};
        for (int j = 0; j <= 3; ++j) {
            t.header.push_back("h" + std::to_string(j) + "_free");
            t.header.push_back("h" + std::to_string(j) + "_torsion");
        }
        for (const auto& row : levels) {
            std::vector<std::string> r{row["level"].dump()};
            for (const auto& d : row["term_dims"]) r.push_back(d.dump());
            for (const auto& h : row["h"]) {
                r.push_back(h["free_rank"].dump());
                std::string tors;
                for (const auto& f : h["torsion"]) {
                    if (!tors.empty()) tors += ';';
                    tors += f.get<std::string>();
                }
                r.push_back(tors);
            }
            t.rows.push_back(std::move(r));
        }
    }
}

json run_compute(const RunConfig& cfg, std::vector<CsvTable>&) {
    Weight w = parse_weight(cfg.weight);
    CoeffDomain dom = domain_from(cfg, true);
    if (cfg.level < 1) throw usage_error("--level must be >= 1");
    json res = level_payload(w, cfg.level, dom);
    res.erase("level");
    json out;
    out["weight"] = w.str();
    out["level"] = cfg.level;
    out["coeff"] = dom.label();
    out.update(res);
    if (!cfg.dump_path.empty()) {
        std::ofstream f(cfg.dump_path);
        if (!f) throw std::runtime_error("cannot open dump file " + cfg.dump_path);
        auto dump_all = [&](const auto& complex) {
            for (int deg = 0; deg <= 2; ++deg) dump_differential(f, complex, deg);
        };
        if (dom.kind == CoeffDomain::Kind::integer)
            dump_all(build_complex<Int>(w, cfg.level, dom));
        else if (dom.kind == CoeffDomain::Kind::rational)
            dump_all(build_complex<Rat>(w, cfg.level, dom));
        else
            dump_all(build_complex<Fp>(w, cfg.level, dom));
        out["dump"] = cfg.dump_path;
    }
    return out;
}

json run_sweep(const RunConfig& cfg, std::vector<CsvTable>& tables) {
    Weight w = parse_weight(cfg.weight);
    CoeffDomain dom = domain_from(cfg, true);
    auto [lo, hi] = parse_level_range(cfg.levels);
    std::vector<json> slots(hi - lo + 1);
    for_each_indexed(slots.size(), effective_threads(cfg), [&](std::size_t i) {
        slots[i] = level_payload(w, lo + static_cast<unsigned>(i), dom);
    });
    json rows = json::array();
    for (auto& s : slots) rows.push_back(std::move(s));  // merge in level order
    json out;
    out["weight"] = w.str();
    out["coeff"] = dom.label();
    out["levels"] = {{"lo", lo}, {"hi", hi}};
    out["rows"] = rows;
    CsvTable t;
    sweep_csv_rows(out["rows"], dom, t);
    tables.push_back(std::move(t));
    return out;
}

json run_class(const RunConfig& cfg, std::vector<CsvTable>&) {
    CoeffDomain dom = domain_from(cfg, false);
    if (cfg.level < 1) throw usage_error("--level must be >= 1");
    bool in_image = dom.kind == CoeffDomain::Kind::rational
                        ? class_in_image<Rat>(cfg.level, dom)
                        : class_in_image<Fp>(cfg.level, dom);
    json out;
    out["weight"] = diagnostic_weight().str();
    out["level"] = cfg.level;
    out["coeff"] = dom.label();
    out["in_image"] = in_image;
    return out;
}

json run_death(const RunConfig& cfg, std::vector<CsvTable>& tables) {
    std::vector<std::uint64_t> primes = cfg.primes;
    if (primes.empty()) {
        if (cfg.p)
            primes.push_back(cfg.p);
        else
            primes = {2, 3, 5};
    }
    for (auto p : primes) check_prime(p);
    if (cfg.n_max < 1) throw usage_error("--n-max must be >= 1");
    std::vector<json> slots(primes.size());
    for_each_indexed(primes.size(), effective_threads(cfg), [&](std::size_t i) {
        DeathReport r = death_level(primes[i], cfg.n_max);
        json j;
        j["p"] = r.p;
        j["probed"] = {{"lo", r.probed_lo}, {"hi", r.probed_hi}};
        json img = json::array();
        for (bool b : r.in_image) img.push_back(b);
        j["in_image"] = img;
        j["death_level"] = r.death_level ? json(*r.death_level) : json(nullptr);
        slots[i] = std::move(j);
    });
    json out;
    out["weight"] = diagnostic_weight().str();
    out["n_max"] = cfg.n_max;
    out["reports"] = json::array();
    CsvTable t;
    t.header = {"p", "death_level", "probed_lo", "probed_hi"};
    for (auto& s : slots) {
        t.rows.push_back({s["p"].dump(), s["death_level"].is_null() ? "" : s["death_level"].dump(),
                          s["probed"]["lo"].dump(), s["probed"]["hi"].dump()});
        out["reports"].push_back(std::move(s));
    }
    tables.push_back(std::move(t));
    return out;
}

json run_colim(const RunConfig& cfg, std::vector<CsvTable>& tables) {
    Weight w = parse_weight(cfg.weight);
    CoeffDomain dom = domain_from(cfg, false);
    if (cfg.degree < 0 || cfg.degree > 3) throw usage_error("--degree must be in 0..3");
    if (cfg.n_lo < 1 || cfg.n_hi <= cfg.n_lo)
        throw usage_error("need 1 <= n-lo < n-hi for a colimit range");
    ColimitTable table = dom.kind == CoeffDomain::Kind::rational
                             ? colimit_rank<Rat>(w, cfg.degree, cfg.n_lo, cfg.n_hi, dom)
                             : colimit_rank<Fp>(w, cfg.degree, cfg.n_lo, cfg.n_hi, dom);
    json out;
    out["weight"] = w.str();
    out["degree"] = table.degree;
    out["n_lo"] = table.n_lo;
    out["n_hi"] = table.n_hi;
    out["coeff"] = dom.label();
    out["ranks"] = table.ranks;
    out["stabilized"] = table.stabilized;
    out["stable_value"] = table.stabilized ? json(table.stable_value) : json(nullptr);
    CsvTable t;
    t.header = {"target_level", "rank"};
    for (std::size_t k = 0; k < table.ranks.size(); ++k)
        t.rows.push_back({std::to_string(table.n_lo + k), std::to_string(table.ranks[k])});
    tables.push_back(std::move(t));
    return out;
}

json run_ucheck(const RunConfig& cfg, std::vector<CsvTable>& tables) {
    Weight w = parse_weight(cfg.weight);
    if (cfg.level < 1) throw usage_error("--level must be >= 1");
    std::vector<std::uint64_t> primes = cfg.primes;
    if (primes.empty()) {
        if (cfg.p)
            primes.push_back(cfg.p);
        else
            primes = {2, 3};
    }
    for (auto p : primes) check_prime(p);
    std::vector<json> slots(primes.size());
    for_each_indexed(primes.size(), effective_threads(cfg), [&](std::size_t i) {
        UctReport r = universal_coefficients_check(w, cfg.level, primes[i]);
        json rows = json::array();
        for (const UctRow& row : r.rows)
            rows.push_back({{"degree", row.degree},
                            {"mod_p_dim", row.mod_p_dim},
                            {"free_rank", row.free_rank},
                            {"tors_here", row.tors_here},
                            {"tors_above", row.tors_above},
                            {"ok", row.ok}});
        slots[i] = {{"p", r.p}, {"ok", r.ok}, {"rows", rows}};
    });
    json out;
    out["weight"] = w.str();
    out["level"] = cfg.level;
    out["reports"] = json::array();
    bool all_ok = true;
    CsvTable t;
    t.header = {"p", "degree", "mod_p_dim", "free_rank", "tors_here", "tors_above", "ok"};
    for (auto& s : slots) {
        all_ok = all_ok && s["ok"].get<bool>();
        for (const auto& row : s["rows"])
            t.rows.push_back({s["p"].dump(), row["degree"].dump(), row["mod_p_dim"].dump(),
                              row["free_rank"].dump(), row["tors_here"].dump(),
                              row["tors_above"].dump(), row["ok"].dump()});
        out["reports"].push_back(std::move(s));
    }
    out["ok"] = all_ok;
    tables.push_back(std::move(t));
    return out;
}

std::vector<std::string> default_h6j_samples() {
    // the diagnostic weight, then deeper weights below it where the punctual
    // side is 1- and 2-dimensional
    const Weight base = diagnostic_weight();
    std::vector<std::string> out{base.str()};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) {
            Monomial m;
            m.at(i, j) = 1;
            out.push_back((base + (-weight_of(m))).str());
        }
    for (int i = 1; i <= 3; ++i) out.push_back((base + (-generator_weight(i))).str());
    return out;
}

json factor_list(Int m) {
    // trial division; indices here are tiny
    json a = json::array();
    for (Int d(2); d * d <= m;) {
        if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            int e = 0;
            while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
                m /= d;
                ++e;
            }
            a.push_back({{"prime", d.get_str()}, {"exponent", e}});
        }
        d += (d == 2) ? 1 : 2;
    }
    if (m > 1) a.push_back({{"prime", m.get_str()}, {"exponent", 1}});
    return a;
}

json run_h6j(const RunConfig& cfg, std::vector<CsvTable>& tables) {
    std::vector<std::string> samples = cfg.weights.empty() ? default_h6j_samples() : cfg.weights;
    if (cfg.h6j_n_lo < 1 || cfg.h6j_n_hi <= cfg.h6j_n_lo)
        throw usage_error("need 1 <= n-lo < n-hi for the comparison colimits");
    if (cfg.trace_lo < 1 || cfg.trace_hi < cfg.trace_lo)
        throw usage_error("invalid trace level range");
    const CoeffDomain q = CoeffDomain::rationals();

    std::vector<json> rows(samples.size());
    for_each_indexed(samples.size(), effective_threads(cfg), [&](std::size_t i) {
        Weight w = parse_weight(samples[i]);
        std::size_t hd = h6_weight_dim(w);
        ColimitTable c = colimit_rank<Rat>(w, 3, cfg.h6j_n_lo, cfg.h6j_n_hi, q);
        json r;
        r["weight"] = w.str();
        r["h6_dim"] = hd;
        r["colim_ranks"] = c.ranks;
        r["stabilized"] = c.stabilized;
        r["colim_stable"] = c.stabilized ? json(c.stable_value) : json(nullptr);
        r["match"] = c.stabilized ? json(c.stable_value == hd) : json(nullptr);
        rows[i] = std::move(r);
    });

    std::vector<json> trace(cfg.trace_hi - cfg.trace_lo + 1);
    for_each_indexed(trace.size(), effective_threads(cfg), [&](std::size_t i) {
        unsigned level = cfg.trace_lo + static_cast<unsigned>(i);
        CechComplex<Int> c = build_complex<Int>(diagnostic_weight(), level, CoeffDomain::integers());
        std::vector<Int> v = canonical_class_vector<Int>(level, CoeffDomain::integers());
        std::optional<Int> m = divisibility_index(c.d[2], v);
        json r;
        r["level"] = level;
        r["solvable_over_q"] = m.has_value();
        r["divisibility_index"] = m ? json(m->get_str()) : json(nullptr);
        r["prime_factors"] = m ? factor_list(*m) : json::array();
        trace[i] = std::move(r);
    });

    json out;
    out["colim_levels"] = {{"lo", cfg.h6j_n_lo}, {"hi", cfg.h6j_n_hi}};
    out["table"] = json::array();
    CsvTable t1;
    t1.header = {"weight", "h6_dim", "colim_stable", "stabilized", "match"};
    for (auto& r : rows) {
        t1.rows.push_back({r["weight"].get<std::string>(), r["h6_dim"].dump(),
                           r["colim_stable"].is_null() ? "" : r["colim_stable"].dump(),
                           r["stabilized"].dump(),
                           r["match"].is_null() ? "" : r["match"].dump()});
        out["table"].push_back(std::move(r));
    }
    out["trace"] = json::array();
    CsvTable t2;
    t2.header = {"level", "solvable_over_q", "divisibility_index", "prime_factors"};
    for (auto& r : trace) {
        std::string factors;
        for (const auto& f : r["prime_factors"]) {
            if (!factors.empty()) factors += ';';
            factors += f["prime"].get<std::string>() + "^" + f["exponent"].dump();
        }
        t2.rows.push_back({r["level"].dump(), r["solvable_over_q"].dump(),
                           r["divisibility_index"].is_null() ? "" : r["divisibility_index"].get<std::string>(),
                           factors});
        out["trace"].push_back(std::move(r));
    }
    tables.push_back(std::move(t1));
    tables.push_back(std::move(t2));
    return out;
}

json complex_json(const Complex& z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json run_residue(const RunConfig& cfg, std::vector<CsvTable>& tables) {
    auto phi = parse_integrand(cfg.phi);
    if (!phi)
        throw usage_error("unknown integrand '" + cfg.phi +
                          "' (inv_f123, inv_f12, inv_f13, inv_f23, poly_over_f23_sq)");
    QuadratureOptions opt;
    if (cfg.method == "quad" || cfg.method == "quadrature")
        opt.method = IntegrationMethod::quadrature;
    else if (cfg.method == "mc" || cfg.method == "monte_carlo")
        opt.method = IntegrationMethod::monte_carlo;
    else
        throw usage_error("unknown method '" + cfg.method + "' (quad or mc)");
    opt.grid = cfg.grid;
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    opt.threads = effective_threads(cfg);
    if (opt.grid < 2) throw usage_error("--grid must be >= 2");

    json out;
    out["phi"] = phi->label;
    out["method"] = opt.method == IntegrationMethod::quadrature ? "quadrature" : "monte_carlo";
    if (opt.method == IntegrationMethod::quadrature)
        out["grid"] = opt.grid;
    else {
        out["samples"] = opt.samples;
        out["seed"] = opt.seed;
    }
    if (cfg.homotopy) {
        if (cfg.lambdas.empty()) throw usage_error("--lambdas must be nonempty");
        HomotopyCheck h = homotopy_invariance_check(*phi, cfg.lambdas, opt);
        out["lambdas"] = h.lambdas;
        json vals = json::array();
        CsvTable t;
        t.header = {"lambda", "re", "im", "abs"};
        for (std::size_t i = 0; i < h.values.size(); ++i) {
            vals.push_back(complex_json(h.values[i]));
            t.rows.push_back({json(h.lambdas[i]).dump(), json(h.values[i].real()).dump(),
                              json(h.values[i].imag()).dump(),
                              json(std::abs(h.values[i])).dump()});
        }
        out["values"] = vals;
        out["max_abs_deviation"] = h.max_abs_deviation;
        out["max_rel_deviation"] = h.max_rel_deviation;
        tables.push_back(std::move(t));
    } else {
        IntegralResult r = integrate(*phi, cfg.lambda, opt);
        out["lambda"] = cfg.lambda;
        out["value"] = complex_json(r.value);
        out["abs"] = std::abs(r.value);
        out["error_estimate"] = r.error_estimate;
        out["evaluations"] = r.evaluations;
    }
    return out;
}

}  // namespace

json config_echo(const RunConfig& cfg) {
    json c;
    c["command"] = cfg.command;
    const std::string& cmd = cfg.command;
    auto coeff_keys = [&] {
        c["coeff"] = cfg.coeff;
        if (cfg.coeff == "fp") c["p"] = cfg.p;
    };
    if (cmd == "compute") {
        c["weight"] = cfg.weight;
        c["level"] = cfg.level;
        coeff_keys();
        if (!cfg.dump_path.empty()) c["dump"] = cfg.dump_path;
    } else if (cmd == "sweep") {
        c["weight"] = cfg.weight;
        c["levels"] = cfg.levels;
        coeff_keys();
    } else if (cmd == "class") {
        c["level"] = cfg.level;
        coeff_keys();
    } else if (cmd == "death") {
        c["primes"] = cfg.primes;
        if (cfg.primes.empty() && cfg.p) c["primes"] = json::array({cfg.p});
        if (c["primes"].empty()) c["primes"] = json::array({2, 3, 5});
        c["n_max"] = cfg.n_max;
    } else if (cmd == "colim") {
        c["weight"] = cfg.weight;
        c["degree"] = cfg.degree;
        c["n_lo"] = cfg.n_lo;
        c["n_hi"] = cfg.n_hi;
        coeff_keys();
    } else if (cmd == "ucheck") {
        c["weight"] = cfg.weight;
        c["level"] = cfg.level;
        json primes = json::array();
        if (!cfg.primes.empty())
            primes = cfg.primes;
        else if (cfg.p)
            primes.push_back(cfg.p);
        else
            primes = json::array({2, 3});
        c["primes"] = primes;
    } else if (cmd == "h6j") {
        c["weights"] = cfg.weights.empty() ? default_h6j_samples() : cfg.weights;
        c["n_lo"] = cfg.h6j_n_lo;
        c["n_hi"] = cfg.h6j_n_hi;
        c["trace_levels"] = {{"lo", cfg.trace_lo}, {"hi", cfg.trace_hi}};
    } else if (cmd == "residue") {
        c["phi"] = cfg.phi;
        c["method"] = cfg.method;
        c["grid"] = cfg.grid;
        c["samples"] = cfg.samples;
        c["seed"] = cfg.seed;
        if (cfg.homotopy)
            c["lambdas"] = cfg.lambdas;
        else
            c["lambda"] = cfg.lambda;
    }
    return c;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"graded truncations of the three-generator Cech complex for the 2x2 minors "
                 "of a generic 2x3 matrix, with exact cohomology and residue integrals"};
    app.name("cech23");

    bool want_json = false, want_csv = false;
    auto* fj = app.add_flag("--json", want_json, "emit the report as JSON");
    auto* fc = app.add_flag("--csv", want_csv, "emit the report as CSV");
    fj->excludes(fc);
    fc->excludes(fj);
    app.add_option("--threads", cfg.threads,
                   "worker threads (default: CECH23_THREADS, then hardware)");
    app.set_config("--config", "", "read key=value defaults from a file");
    app.require_subcommand(1);

    auto add_weight = [&](CLI::App* s) {
        s->add_option("--weight", cfg.weight, "weight r1,r2,c1,c2,c3")->capture_default_str();
    };
    auto add_coeff = [&](CLI::App* s, bool with_z) {
        s->add_option("--coeff", cfg.coeff,
                      with_z ? "coefficients: q, z, or fp" : "coefficients: q or fp")
            ->capture_default_str();
        s->add_option("--p", cfg.p, "prime for --coeff fp");
    };

    CLI::App* compute = app.add_subcommand("compute", "cohomology of one truncated complex");
    add_weight(compute);
    compute->add_option("--level", cfg.level, "truncation level n >= 1")->capture_default_str();
    add_coeff(compute, true);
    compute->add_option("--dump", cfg.dump_path, "write differentials as row/col/value triples");

    CLI::App* sweep = app.add_subcommand("sweep", "cohomology across a level range");
    add_weight(sweep);
    sweep->add_option("--levels", cfg.levels, "level range lo:hi")->capture_default_str();
    add_coeff(sweep, true);

    CLI::App* klass = app.add_subcommand("class", "is the canonical class a coboundary?");
    klass->add_option("--level", cfg.level, "truncation level n >= 1")->capture_default_str();
    add_coeff(klass, false);

    CLI::App* death = app.add_subcommand("death", "first level where the class dies mod p");
    death->add_option("--p", cfg.p, "single prime");
    death->add_option("--primes", cfg.primes, "comma-separated primes")->delimiter(',');
    death->add_option("--n-max", cfg.n_max, "largest probed level")->capture_default_str();

    CLI::App* colim = app.add_subcommand("colim", "ranks of transition maps out of a fixed level");
    add_weight(colim);
    colim->add_option("--degree", cfg.degree, "cohomological degree 0..3")->capture_default_str();
    colim->add_option("--n-lo", cfg.n_lo, "base level")->capture_default_str();
    colim->add_option("--n-hi", cfg.n_hi, "last target level")->capture_default_str();
    add_coeff(colim, false);

    CLI::App* ucheck = app.add_subcommand("ucheck", "universal-coefficients consistency report");
    add_weight(ucheck);
    ucheck->add_option("--level", cfg.level, "truncation level n >= 1")->capture_default_str();
    ucheck->add_option("--p", cfg.p, "single prime");
    ucheck->add_option("--primes", cfg.primes, "comma-separated primes")->delimiter(',');

    CLI::App* h6j = app.add_subcommand(
        "h6j", "graded comparison table against the punctual local cohomology, plus the "
               "integer divisibility trace of the canonical class");
    h6j->add_option("--weight", cfg.weights, "sample weight (repeatable; default: 10 built-ins)");
    h6j->add_option("--n-lo", cfg.h6j_n_lo, "colimit base level")->capture_default_str();
    h6j->add_option("--n-hi", cfg.h6j_n_hi, "colimit last level")->capture_default_str();
    h6j->add_option("--trace-lo", cfg.trace_lo, "first trace level")->capture_default_str();
    h6j->add_option("--trace-hi", cfg.trace_hi, "last trace level")->capture_default_str();

    CLI::App* residue = app.add_subcommand("residue", "numeric period of phi over the 6-cycle");
    residue->add_option("--phi", cfg.phi, "integrand name")->capture_default_str();
    residue->add_option("--lambda", cfg.lambda, "deformation parameter")->capture_default_str();
    residue->add_flag("--homotopy", cfg.homotopy, "integrate across --lambdas and compare");
    residue->add_option("--lambdas", cfg.lambdas, "lambda list for --homotopy")->delimiter(',');
    residue->add_option("--method", cfg.method, "quad or mc")->capture_default_str();
    residue->add_option("--grid", cfg.grid, "quadrature nodes per dimension")
        ->capture_default_str();
    residue->add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str();
    residue->add_option("--seed", cfg.seed, "Monte Carlo seed")->capture_default_str();

    for (CLI::App* s : app.get_subcommands({})) s->fallthrough();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    cfg.command = chosen->get_name();
    if (want_json) cfg.format = "json";
    if (want_csv) cfg.format = "csv";

    using Handler = json (*)(const RunConfig&, std::vector<CsvTable>&);
    Handler handler = nullptr;
    if (cfg.command == "compute") handler = run_compute;
    else if (cfg.command == "sweep") handler = run_sweep;
    else if (cfg.command == "class") handler = run_class;
    else if (cfg.command == "death") handler = run_death;
    else if (cfg.command == "colim") handler = run_colim;
    else if (cfg.command == "ucheck") handler = run_ucheck;
    else if (cfg.command == "h6j") handler = run_h6j;
    else if (cfg.command == "residue") handler = run_residue;

    ReportRecord rec;
    rec.version = version_string;
    try {
        auto t0 = std::chrono::steady_clock::now();
        rec.result = handler(cfg, rec.tables);
        auto t1 = std::chrono::steady_clock::now();
        rec.duration_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    } catch (const usage_error& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    rec.config = config_echo(cfg);
    emit_report(rec, cfg.format, out);
    return 0;
}

}  // namespace cech23::cli
