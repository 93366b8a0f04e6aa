#include "ttmol/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ttmol/ladder.hpp"
#include "ttmol/oracle.hpp"
#include "ttmol/spectrum.hpp"
#include "ttmol/wavefunc.hpp"

namespace ttmol::cli {

namespace {

using json = nlohmann::ordered_json;

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const std::set<std::string> kKnownKeys = {
    "potential.v0",     "potential.v1",   "potential.V0",          "potential.V1",
    "potential.beta",   "potential.mu",   "potential.hbar",        "potential.D0",
    "potential.r0",     "potential.alpha_shape",                   "potential.q",
    "levels",           "grid.r_max_beta", "grid.npoints",
    "tolerances.quadrature", "tolerances.ladder", "tolerances.oracle",
    "output.directory", "output.formats"};

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + ": not a number: '" + v + "'");
    }
    if (pos != v.size()) throw ConfigError(key + ": not a number: '" + v + "'");
    return x;
}

int parse_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long x = 0;
    try {
        x = std::stol(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + ": not an integer: '" + v + "'");
    }
    if (pos != v.size()) throw ConfigError(key + ": not an integer: '" + v + "'");
    return static_cast<int>(x);
}

json grid_json(const oracle::RadialGrid& g) {
    return json{{"r_min", g.r_min}, {"r_max", g.r_max}, {"npoints", g.npoints}};
}

json check_row(const std::string& check, json params, double residual, double tolerance) {
    return json{{"check", check},
                {"params", std::move(params)},
                {"residual", residual},
                {"tolerance", tolerance},
                {"pass", residual <= tolerance}};
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path.string());
    out << text;
}

void write_report(const std::filesystem::path& path, const json& rows) {
    write_text(path, rows.dump(2) + "\n");
}

bool all_pass(const json& rows) {
    return std::all_of(rows.begin(), rows.end(),
                       [](const json& r) { return r.at("pass").get<bool>(); });
}

int resolved_levels(const RunConfig& cfg, const ScaledParams& sp) {
    const int total = spectrum::num_bound_states(sp);
    if (cfg.levels < 0) return total;
    return std::min(cfg.levels, total);
}

// ---- subcommands ----------------------------------------------------------

int cmd_spectrum(const RunConfig& cfg, const std::filesystem::path& dir) {
    const ScaledParams sp = cfg.scaled();
    const auto phys = cfg.physical();
    const int count = resolved_levels(cfg, sp);
    std::ostringstream csv;
    csv << "n,Lambda,a1,eps,E\n";
    json rows = json::array();
    for (int n = 0; n < count; ++n) {
        spectrum::BoundState s = phys ? spectrum::energy_level(*phys, n)
                                      : spectrum::energy_level(sp, n);
        csv << s.n << ',' << fmt17(s.Lambda) << ',' << fmt17(s.a1) << ',' << fmt17(s.eps) << ','
            << fmt17(s.E) << '\n';
        rows.push_back(json{
            {"n", s.n}, {"Lambda", s.Lambda}, {"a1", s.a1}, {"eps", s.eps}, {"E", s.E}});
    }
    if (cfg.emit_csv) write_text(dir / "spectrum.csv", csv.str());
    if (cfg.emit_json) write_report(dir / "spectrum.json", rows);
    return 0;
}

int cmd_wavefunction(const RunConfig& cfg, const std::filesystem::path& dir) {
    const ScaledParams sp = cfg.scaled();
    const double beta = cfg.beta_value();
    const int count = resolved_levels(cfg, sp);
    std::vector<wavefunc::WaveState> states;
    for (int n = 0; n < count; ++n)
        states.push_back(wavefunc::eigenstate(sp, n, wavefunc::NormConvention::Radial, beta));
    std::ostringstream csv;
    csv << "r,x";
    for (int n = 0; n < count; ++n) csv << ",R_" << n;
    csv << '\n';
    const double rho_max = cfg.r_max_beta;
    for (int i = 1; i <= cfg.npoints; ++i) {
        const double rho = rho_max * i / cfg.npoints;
        const double r = rho / beta;
        const double x = sp.q * std::exp(-rho);
        csv << fmt17(r) << ',' << fmt17(x);
        for (const auto& ws : states) csv << ',' << fmt17(wavefunc::eval_r(ws, beta, r));
        csv << '\n';
    }
    if (cfg.emit_csv) write_text(dir / "wavefunction.csv", csv.str());
    return 0;
}

int cmd_ladder_check(const RunConfig& cfg, const std::filesystem::path& dir) {
    const ScaledParams sp = cfg.scaled();
    if (spectrum::num_bound_states(sp) == 0)
        throw std::domain_error("ladder-check: potential has no bound state (no family a1)");
    const spectrum::BoundState ground = spectrum::energy_level(sp, 0);
    const double a1 = ground.a1, A = ground.A, q = sp.q;
    const json fam{{"a1", a1}, {"A", A}, {"q", q}};
    json rows = json::array();
    {
        json p = fam;
        p["n"] = 0;
        rows.push_back(check_row("annihilation", p, ladder::annihilation_residual(a1, A, q),
                                 cfg.tol_ladder));
    }
    for (int n = 1; n <= 8; ++n) {
        json p = fam;
        p["n"] = n;
        rows.push_back(check_row("lower-proportionality", p, ladder::lower_residual(n, a1, A, q),
                                 cfg.tol_ladder));
    }
    for (int n = 0; n <= 8; ++n) {
        json p = fam;
        p["n"] = n;
        rows.push_back(check_row("raise-proportionality", p, ladder::raise_residual(n, a1, A, q),
                                 cfg.tol_ladder));
    }
    write_report(dir / "ladder_report.json", rows);
    return all_pass(rows) ? 0 : 1;
}

int cmd_algebra_check(const RunConfig& cfg, const std::filesystem::path& dir) {
    const ScaledParams sp = cfg.scaled();
    if (spectrum::num_bound_states(sp) == 0)
        throw std::domain_error("algebra-check: potential has no bound state (no family a1)");
    const spectrum::BoundState ground = spectrum::energy_level(sp, 0);
    const double a1 = ground.a1, A = ground.A, q = sp.q;
    const json fam{{"a1", a1}, {"A", A}, {"q", q}};
    json rows = json::array();
    for (int n = 1; n <= 8; ++n) {
        json p = fam;
        p["n"] = n;
        const ladder::LadderCoeffs k = ladder::kappa_coeffs(n, a1, A);
        rows.push_back(check_row("kappa-sum", p, std::abs(k.kappa2 + k.kappa3 - n), 1e-13));
        const ladder::CommutatorResiduals c = ladder::commutator_check(n, a1, A, q);
        rows.push_back(check_row("commutator-lower-raise", p, c.lower_raise, cfg.tol_ladder));
        rows.push_back(check_row("commutator-weight-raise", p, c.weight_raise, cfg.tol_ladder));
        rows.push_back(check_row("commutator-lower-weight", p, c.lower_weight, cfg.tol_ladder));
        // eigenvalue identity (n+1)(n+1+A) - n(n+A) = 2n+1+A
        const double lhs = (n + 1.0) * (n + 1.0 + A) - n * (n + A);
        rows.push_back(check_row("eigenvalue-identity", p,
                                 std::abs(lhs - (2.0 * n + 1.0 + A)) / (1.0 + std::abs(lhs)),
                                 1e-14));
    }
    {
        const double c = 0.5 * (1.0 + A);
        double dev = 0.0;
        for (int n = 0; n <= 50; ++n) {
            const ladder::CasimirPair pair = ladder::casimir_orderings(n, A);
            dev = std::max(dev, std::abs(pair.raise_then_lower - c * (c - 1.0)));
            dev = std::max(dev, std::abs(pair.lower_then_raise - c * (c - 1.0)));
        }
        json p = fam;
        p["n_max"] = 50;
        rows.push_back(check_row("casimir-constancy", p, dev / (1.0 + std::abs(c * (c - 1.0))),
                                 1e-12));
    }
    write_report(dir / "algebra_report.json", rows);
    return all_pass(rows) ? 0 : 1;
}

int cmd_oracle_compare(const RunConfig& cfg, const std::filesystem::path& dir) {
    const ScaledParams sp = cfg.scaled();
    const int count = resolved_levels(cfg, sp);
    oracle::RadialGrid grid;
    grid.r_min = 0.0;
    grid.r_max = cfg.r_max_beta;
    grid.npoints = cfg.npoints;
    json rows = json::array();
    if (count > 0) {
        const std::vector<double> extrap = oracle::richardson(sp, grid, count);
        for (int n = 0; n < count; ++n) {
            const spectrum::BoundState s = spectrum::energy_level(sp, n);
            const double err = std::abs(extrap[n] - s.eps);
            json row = check_row("oracle-level", json{{"n", n}}, err, cfg.tol_oracle);
            row["eps_analytic"] = s.eps;
            row["eps_oracle"] = extrap[n];
            row["abs_err"] = err;
            row["grid"] = grid_json(grid);
            rows.push_back(std::move(row));
        }
    }
    write_report(dir / "oracle_report.json", rows);
    return all_pass(rows) ? 0 : 1;
}

// ---- config ---------------------------------------------------------------

RunConfig finalize(const std::map<std::string, std::string>& kv) {
    RunConfig cfg;
    auto has = [&](const std::string& k) { return kv.count(k) > 0; };
    auto dbl = [&](const std::string& k) { return parse_double(k, kv.at(k)); };

    const bool dimless = has("potential.v0") || has("potential.v1");
    const bool physical = has("potential.V0") || has("potential.V1") || has("potential.beta");
    const bool molecular = has("potential.D0") || has("potential.r0") || has("potential.alpha_shape");
    if (dimless + physical + molecular != 1)
        throw ConfigError(dimless + physical + molecular == 0
                              ? "no potential parameterization given"
                              : "conflicting potential parameterizations");
    if (!has("potential.q")) throw ConfigError("potential.q is required");
    cfg.q = dbl("potential.q");

    auto require = [&](std::initializer_list<const char*> keys) {
        for (const char* k : keys)
            if (!has(k)) throw ConfigError(std::string("missing key ") + k);
    };
    auto forbid_units = [&]() {
        if (has("potential.mu") || has("potential.hbar"))
            throw ConfigError("mu/hbar do not apply to the dimensionless parameterization");
    };
    if (dimless) {
        require({"potential.v0", "potential.v1"});
        forbid_units();
        cfg.kind = RunConfig::PotentialKind::Dimensionless;
        cfg.v0 = dbl("potential.v0");
        cfg.v1 = dbl("potential.v1");
    } else if (physical) {
        require({"potential.V0", "potential.V1", "potential.beta", "potential.mu",
                 "potential.hbar"});
        cfg.kind = RunConfig::PotentialKind::Physical;
        cfg.V0 = dbl("potential.V0");
        cfg.V1 = dbl("potential.V1");
        cfg.beta = dbl("potential.beta");
        cfg.mu = dbl("potential.mu");
        cfg.hbar = dbl("potential.hbar");
    } else {
        require({"potential.D0", "potential.r0", "potential.alpha_shape", "potential.mu",
                 "potential.hbar"});
        cfg.kind = RunConfig::PotentialKind::Molecular;
        cfg.D0 = dbl("potential.D0");
        cfg.r0 = dbl("potential.r0");
        cfg.alpha_shape = dbl("potential.alpha_shape");
        cfg.mu = dbl("potential.mu");
        cfg.hbar = dbl("potential.hbar");
    }

    if (has("levels")) {
        const std::string v = kv.at("levels");
        if (v == "all") {
            cfg.levels = -1;
        } else {
            cfg.levels = parse_int("levels", v);
            if (cfg.levels < 0) throw ConfigError("levels must be nonnegative or 'all'");
        }
    }
    if (has("grid.r_max_beta")) cfg.r_max_beta = dbl("grid.r_max_beta");
    if (!(cfg.r_max_beta > 0.0)) throw ConfigError("grid.r_max_beta must be positive");
    if (has("grid.npoints")) cfg.npoints = parse_int("grid.npoints", kv.at("grid.npoints"));
    if (cfg.npoints < 3) throw ConfigError("grid.npoints must be >= 3");
    if (has("tolerances.quadrature")) cfg.tol_quadrature = dbl("tolerances.quadrature");
    if (has("tolerances.ladder")) cfg.tol_ladder = dbl("tolerances.ladder");
    if (has("tolerances.oracle")) cfg.tol_oracle = dbl("tolerances.oracle");
    if (!(cfg.tol_quadrature > 0.0 && cfg.tol_ladder > 0.0 && cfg.tol_oracle > 0.0))
        throw ConfigError("tolerances must be positive");
    if (has("output.directory")) cfg.output_directory = kv.at("output.directory");
    if (has("output.formats")) {
        cfg.emit_csv = cfg.emit_json = false;
        std::stringstream ss(kv.at("output.formats"));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            tok = trim(tok);
            if (tok == "csv")
                cfg.emit_csv = true;
            else if (tok == "json")
                cfg.emit_json = true;
            else
                throw ConfigError("output.formats: unknown format '" + tok + "'");
        }
        if (!cfg.emit_csv && !cfg.emit_json) throw ConfigError("output.formats: empty");
    }
    cfg.scaled();  // validate the potential parameters now
    return cfg;
}

}  // namespace

ScaledParams RunConfig::scaled() const {
    switch (kind) {
        case PotentialKind::Dimensionless:
            return ScaledParams(v0, v1, q);
        case PotentialKind::Physical:
            return scale(PotentialParams(V0, V1, beta, q, mu, hbar));
        case PotentialKind::Molecular:
            return scale(from_molecular(D0, r0, alpha_shape, q, mu, hbar));
    }
    throw std::logic_error("unreachable");
}

std::optional<PotentialParams> RunConfig::physical() const {
    switch (kind) {
        case PotentialKind::Dimensionless:
            return std::nullopt;
        case PotentialKind::Physical:
            return PotentialParams(V0, V1, beta, q, mu, hbar);
        case PotentialKind::Molecular:
            return from_molecular(D0, r0, alpha_shape, q, mu, hbar);
    }
    throw std::logic_error("unreachable");
}

double RunConfig::beta_value() const {
    const auto p = physical();
    return p ? p->beta : 1.0;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kKnownKeys.count(key))
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (kv.count(key))
            throw ConfigError(path + ":" + std::to_string(lineno) + ": duplicate key '" + key +
                              "'");
        kv[key] = value;
    }
    try {
        return finalize(kv);
    } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
    }
}

int run(const std::vector<std::string>& args) {
    static const std::set<std::string> kSubcommands = {"spectrum",      "wavefunction",
                                                       "ladder-check",  "algebra-check",
                                                       "oracle-compare", "all"};
    const std::string usage =
        "usage: ttmol <spectrum|wavefunction|ladder-check|algebra-check|oracle-compare|all> "
        "<config-file>";
    if (args.size() != 2 || !kSubcommands.count(args[0])) {
        std::cerr << usage << '\n';
        return 2;
    }
    const std::string& sub = args[0];
    try {
        const RunConfig cfg = load_config(args[1]);
        const std::filesystem::path dir(cfg.output_directory);
        std::filesystem::create_directories(dir);
        if (sub == "spectrum") return cmd_spectrum(cfg, dir);
        if (sub == "wavefunction") return cmd_wavefunction(cfg, dir);
        if (sub == "ladder-check") return cmd_ladder_check(cfg, dir);
        if (sub == "algebra-check") return cmd_algebra_check(cfg, dir);
        if (sub == "oracle-compare") return cmd_oracle_compare(cfg, dir);
        // all
        int rc = 0;
        rc = std::max(rc, cmd_spectrum(cfg, dir));
        rc = std::max(rc, cmd_wavefunction(cfg, dir));
        rc = std::max(rc, cmd_ladder_check(cfg, dir));
        rc = std::max(rc, cmd_algebra_check(cfg, dir));
        rc = std::max(rc, cmd_oracle_compare(cfg, dir));
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace ttmol::cli
