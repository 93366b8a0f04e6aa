#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ttmol/potential.hpp"

namespace ttmol::cli {

/// Parsed and fully defaulted run configuration (flat `key = value` file,
/// `#` comments, strict keys). Exactly one potential parameterization.
struct RunConfig {
    enum class PotentialKind { Dimensionless, Physical, Molecular };

    PotentialKind kind = PotentialKind::Dimensionless;
    double v0 = 0.0, v1 = 0.0;                    // dimensionless couplings
    double V0 = 0.0, V1 = 0.0, beta = 0.0;        // physical potential
    double D0 = 0.0, r0 = 0.0, alpha_shape = 0.0; // molecular parameterization
    double mu = 0.0, hbar = 0.0;                  // physical/molecular only
    double q = 1.0;

    int levels = -1;  // -1 = all bound levels
    double r_max_beta = 40.0;
    int npoints = 4000;
    double tol_quadrature = 1e-10;
    double tol_ladder = 1e-10;
    double tol_oracle = 5e-4;
    std::string output_directory = ".";
    bool emit_csv = true;
    bool emit_json = true;

    /// Dimensionless couplings of the configured potential.
    ScaledParams scaled() const;
    /// Physical parameters when the config carries units.
    std::optional<PotentialParams> physical() const;
    /// beta for r-space exports (1 in the dimensionless case).
    double beta_value() const;
};

/// Parse + validate a config file. Throws std::runtime_error with a
/// line-numbered diagnostic on any problem.
RunConfig load_config(const std::string& path);

/// Entry point behind the executable: args are argv[1:], i.e.
/// {subcommand, config-path}. Subcommands: spectrum, wavefunction,
/// ladder-check, algebra-check, oracle-compare, all.
/// Returns 0 (all checks pass), 1 (a verification failed), 2 (usage,
/// config or domain error).
int run(const std::vector<std::string>& args);

}  // namespace ttmol::cli
