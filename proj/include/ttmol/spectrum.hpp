#pragma once

#include "ttmol/potential.hpp"

namespace ttmol::spectrum {

/// One bound level. a1 = sqrt(-eps) is the large-r decay index, A the second
/// Jacobi index of the eigenfunction family, Lambda = 2n + 1 + A. eps is the
/// dimensionless energy 2 mu E/(beta^2 hbar^2) < 0; E carries physical units
/// when the level was built from PotentialParams (equals eps otherwise).
struct BoundState {
    int n;
    double a1;
    double A;
    double Lambda;
    double eps;
    double E;
};

/// The x-space reduction intermediates at energy eps: the quadratic
/// coefficients a2^2, a3^2, the two discriminant roots k_-/k_+, the linear
/// pi(x) and tau(x), and the two eigenvalue-equation sides lambda, lambda_n.
struct NuIntermediates {
    double k_minus;
    double k_plus;
    double pi_c0, pi_c1;    // pi(x)  = pi_c0  + pi_c1  * x
    double tau_c0, tau_c1;  // tau(x) = tau_c0 + tau_c1 * x  (tau_c1 < 0)
    double lambda_;
    double lambda_n;
    double a2_sq;
    double a3_sq;
};

/// A = sqrt(1 + 4 v1/q^2); domain error if the radicand is negative.
double index_A(const ScaledParams& sp);

/// Pocket well strength w = v0/q + v1/q^2 (bound levels need Lambda < 2 sqrt(w)).
double well_strength(const ScaledParams& sp);

/// Number of normalizable levels: integers n >= 0 with 2n + 1 + A < 2 sqrt(w).
int num_bound_states(const ScaledParams& sp);

/// Closed-form level n: eps_n = -[(Lambda^2 - 4w)/(4 Lambda)]^2.
/// Throws std::out_of_range when n >= num_bound_states.
BoundState energy_level(const ScaledParams& sp, int n);

/// Same, with E in physical units.
BoundState energy_level(const PotentialParams& p, int n);

/// Reduction intermediates at (n, eps); eps < 0 required. At eps = eps_n the
/// two lambdas agree and tau' < 0.
NuIntermediates nu_intermediates(const ScaledParams& sp, int n, double eps);

/// |sqrt(-eps) + Lambda/2 - sqrt(w - eps)|: zero exactly at eps_n, strictly
/// monotone in eps on (-inf, 0).
double quantization_residual(const ScaledParams& sp, int n, double eps);

}  // namespace ttmol::spectrum
