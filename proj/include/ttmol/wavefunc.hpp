#pragma once

#include "ttmol/potential.hpp"
#include "ttmol/spectrum.hpp"

namespace ttmol::wavefunc {

/// Which integral the normalization constant makes equal to 1:
///   UnitInterval:   int_0^1 f(q y)^2 dy = 1   (unit interval in y = x/q)
///   Radial:  int_0^inf R(r)^2 dr = 1   (radial measure)
enum class NormConvention { UnitInterval, Radial };

/// One member of the Jacobi-weighted family
///   f_n(x) = norm_const * x^{a1} (1-x)^{(1+A)/2} P_n^{(2a1, A)}(1-2x),
/// defined on x in (0, q].
struct WaveState {
    int n;
    double a1;
    double A;
    double q;
    double norm_const;
    NormConvention convention;
};

/// f_n at x; x must lie in (0, q].
double eval_x(const WaveState& ws, double x);

/// f_n at x = q e^{-beta r}; r > 0 (r >= 0 allowed when q < 1).
double eval_r(const WaveState& ws, double beta, double r);

/// Unit-interval normalization constant A_n (numerical quadrature with the
/// endpoint weights absorbed into the rule).
double normalize_unit_interval(int n, double a1, double A, double q);

/// Radial-measure constant N_n: (1/beta) int_0^q x^{2a1-1}(1-x)^{1+A} P_n^2 dx = 1.
double normalize_radial(int n, double a1, double A, double q, double beta);

/// A_n from the binomial expansion of P_n^2: a double sum of Beta factors
/// (q = 1) or positive-term 2F1 factors (q < 1). Independent of the
/// quadrature route; agrees with normalize_unit_interval to ~1e-12.
double closed_form_norm(int n, double a1, double A, double q);

/// Eigenstate n of the potential sp, normalized in the chosen convention
/// (beta only matters for Radial).
WaveState eigenstate(const ScaledParams& sp, int n, NormConvention convention, double beta = 1.0);

/// |int_0^inf R_a R_b dr| for two Radial eigenstates of one potential
/// (same A and q, each with its own a1). 1 on the diagonal, ~0 off it.
double orthogonality_residual(const WaveState& a, const WaveState& b, double beta);

}  // namespace ttmol::wavefunc
