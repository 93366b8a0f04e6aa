#pragma once

namespace ttmol {

/// Physical parameters of the screened two-term potential
///   V(r) = -V0 e^{-beta r}/(1 - q e^{-beta r}) + V1 e^{-2 beta r}/(1 - q e^{-beta r})^2.
/// Construction validates beta > 0, 0 < q <= 1, mu > 0, hbar > 0 and
/// 1 + 8 mu V1 / (q^2 beta^2 hbar^2) >= 0 (keeps the level formula real).
struct PotentialParams {
    double V0;
    double V1;
    double beta;
    double q;
    double mu;
    double hbar;

    PotentialParams(double V0_, double V1_, double beta_, double q_, double mu_, double hbar_);
};

/// Dimensionless couplings v = 2 mu V / (beta^2 hbar^2); all internal math
/// works in these units (energies as eps = 2 mu E / (beta^2 hbar^2)).
struct ScaledParams {
    double v0;
    double v1;
    double q;

    ScaledParams(double v0_, double v1_, double q_);
};

/// V(r); domain r > 0 (r >= 0 also fine for q < 1). Throws on the q = 1,
/// r -> 0 singularity.
double potential_eval(const PotentialParams& p, double r);

/// Dimensionless couplings of p.
ScaledParams scale(const PotentialParams& p);

/// eps = 2 mu E / (beta^2 hbar^2).
double scale_energy(const PotentialParams& p, double E);

/// E from eps; inverse of scale_energy.
double unscale_energy(const PotentialParams& p, double eps);

/// Morse-like parameterization: V1 = D0 (e^{alpha_shape} - q), V0 = 2 V1,
/// beta = alpha_shape / r0. The shape exponent is a separate parameter
/// (it is not the reduced mass).
PotentialParams from_molecular(double D0, double r0, double alpha_shape, double q, double mu,
                               double hbar);

/// True iff V1 == 0 exactly (screened-Coulomb special case).
bool is_hulthen_limit(const PotentialParams& p);

}  // namespace ttmol
