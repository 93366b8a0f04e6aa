#include "ttmol/potential.hpp"

#include <cmath>
#include <stdexcept>

namespace ttmol {

namespace {

void check_shape(double q) {
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in (0,1]");
}

}  // namespace

PotentialParams::PotentialParams(double V0_, double V1_, double beta_, double q_, double mu_,
                                 double hbar_)
    : V0(V0_), V1(V1_), beta(beta_), q(q_), mu(mu_), hbar(hbar_) {
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    check_shape(q);
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
    const double radicand = 1.0 + 8.0 * mu * V1 / (q * q * beta * beta * hbar * hbar);
    if (!(radicand >= 0.0))
        throw std::invalid_argument("V1 too negative: 1 + 8 mu V1/(q^2 beta^2 hbar^2) < 0");
}

ScaledParams::ScaledParams(double v0_, double v1_, double q_) : v0(v0_), v1(v1_), q(q_) {
    check_shape(q);
    if (!(1.0 + 4.0 * v1 / (q * q) >= 0.0))
        throw std::invalid_argument("v1 too negative: 1 + 4 v1/q^2 < 0");
}

double potential_eval(const PotentialParams& p, double r) {
    if (r < 0.0 || (r == 0.0 && p.q == 1.0))
        throw std::domain_error(r < 0.0 ? "potential_eval: r must be nonnegative"
                                        : "potential_eval: singular at r = 0 for q = 1");
    const double x = p.q * std::exp(-p.beta * r);
    const double d = 1.0 - x;
    const double e = std::exp(-p.beta * r);
    return -p.V0 * e / d + p.V1 * e * e / (d * d);
}

ScaledParams scale(const PotentialParams& p) {
    const double c = 2.0 * p.mu / (p.beta * p.beta * p.hbar * p.hbar);
    return ScaledParams(c * p.V0, c * p.V1, p.q);
}

double scale_energy(const PotentialParams& p, double E) {
    return 2.0 * p.mu * E / (p.beta * p.beta * p.hbar * p.hbar);
}

double unscale_energy(const PotentialParams& p, double eps) {
    return eps * p.beta * p.beta * p.hbar * p.hbar / (2.0 * p.mu);
}

PotentialParams from_molecular(double D0, double r0, double alpha_shape, double q, double mu,
                               double hbar) {
    if (!(D0 > 0.0)) throw std::invalid_argument("D0 must be positive");
    if (!(r0 > 0.0)) throw std::invalid_argument("r0 must be positive");
    if (!(alpha_shape > 0.0)) throw std::invalid_argument("alpha_shape must be positive");
    check_shape(q);
    const double V1 = D0 * (std::exp(alpha_shape) - q);
    const double beta = alpha_shape / r0;
    if (V1 <= 0.0) {
        // Negative well strength is acceptable only while the level formula stays real.
        const double radicand = 1.0 + 8.0 * mu * V1 / (q * q * beta * beta * hbar * hbar);
        if (!(radicand >= 0.0)) throw std::invalid_argument("invalid depth: e^{alpha_shape} <= q");
    }
    return PotentialParams(2.0 * V1, V1, beta, q, mu, hbar);
}

bool is_hulthen_limit(const PotentialParams& p) { return p.V1 == 0.0; }

}  // namespace ttmol
