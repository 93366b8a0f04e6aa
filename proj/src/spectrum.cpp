#include "ttmol/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ttmol::spectrum {

double index_A(const ScaledParams& sp) {
    const double radicand = 1.0 + 4.0 * sp.v1 / (sp.q * sp.q);
    if (!(radicand >= 0.0)) throw std::domain_error("index_A: 1 + 4 v1/q^2 < 0");
    return std::sqrt(radicand);
}

double well_strength(const ScaledParams& sp) { return sp.v0 / sp.q + sp.v1 / (sp.q * sp.q); }

int num_bound_states(const ScaledParams& sp) {
    const double w = well_strength(sp);
    if (!(w > 0.0)) return 0;
    const double A = index_A(sp);
    const double limit = 2.0 * std::sqrt(w);
    int count = static_cast<int>(std::ceil((limit - 1.0 - A) / 2.0));
    if (count < 0) count = 0;
    // Guard the floating-point edge of the strict inequality.
    while (count > 0 && !(2.0 * (count - 1) + 1.0 + A < limit)) --count;
    while (2.0 * count + 1.0 + A < limit) ++count;
    return count;
}

BoundState energy_level(const ScaledParams& sp, int n) {
    if (n < 0 || n >= num_bound_states(sp))
        throw std::out_of_range("energy_level: no such level n = " + std::to_string(n));
    const double A = index_A(sp);
    const double w = well_strength(sp);
    const double Lambda = 2.0 * n + 1.0 + A;
    const double a1 = (4.0 * w - Lambda * Lambda) / (4.0 * Lambda);
    const double eps = -a1 * a1;
    return BoundState{n, a1, A, Lambda, eps, eps};
}

BoundState energy_level(const PotentialParams& p, int n) {
    BoundState s = energy_level(scale(p), n);
    s.E = unscale_energy(p, s.eps);
    return s;
}

NuIntermediates nu_intermediates(const ScaledParams& sp, int n, double eps) {
    if (!(eps < 0.0)) throw std::domain_error("nu_intermediates: eps must be negative");
    if (n < 0) throw std::domain_error("nu_intermediates: n must be nonnegative");
    const double A = index_A(sp);
    const double a1 = std::sqrt(-eps);
    NuIntermediates out{};
    out.a2_sq = 2.0 * eps - sp.v0 / sp.q;
    out.a3_sq = well_strength(sp) - eps;
    out.k_minus = -out.a2_sq - 2.0 * a1 * a1 - a1 * A;
    out.k_plus = -out.a2_sq - 2.0 * a1 * a1 + a1 * A;
    out.pi_c0 = a1;
    out.pi_c1 = -(a1 + 0.5 * (1.0 + A));
    out.tau_c0 = 1.0 + 2.0 * a1;
    out.tau_c1 = -(2.0 + 2.0 * a1 + A);
    out.lambda_ = out.k_minus + out.pi_c1;
    out.lambda_n = n * (2.0 + 2.0 * a1 + A) + n * (n - 1.0);
    return out;
}

double quantization_residual(const ScaledParams& sp, int n, double eps) {
    if (!(eps < 0.0)) throw std::domain_error("quantization_residual: eps must be negative");
    const double A = index_A(sp);
    const double w = well_strength(sp);
    const double Lambda = 2.0 * n + 1.0 + A;
    return std::abs(std::sqrt(-eps) + 0.5 * Lambda - std::sqrt(w - eps));
}

}  // namespace ttmol::spectrum
