#include "ttmol/wavefunc.hpp"

#include <cmath>
#include <stdexcept>

#include "ttmol/specfun.hpp"

namespace ttmol::wavefunc {

namespace {

using specfun::JacobiPoly;

// q^{2a1} * int_0^1 y^{p'} (1-qy)^{1+A} G(y) dy with G a Jacobi-polynomial
// product; p' = 2a1 for the unit-interval measure, 2a1 - 1 for the radial one.
// For q = 1 both endpoint weights go into the Gauss-Jacobi rule (polynomial
// integrand, exact); for q < 1 only y^{p'} does and (1-qy)^{1+A} stays smooth.
double weight_moment(double p, double A, double q, const std::function<double(double)>& G) {
    if (q == 1.0)
        return specfun::weighted_unit_integral(p, 1.0 + A, G);
    return specfun::weighted_unit_integral(
        p, 0.0, [&](double y) { return std::pow(1.0 - q * y, 1.0 + A) * G(y); });
}

void check_family(double a1, double q) {
    if (!(a1 > 0.0)) throw std::domain_error("family requires a1 > 0");
    if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("q must lie in (0,1]");
}

}  // namespace

double eval_x(const WaveState& ws, double x) {
    if (!(x > 0.0 && x <= ws.q)) throw std::domain_error("eval_x: x must lie in (0, q]");
    return ws.norm_const * std::pow(x, ws.a1) * std::pow(1.0 - x, 0.5 * (1.0 + ws.A)) *
           specfun::jacobi_eval({ws.n, 2.0 * ws.a1, ws.A}, 1.0 - 2.0 * x);
}

double eval_r(const WaveState& ws, double beta, double r) {
    if (r < 0.0 || (r == 0.0 && ws.q == 1.0))
        throw std::domain_error("eval_r: r must be positive (r = 0 needs q < 1)");
    const double x = ws.q * std::exp(-beta * r);
    if (x == 0.0) return 0.0;  // underflow far in the tail
    return eval_x(ws, x);
}

double normalize_unit_interval(int n, double a1, double A, double q) {
    check_family(a1, q);
    const JacobiPoly p{n, 2.0 * a1, A};
    const double I =
        std::pow(q, 2.0 * a1) * weight_moment(2.0 * a1, A, q, [&](double y) {
            const double v = specfun::jacobi_eval(p, 1.0 - 2.0 * q * y);
            return v * v;
        });
    return 1.0 / std::sqrt(I);
}

double normalize_radial(int n, double a1, double A, double q, double beta) {
    check_family(a1, q);
    if (!(beta > 0.0)) throw std::invalid_argument("beta must be positive");
    const JacobiPoly p{n, 2.0 * a1, A};
    // (1/beta) int_0^q x^{2a1-1}(1-x)^{1+A} P^2 dx, x = q y.
    const double I =
        std::pow(q, 2.0 * a1) / beta * weight_moment(2.0 * a1 - 1.0, A, q, [&](double y) {
            const double v = specfun::jacobi_eval(p, 1.0 - 2.0 * q * y);
            return v * v;
        });
    return 1.0 / std::sqrt(I);
}

double closed_form_norm(int n, double a1, double A, double q) {
    check_family(a1, q);
    // P_n^{(2a1,A)}(1-2qy) = sum_k (-1)^{n-k} g_k (qy)^{n-k} (1-qy)^k with
    // g_k = C(n+2a1,k) C(n+A,n-k); squaring and integrating term by term:
    //   I = q^{2a1} sum_{k,l} (-1)^{k+l} g_k g_l q^{2n-k-l} T(k,l),
    //   T = int_0^1 y^{b-1} (1-qy)^{s} dy,  b = 2a1+2n-k-l+1,  s = 1+A+k+l.
    std::vector<double> g(n + 1);
    for (int k = 0; k <= n; ++k)
        g[k] = specfun::gen_binomial(n + 2.0 * a1, k) * specfun::gen_binomial(n + A, n - k);
    double acc = 0.0, comp = 0.0;
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; l <= n; ++l) {
            const double b = 2.0 * a1 + 2.0 * n - k - l + 1.0;
            const double s = 1.0 + A + k + l;
            double T;
            if (q == 1.0) {
                T = std::exp(specfun::ln_gamma(b) + specfun::ln_gamma(s + 1.0) -
                             specfun::ln_gamma(b + s + 1.0));
            } else {
                // int y^{b-1}(1-qy)^s dy = 2F1(-s, b; b+1; q)/b; the Euler
                // transform (1-q)^{1+s} 2F1(1, b+s+1; b+1; q) keeps every
                // series term positive.
                T = std::pow(1.0 - q, 1.0 + s) * specfun::gauss_2f1(1.0, b + s + 1.0, b + 1.0, q) /
                    b;
            }
            const double sign = ((k + l) % 2 == 0) ? 1.0 : -1.0;
            const double term = sign * g[k] * g[l] * std::pow(q, 2.0 * n - k - l) * T - comp;
            const double t = acc + term;
            comp = (t - acc) - term;
            acc = t;
        }
    }
    const double I = std::pow(q, 2.0 * a1) * acc;
    if (!(I > 0.0)) throw std::runtime_error("closed_form_norm: nonpositive norm integral");
    return 1.0 / std::sqrt(I);
}

WaveState eigenstate(const ScaledParams& sp, int n, NormConvention convention, double beta) {
    const spectrum::BoundState level = spectrum::energy_level(sp, n);
    const double norm = (convention == NormConvention::UnitInterval)
                            ? normalize_unit_interval(n, level.a1, level.A, sp.q)
                            : normalize_radial(n, level.a1, level.A, sp.q, beta);
    return WaveState{n, level.a1, level.A, sp.q, norm, convention};
}

double orthogonality_residual(const WaveState& a, const WaveState& b, double beta) {
    if (a.convention != NormConvention::Radial || b.convention != NormConvention::Radial)
        throw std::invalid_argument("orthogonality_residual: states must be Radial-normalized");
    if (a.A != b.A || a.q != b.q)
        throw std::invalid_argument("orthogonality_residual: states belong to different potentials");
    const JacobiPoly pa{a.n, 2.0 * a.a1, a.A};
    const JacobiPoly pb{b.n, 2.0 * b.a1, b.A};
    const double q = a.q;
    // (1/beta) int_0^q x^{a1a+a1b-1} (1-x)^{1+A} P_a P_b dx
    const double I = std::pow(q, a.a1 + b.a1) / beta *
                     weight_moment(a.a1 + b.a1 - 1.0, a.A, q, [&](double y) {
                         const double z = 1.0 - 2.0 * q * y;
                         return specfun::jacobi_eval(pa, z) * specfun::jacobi_eval(pb, z);
                     });
    return std::abs(a.norm_const * b.norm_const * I);
}

}  // namespace ttmol::wavefunc
