#include "ttmol/specfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tridiag.hpp"

namespace ttmol::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) < 1e-13;
}

}  // namespace

double ln_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("ln_gamma: argument must be positive");
    return std::lgamma(x);
}

double gen_binomial(double a, int k) {
    if (k < 0) throw std::domain_error("gen_binomial: k must be nonnegative");
    // C(a,k) = prod_{i=1..k} (a-k+i)/i; finite for every real a.
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r *= (a - k + i) / i;
    return r;
}

double jacobi_eval(const JacobiPoly& p, double z) {
    const double a = p.alpha, b = p.beta_idx;
    if (p.n < 0) throw std::domain_error("jacobi_eval: degree must be nonnegative");
    if (p.n == 0) return 1.0;
    double pm1 = 1.0;
    double pc = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * z;
    for (int m = 2; m <= p.n; ++m) {
        const double s = 2.0 * m + a + b;
        const double c1 = 2.0 * m * (m + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (a * a - b * b);
        const double c3 = (s - 2.0) * (s - 1.0) * s;
        const double c4 = 2.0 * (m + a - 1.0) * (m + b - 1.0) * s;
        const double pn = ((c2 + c3 * z) * pc - c4 * pm1) / c1;
        pm1 = pc;
        pc = pn;
    }
    return pc;
}

double jacobi_eval_sum(const JacobiPoly& p, double z) {
    // 2^{-n} sum_k C(n+alpha,k) C(n+beta,n-k) (z-1)^{n-k} (1+z)^k
    double s = 0.0;
    for (int k = 0; k <= p.n; ++k) {
        s += gen_binomial(p.n + p.alpha, k) * gen_binomial(p.n + p.beta_idx, p.n - k) *
             std::pow(z - 1.0, p.n - k) * std::pow(z + 1.0, k);
    }
    return std::ldexp(s, -p.n);
}

double jacobi_derivative(const JacobiPoly& p, double z) {
    if (p.n < 0) throw std::domain_error("jacobi_derivative: degree must be nonnegative");
    if (p.n == 0) return 0.0;
    return 0.5 * (p.n + p.alpha + p.beta_idx + 1.0) *
           jacobi_eval({p.n - 1, p.alpha + 1.0, p.beta_idx + 1.0}, z);
}

JacobiIdentityResiduals jacobi_identity_residuals(int n, double alpha, double beta_idx, double z) {
    if (n < 1) throw std::domain_error("jacobi_identity_residuals: n must be >= 1");
    if (z == 1.0 || z == -1.0)
        throw std::domain_error("jacobi_identity_residuals: z = +-1 hits a 1/(1-+z) factor");
    const double a = alpha, b = beta_idx;
    auto P = [&](int deg, double aa, double bb) { return jacobi_eval({deg, aa, bb}, z); };

    JacobiIdentityResiduals r{};
    // P_n^{(a,b)} = (a+b+n+1)/(a+n+1) P_n^{(a+1,b)} - (b+n)/(a+n+1) P_n^{(a+1,b-1)}
    r.contiguous_alpha = std::abs(P(n, a, b) - ((a + b + n + 1.0) / (a + n + 1.0) * P(n, a + 1.0, b) -
                                                (b + n) / (a + n + 1.0) * P(n, a + 1.0, b - 1.0)));
    // P_n^{(a+1,b)} = 2/((2n+a+b+2)(1-z)) [ (n+a+1) P_n^{(a,b)} - (n+1) P_{n+1}^{(a,b)} ]
    r.weighted_alpha = std::abs(P(n, a + 1.0, b) -
                                2.0 / ((2.0 * n + a + b + 2.0) * (1.0 - z)) *
                                    ((n + a + 1.0) * P(n, a, b) - (n + 1.0) * P(n + 1, a, b)));
    // P_n^{(a,b+1)} = 2/((2n+a+b+2)(1+z)) [ (n+b+1) P_n^{(a,b)} + (n+1) P_{n+1}^{(a,b)} ]
    r.weighted_beta = std::abs(P(n, a, b + 1.0) -
                               2.0 / ((2.0 * n + a + b + 2.0) * (1.0 + z)) *
                                   ((n + b + 1.0) * P(n, a, b) + (n + 1.0) * P(n + 1, a, b)));
    // P_{n-1}^{(a,b)} = P_n^{(a,b-1)} - P_n^{(a-1,b)}
    r.index_shift = std::abs(P(n - 1, a, b) - (P(n, a, b - 1.0) - P(n, a - 1.0, b)));
    return r;
}

double gauss_2f1(double a, double b, double c, double z) {
    if (std::abs(z) >= 1.0) throw std::domain_error("gauss_2f1: series requires |z| < 1");
    if (is_nonpositive_integer(c)) throw std::domain_error("gauss_2f1: c is a nonpositive integer");
    if (z == 0.0) return 1.0;
    double term = 1.0, sum = 1.0;
    // near |z| = 1 the tail shrinks only like |z|^k against polynomial growth,
    // so the cutoff can arrive very late
    for (int k = 0; k < 2000000; ++k) {
        const double ratio = (a + k) * (b + k) / ((c + k) * (k + 1.0)) * z;
        term *= ratio;
        sum += term;
        if (term == 0.0) break;  // terminating series
        const double ar = std::abs(ratio);
        if (ar < 1.0 && std::abs(term) / (1.0 - ar) <= 1e-14 * std::abs(sum)) return sum;
    }
    return sum;
}

QuadratureRule gauss_legendre(int npoints) {
    if (npoints < 1) throw std::invalid_argument("gauss_legendre: npoints must be >= 1");
    QuadratureRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    const int m = (npoints + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double z = std::cos(kPi * (i + 0.75) / (npoints + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < npoints; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = npoints * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.nodes[i] = -z;
        rule.nodes[npoints - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[npoints - 1 - i] = rule.weights[i];
    }
    return rule;
}

QuadratureRule gauss_jacobi(int npoints, double alpha, double beta_idx) {
    if (npoints < 1) throw std::invalid_argument("gauss_jacobi: npoints must be >= 1");
    if (alpha <= -1.0 || beta_idx <= -1.0)
        throw std::domain_error("gauss_jacobi: weight exponents must exceed -1");
    const double a = alpha, b = beta_idx;
    // Jacobi matrix of the monic recurrence (Golub-Welsch).
    std::vector<double> diag(npoints), off(npoints > 1 ? npoints - 1 : 0);
    diag[0] = (b - a) / (a + b + 2.0);
    for (int k = 1; k < npoints; ++k) {
        const double s = 2.0 * k + a + b;
        diag[k] = (b * b - a * a) / (s * (s + 2.0));
        const double bk2 =
            (k == 1) ? 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + a + b) * (2.0 + a + b) * (3.0 + a + b))
                     : 4.0 * k * (k + a) * (k + b) * (k + a + b) /
                           (s * s * (s + 1.0) * (s - 1.0));
        off[k - 1] = std::sqrt(bk2);
    }
    const double mu0 =
        std::exp((a + b + 1.0) * std::log(2.0) + ln_gamma(a + 1.0) + ln_gamma(b + 1.0) -
                 ln_gamma(a + b + 2.0));
    QuadratureRule rule;
    rule.nodes.resize(npoints);
    rule.weights.resize(npoints);
    for (int k = 0; k < npoints; ++k) {
        const double lam = detail::bisect_eigenvalue(diag, off, k);
        rule.nodes[k] = lam;
        if (npoints == 1) {
            rule.weights[k] = mu0;
        } else {
            const std::vector<double> v = detail::inverse_iteration(diag, off, lam);
            rule.weights[k] = mu0 * v[0] * v[0];
        }
    }
    return rule;
}

double integrate(const std::function<double(double)>& f, double lo, double hi, int npoints) {
    if (npoints < 1) throw std::invalid_argument("integrate: npoints must be >= 1");
    if (!(lo < hi)) throw std::invalid_argument("integrate: requires lo < hi");
    const QuadratureRule rule = gauss_legendre(npoints);
    const double mid = 0.5 * (hi + lo), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * s;
}

double weighted_unit_integral(double p, double s, const std::function<double(double)>& g) {
    if (p <= -1.0 || s <= -1.0)
        throw std::domain_error("weighted_unit_integral: exponents must exceed -1");
    // y = (1+x)/2 maps the weight y^p (1-y)^s onto 2^{-(p+s+1)} (1-x)^s (1+x)^p.
    const double scale = std::exp2(-(p + s + 1.0));
    auto estimate = [&](int n) {
        const QuadratureRule rule = gauss_jacobi(n, s, p);
        double acc = 0.0, comp = 0.0;
        for (int i = 0; i < n; ++i) {
            const double y = 0.5 * (1.0 + rule.nodes[i]);
            const double term = rule.weights[i] * g(y) - comp;
            const double t = acc + term;
            comp = (t - acc) - term;
            acc = t;
        }
        return scale * acc;
    };
    int n = 24;
    double prev = estimate(n);
    while (n < 1024) {
        n *= 2;
        const double cur = estimate(n);
        if (std::abs(cur - prev) <= 1e-14 * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    return prev;
}

}  // namespace ttmol::specfun
