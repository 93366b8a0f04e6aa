#pragma once

// Symmetric tridiagonal eigensolver: bisection on Sturm sequence counts for
// eigenvalues, inverse iteration for eigenvectors. Internal building block
// shared by the Gauss-Jacobi rule construction and the radial solver.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace ttmol::detail {

// Number of eigenvalues of T strictly below lambda (negative pivots of the
// LDL^T factorization of T - lambda I).
inline int sturm_count(const std::vector<double>& diag, const std::vector<double>& off,
                       double lambda) {
    const std::size_t n = diag.size();
    const double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    int count = 0;
    double q = diag[0] - lambda;
    if (q < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(q) < tiny) q = (q < 0.0 ? -tiny : tiny);
        q = diag[i] - lambda - off[i - 1] * off[i - 1] / q;
        if (q < 0.0) ++count;
    }
    return count;
}

// k-th smallest eigenvalue (k = 0-based) by bisection.
inline double bisect_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off,
                                int k) {
    const std::size_t n = diag.size();
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < n; ++i) {
        const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i + 1 < n ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    const double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
    for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon() * scale;
         ++it) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(diag, off, mid) > k)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Solve (T - lambda I) x = b in place by the Thomas algorithm. Pivots are
// floored at eps * matrix scale so a near-singular shift cannot overflow the
// back substitution.
inline void shifted_solve(const std::vector<double>& diag, const std::vector<double>& off,
                          double lambda, double pivot_floor, std::vector<double>& x) {
    const std::size_t n = diag.size();
    std::vector<double> c(n), d(n);
    double piv = diag[0] - lambda;
    if (std::abs(piv) < pivot_floor) piv = (piv < 0 ? -pivot_floor : pivot_floor);
    c[0] = (n > 1 ? off[0] / piv : 0.0);
    d[0] = x[0] / piv;
    for (std::size_t i = 1; i < n; ++i) {
        piv = diag[i] - lambda - off[i - 1] * c[i - 1];
        if (std::abs(piv) < pivot_floor) piv = (piv < 0 ? -pivot_floor : pivot_floor);
        c[i] = (i + 1 < n ? off[i] / piv : 0.0);
        d[i] = (x[i] - off[i - 1] * d[i - 1]) / piv;
    }
    x[n - 1] = d[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = d[i] - c[i] * x[i + 1];
}

// Rayleigh quotient v^T T v for a unit vector; tightens a bisected eigenvalue
// to rounding level once v is the inverse-iteration eigenvector.
inline double rayleigh_quotient(const std::vector<double>& diag, const std::vector<double>& off,
                                const std::vector<double>& v) {
    const std::size_t n = diag.size();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double t = diag[i] * v[i];
        if (i > 0) t += off[i - 1] * v[i - 1];
        if (i + 1 < n) t += off[i] * v[i + 1];
        s += v[i] * t;
    }
    return s;
}

// Eigenvector for a simple eigenvalue by inverse iteration; unit 2-norm.
inline std::vector<double> inverse_iteration(const std::vector<double>& diag,
                                             const std::vector<double>& off, double lambda) {
    const std::size_t n = diag.size();
    double scale = std::abs(lambda);
    for (double d : diag) scale = std::max(scale, std::abs(d));
    for (double e : off) scale = std::max(scale, std::abs(e));
    const double floor = std::max(scale, 1.0) * std::numeric_limits<double>::epsilon();
    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (std::size_t i = 0; i < n; ++i) v[i] *= (i % 2 == 0 ? 1.0 : 0.9998);  // break symmetry
    for (int it = 0; it < 4; ++it) {
        shifted_solve(diag, off, lambda, floor, v);
        double mx = 0.0;
        for (double x : v) mx = std::max(mx, std::abs(x));
        if (!(mx > 0.0) || !std::isfinite(mx)) throw std::runtime_error("inverse iteration failed");
        for (double& x : v) x /= mx;
        double nrm = 0.0;
        for (double x : v) nrm += x * x;
        nrm = std::sqrt(nrm);
        for (double& x : v) x /= nrm;
    }
    return v;
}

}  // namespace ttmol::detail
