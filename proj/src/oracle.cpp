#include "ttmol/oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "tridiag.hpp"

namespace ttmol::oracle {

double scaled_potential(const ScaledParams& sp, double rho) {
    const double t = std::exp(-rho);
    const double d = 1.0 - sp.q * t;
    return -sp.v0 * t / d + sp.v1 * t * t / (d * d);
}

OracleSpectrum solve_radial(const ScaledParams& sp, const RadialGrid& grid, int count) {
    if (!(grid.r_min >= 0.0 && grid.r_min < grid.r_max))
        throw std::invalid_argument("solve_radial: need 0 <= r_min < r_max");
    if (grid.npoints < 3) throw std::invalid_argument("solve_radial: npoints must be >= 3");
    if (count < 1 || count > grid.npoints)
        throw std::invalid_argument("solve_radial: count out of range");
    const int n = grid.npoints;
    const double h = grid.spacing();
    std::vector<double> diag(n), off(n - 1, -1.0 / (h * h));
    for (int i = 0; i < n; ++i) {
        const double v = scaled_potential(sp, grid.r_min + (i + 1) * h);
        if (!std::isfinite(v)) throw std::domain_error("solve_radial: potential singular on grid");
        diag[i] = 2.0 / (h * h) + v;
    }

    OracleSpectrum out;
    out.grid = grid;
    out.eigenvalues.reserve(count);
    out.eigenvectors.reserve(count);
    for (int k = 0; k < count; ++k) {
        double lam = detail::bisect_eigenvalue(diag, off, k);
        std::vector<double> u = detail::inverse_iteration(diag, off, lam);
        lam = detail::rayleigh_quotient(diag, off, u);  // polish past the bisection floor
        // normalize with the grid weight h and fix the first-lobe sign
        double nrm = 0.0, umax = 0.0;
        for (double x : u) {
            nrm += x * x;
            umax = std::max(umax, std::abs(x));
        }
        nrm = std::sqrt(h * nrm);
        double lead = 0.0;
        for (double x : u)
            if (std::abs(x) > 1e-8 * umax) {
                lead = x;
                break;
            }
        const double sgn = (lead < 0.0) ? -1.0 : 1.0;
        for (double& x : u) x *= sgn / nrm;
        out.eigenvalues.push_back(lam);
        out.eigenvectors.push_back(std::move(u));
    }
    return out;
}

std::vector<double> richardson(const ScaledParams& sp, const RadialGrid& grid, int count) {
    const OracleSpectrum coarse = solve_radial(sp, grid, count);
    RadialGrid fine = grid;
    fine.npoints = 2 * grid.npoints + 1;  // halves h with the same endpoints
    const OracleSpectrum fined = solve_radial(sp, fine, count);
    std::vector<double> out(count);
    for (int k = 0; k < count; ++k)
        out[k] = (4.0 * fined.eigenvalues[k] - coarse.eigenvalues[k]) / 3.0;
    return out;
}

double overlap_with_analytic(const OracleSpectrum& spec, int level, const wavefunc::WaveState& ws,
                             double beta) {
    if (level < 0 || level >= static_cast<int>(spec.eigenvectors.size()))
        throw std::invalid_argument("overlap_with_analytic: level out of range");
    const RadialGrid& g = spec.grid;
    const double h = g.spacing();
    const std::vector<double>& u = spec.eigenvectors[static_cast<std::size_t>(level)];
    double s = 0.0;
    for (int i = 0; i < g.npoints; ++i) {
        const double rho = g.r_min + (i + 1) * h;
        s += u[i] * wavefunc::eval_r(ws, beta, rho / beta);
    }
    return std::abs(s * h / std::sqrt(beta));
}

RadialGrid level_grid(const ScaledParams& sp, double a1, int npoints) {
    if (!(a1 > 0.0)) throw std::domain_error("level_grid: a1 must be positive");
    const double turn = std::log(1.0 + (std::abs(sp.v0) + std::abs(sp.v1)) / (a1 * a1));
    RadialGrid g;
    g.r_min = 0.0;
    g.r_max = turn + 25.0 / a1;
    g.npoints = npoints;
    return g;
}

}  // namespace ttmol::oracle
