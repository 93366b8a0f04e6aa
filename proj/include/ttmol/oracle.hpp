#pragma once

#include <vector>

#include "ttmol/potential.hpp"
#include "ttmol/wavefunc.hpp"

namespace ttmol::oracle {

/// Uniform Dirichlet grid in units of 1/beta (coordinates are beta*r):
/// interior points r_i = r_min + i h, i = 1..npoints, h = (r_max-r_min)/(npoints+1).
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 40.0;
    int npoints = 4000;

    double spacing() const { return (r_max - r_min) / (npoints + 1); }
};

/// Lowest eigenpairs of the discretized radial operator -d^2/drho^2 + v(rho).
/// Eigenvalues are dimensionless (same scale as ScaledParams energies),
/// ascending; eigenvectors are grid-sampled, sum h u_i^2 = 1, first lobe
/// positive.
struct OracleSpectrum {
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    RadialGrid grid;
};

/// Dimensionless potential on the grid coordinate rho = beta*r.
double scaled_potential(const ScaledParams& sp, double rho);

/// Three-point finite differences + Sturm bisection for the lowest `count`
/// eigenpairs. Grid error O(h^2).
OracleSpectrum solve_radial(const ScaledParams& sp, const RadialGrid& grid, int count);

/// Eigenvalues extrapolated over the grid pair (h, h/2): (4 e_{h/2} - e_h)/3,
/// error O(h^4).
std::vector<double> richardson(const ScaledParams& sp, const RadialGrid& grid, int count);

/// |sum_i (h/sqrt(beta)) u_i R(r_i)| between oracle level `level` and a
/// Radial-normalized analytic state; 1 for matching states.
double overlap_with_analytic(const OracleSpectrum& spec, int level, const wavefunc::WaveState& ws,
                             double beta);

/// Grid adapted to one level: box = classical turning point + 25/a1 decay
/// lengths. Deep levels get small fine boxes, shallow ones wide boxes.
RadialGrid level_grid(const ScaledParams& sp, double a1, int npoints = 4000);

}  // namespace ttmol::oracle
