#pragma once

#include <functional>
#include <vector>

namespace ttmol::specfun {

/// Jacobi polynomial P_n^{(alpha,beta)} as a value type; degree n >= 0,
/// indices alpha, beta > -1 for the classical (orthogonal) range.
struct JacobiPoly {
    int n = 0;
    double alpha = 0.0;
    double beta_idx = 0.0;
};

/// Gauss quadrature rule: abscissae in (-1,1) with positive weights.
/// For a Legendre rule the weights sum to 2 and the rule integrates
/// polynomials up to degree 2*npoints-1 exactly.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    int size() const { return static_cast<int>(nodes.size()); }
};

/// log Gamma(x) for x > 0; throws std::domain_error otherwise.
double ln_gamma(double x);

/// Generalized binomial coefficient C(a, k) = Gamma(a+1)/(Gamma(k+1)Gamma(a-k+1)),
/// computed as the falling-factorial product so Gamma poles cancel.
double gen_binomial(double a, int k);

/// P_n^{(alpha,beta)}(z) by the three-term recurrence (production path).
double jacobi_eval(const JacobiPoly& p, double z);

/// P_n^{(alpha,beta)}(z) by the explicit binomial sum
///   2^{-n} sum_k C(n+alpha,k) C(n+beta,n-k) (z-1)^{n-k} (1+z)^k.
/// Independent of the recurrence; used as a cross-check oracle.
double jacobi_eval_sum(const JacobiPoly& p, double z);

/// d/dz P_n^{(alpha,beta)}(z) = (n+alpha+beta+1)/2 * P_{n-1}^{(alpha+1,beta+1)}(z),
/// zero for n = 0.
double jacobi_derivative(const JacobiPoly& p, double z);

/// Residuals |LHS - RHS| of four Jacobi relations evaluated through jacobi_eval:
/// the alpha-contiguous relation, the two weighted (1 -/+ z) recursions and the
/// degree-lowering index-shift relation. Requires n >= 1; z = +1 (resp. -1) is a
/// domain error for the relations carrying 1/(1-z) (resp. 1/(1+z)).
struct JacobiIdentityResiduals {
    double contiguous_alpha;  // P^{(a,b)} vs P^{(a+1,b)}, P^{(a+1,b-1)}
    double weighted_alpha;    // (1-z)-weighted recursion
    double weighted_beta;     // (1+z)-weighted recursion
    double index_shift;       // P_{n-1}^{(a,b)} = P_n^{(a,b-1)} - P_n^{(a-1,b)}
};
JacobiIdentityResiduals jacobi_identity_residuals(int n, double alpha, double beta_idx, double z);

/// Gauss hypergeometric series 2F1(a,b;c;z) for |z| < 1, c not a nonpositive
/// integer. Series with geometric tail bound <= 1e-14 relative.
double gauss_2f1(double a, double b, double c, double z);

/// Gauss-Legendre rule with npoints abscissae (Newton on the Legendre recurrence).
QuadratureRule gauss_legendre(int npoints);

/// Gauss-Jacobi rule for the weight (1-x)^alpha (1+x)^beta on (-1,1),
/// alpha, beta > -1, computed by Golub-Welsch on the Jacobi matrix.
/// Weights sum to 2^{alpha+beta+1} B(alpha+1, beta+1).
QuadratureRule gauss_jacobi(int npoints, double alpha, double beta_idx);

/// Gauss-Legendre estimate of the integral of f over [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi, int npoints);

/// Integral of t^p (1-t)^s g(t) over (0,1) with p, s > -1 and g smooth:
/// the endpoint weights are absorbed into a Gauss-Jacobi rule and the node
/// count doubled until the estimate is stable to ~1e-14 relative.
double weighted_unit_integral(double p, double s, const std::function<double(double)>& g);

}  // namespace ttmol::specfun
