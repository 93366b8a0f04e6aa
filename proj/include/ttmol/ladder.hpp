#pragma once

#include <vector>

namespace ttmol::ladder {

/// The five rational coefficients entering the ladder brackets at index n on
/// the fixed-(a1, A) family. kappa2 + kappa3 = n identically.
struct LadderCoeffs {
    int n;
    double a1;
    double A;
    double kappa1;
    double kappa2;
    double kappa3;
    double kappa4;
    double kappa5;
};

/// A function of the form poly(x) * x^{a1} (1-x)^{(1+A)/2} with the polynomial
/// held in the endpoint basis phi_k = x^{deg-k} (1-x)^k, k = 0..deg (well
/// conditioned on [0,1], unlike monomials).
struct FamilyFunction {
    double a1;
    double A;
    double q;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// The n-th member of the fixed-(a1, A) family,
///   f_n(x) = norm_const * x^{a1} (1-x)^{(1+A)/2} P_n^{(2a1,A)}(1-2x),
/// with the unit-interval normalization constant by default.
struct FamilyState {
    int n;
    double a1;
    double A;
    double q;
    double norm_const;
    std::vector<double> coeffs;  // endpoint-basis coefficients of the Jacobi factor
};

/// Result of one ladder application: the exact polynomial-algebra image of
/// the state, plus the predicted proportionality coefficient onto the
/// neighbouring family member ((n+A) A_n/A_{n-1} down, (n+1) A_n/A_{n+1} up).
struct LadderAction {
    FamilyFunction result;
    double coeff;
};

LadderCoeffs kappa_coeffs(int n, double a1, double A);

/// Family member with the unit-interval normalization constant; pass
/// norm_override > 0 to use a different normalization convention.
FamilyState make_family_state(int n, double a1, double A, double q, double norm_override = 0.0);

/// The function a state represents.
FamilyFunction to_function(const FamilyState& s);

/// Evaluate a family function at x in (0, q].
double eval(const FamilyFunction& f, double x);

/// Step-down operator: for n >= 1 the image equals coeff * f_{n-1}; for n = 0
/// the bracket annihilates the state identically (coeff = 0).
LadderAction apply_lower(const FamilyState& s);

/// Step-up operator: the image equals coeff * f_{n+1}.
LadderAction apply_raise(const FamilyState& s);

/// The step-down/-up brackets at family index m applied to an arbitrary
/// family function (used to compose operators).
FamilyFunction apply_lowering_at(int m, const FamilyFunction& f);
FamilyFunction apply_raising_at(int m, const FamilyFunction& f);

/// Weight-operator eigenvalue n + (1+A)/2.
double weight_eigenvalue(int n, double A);

/// sup-norm residuals (relative to sup|f_n|) of the three su(1,1) commutation
/// relations evaluated by composed polynomial application; n >= 1.
struct CommutatorResiduals {
    double lower_raise;   // [Pi_-, Pi_+] = 2 Pi_0
    double weight_raise;  // [Pi_0, Pi_+] = Pi_+
    double lower_weight;  // [Pi_-, Pi_0] = Pi_-
};
CommutatorResiduals commutator_check(int n, double a1, double A, double q);

/// Casimir eigenvalue c(c-1), c = (1+A)/2 (independent of n).
double casimir_eigenvalue(int n, double A);

/// Both operator orderings of the Casimir combination, evaluated through the
/// ladder products (n+1)(n+1+A) and n(n+A); the two must agree.
struct CasimirPair {
    double raise_then_lower;  // -Pi_-Pi_+ + Pi_0(Pi_0+1)
    double lower_then_raise;  // -Pi_+Pi_- + Pi_0(Pi_0-1)
};
CasimirPair casimir_orderings(int n, double A);

/// Relative sup-norm residuals against the predicted images.
double annihilation_residual(double a1, double A, double q);        // ||Pi_- f_0|| / ||f_0||
double lower_residual(int n, double a1, double A, double q);        // n >= 1
double raise_residual(int n, double a1, double A, double q);        // n >= 0

}  // namespace ttmol::ladder
