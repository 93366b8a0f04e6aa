#include "ttmol/ladder.hpp"

#include <cmath>
#include <stdexcept>

#include "ttmol/specfun.hpp"
#include "ttmol/wavefunc.hpp"

namespace ttmol::ladder {

namespace {

void check_denominators(int n, double a1, double A) {
    if (std::abs(2.0 * n + 2.0 * a1 + A) < 1e-12 || std::abs(2.0 * n + 2.0 * a1 + A + 2.0) < 1e-12 ||
        std::abs(n + 2.0 * a1) < 1e-12 || std::abs(n + 2.0 * a1 + A + 1.0) < 1e-12)
        throw std::domain_error("ladder: degenerate family parameters (vanishing denominator)");
}

// [x(1-x) d/dx + s*x + d] applied to poly(x) * x^{a1}(1-x)^{(1+A)/2}; the
// polynomial part maps to
//   a1 (1-x) p + (s - (1+A)/2) x p + d p + x(1-x) p'
// which stays inside the endpoint basis with the degree raised by one.
std::vector<double> apply_bracket(const std::vector<double>& c, double a1, double A, double s,
                                  double d) {
    const int deg = static_cast<int>(c.size()) - 1;
    std::vector<double> out(deg + 2, 0.0);
    for (int k = 0; k <= deg; ++k) {
        out[k + 1] += a1 * c[k];                    // (1-x) p
        out[k] += (s - 0.5 * (1.0 + A)) * c[k];     // x p
        out[k] += d * c[k];                         // p, embedded: phi_k = x phi_k + (1-x) phi_k
        out[k + 1] += d * c[k];
        out[k + 1] += (deg - k) * c[k];             // x(1-x) p'
        out[k] -= k * c[k];
    }
    return out;
}

std::vector<double> embed(const std::vector<double>& c) {
    std::vector<double> out(c.size() + 1, 0.0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        out[k] += c[k];
        out[k + 1] += c[k];
    }
    return out;
}

struct BracketSpec {
    double s, d, pref;
};

BracketSpec lowering_spec(int m, double a1, double A) {
    check_denominators(m, a1, A);
    const double k3 = m * (m + A) / (2.0 * m + 2.0 * a1 + A);
    return {a1 + 0.5 * (2.0 * m + A + 1.0), -a1 - k3, -(2.0 * m + 2.0 * a1 + A) / (m + 2.0 * a1)};
}

BracketSpec raising_spec(int m, double a1, double A) {
    check_denominators(m, a1, A);
    const double k4 = (m + 2.0 * a1 + A + 1.0) * (m + 2.0 * a1 + 1.0) / (2.0 * m + 2.0 * a1 + A + 2.0);
    return {-(a1 + 0.5 * (2.0 * m + A + 1.0)), -a1 + k4,
            (2.0 * m + 2.0 * a1 + A + 2.0) / (m + 2.0 * a1 + A + 1.0)};
}

FamilyFunction apply_spec(const BracketSpec& bs, const FamilyFunction& f) {
    FamilyFunction out{f.a1, f.A, f.q, apply_bracket(f.coeffs, f.a1, f.A, bs.s, bs.d)};
    for (double& c : out.coeffs) c *= bs.pref;
    return out;
}

double sup_on_grid(const FamilyFunction& f) {
    const int G = 2001;
    double m = 0.0;
    for (int i = 1; i <= G; ++i) {
        const double x = f.q * i / (G + 1.0);
        m = std::max(m, std::abs(eval(f, x)));
    }
    return m;
}

double sup_diff(const FamilyFunction& f, const FamilyFunction& g) {
    const int G = 2001;
    double m = 0.0;
    for (int i = 1; i <= G; ++i) {
        const double x = f.q * i / (G + 1.0);
        m = std::max(m, std::abs(eval(f, x) - eval(g, x)));
    }
    return m;
}

FamilyFunction scaled(FamilyFunction f, double c) {
    for (double& v : f.coeffs) v *= c;
    return f;
}

FamilyFunction minus(const FamilyFunction& a, const FamilyFunction& b) {
    // bring both to a common degree through embedding
    std::vector<double> ca = a.coeffs, cb = b.coeffs;
    while (ca.size() < cb.size()) ca = embed(ca);
    while (cb.size() < ca.size()) cb = embed(cb);
    for (std::size_t i = 0; i < ca.size(); ++i) ca[i] -= cb[i];
    return FamilyFunction{a.a1, a.A, a.q, ca};
}

}  // namespace

LadderCoeffs kappa_coeffs(int n, double a1, double A) {
    check_denominators(n, a1, A);
    const double den = 2.0 * n + 2.0 * a1 + A;
    const double den2 = den + 2.0;
    LadderCoeffs k{};
    k.n = n;
    k.a1 = a1;
    k.A = A;
    k.kappa1 = (n + A) * (n + 2.0 * a1) / den;
    k.kappa2 = n * (n + 2.0 * a1) / den;
    k.kappa3 = n * (n + A) / den;
    k.kappa4 = (n + 2.0 * a1 + A + 1.0) * (n + 2.0 * a1 + 1.0) / den2;
    k.kappa5 = (n + 2.0 * a1 + A + 1.0) * (n + A + 1.0) / den2;
    return k;
}

FamilyState make_family_state(int n, double a1, double A, double q, double norm_override) {
    if (n < 0) throw std::domain_error("make_family_state: n must be nonnegative");
    // P_n^{(2a1,A)}(1-2x) = sum_k (-1)^{n-k} g_k x^{n-k} (1-x)^k
    std::vector<double> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double gk =
            specfun::gen_binomial(n + 2.0 * a1, k) * specfun::gen_binomial(n + A, n - k);
        c[k] = ((n - k) % 2 == 0 ? gk : -gk);
    }
    const double norm =
        norm_override > 0.0 ? norm_override : wavefunc::normalize_unit_interval(n, a1, A, q);
    return FamilyState{n, a1, A, q, norm, c};
}

FamilyFunction to_function(const FamilyState& s) {
    std::vector<double> c = s.coeffs;
    for (double& v : c) v *= s.norm_const;
    return FamilyFunction{s.a1, s.A, s.q, c};
}

double eval(const FamilyFunction& f, double x) {
    if (!(x > 0.0 && x <= f.q)) throw std::domain_error("eval: x must lie in (0, q]");
    const int deg = f.degree();
    double p = 0.0;
    for (int k = 0; k <= deg; ++k)
        p += f.coeffs[k] * std::pow(x, deg - k) * std::pow(1.0 - x, k);
    return p * std::pow(x, f.a1) * std::pow(1.0 - x, 0.5 * (1.0 + f.A));
}

FamilyFunction apply_lowering_at(int m, const FamilyFunction& f) {
    return apply_spec(lowering_spec(m, f.a1, f.A), f);
}

FamilyFunction apply_raising_at(int m, const FamilyFunction& f) {
    return apply_spec(raising_spec(m, f.a1, f.A), f);
}

LadderAction apply_lower(const FamilyState& s) {
    FamilyFunction img = apply_lowering_at(s.n, to_function(s));
    double coeff = 0.0;
    if (s.n >= 1)
        coeff = (s.n + s.A) * wavefunc::normalize_unit_interval(s.n, s.a1, s.A, s.q) /
                wavefunc::normalize_unit_interval(s.n - 1, s.a1, s.A, s.q);
    return LadderAction{std::move(img), coeff};
}

LadderAction apply_raise(const FamilyState& s) {
    FamilyFunction img = apply_raising_at(s.n, to_function(s));
    const double coeff = (s.n + 1.0) * wavefunc::normalize_unit_interval(s.n, s.a1, s.A, s.q) /
                         wavefunc::normalize_unit_interval(s.n + 1, s.a1, s.A, s.q);
    return LadderAction{std::move(img), coeff};
}

double weight_eigenvalue(int n, double A) { return n + 0.5 * (1.0 + A); }

CommutatorResiduals commutator_check(int n, double a1, double A, double q) {
    if (n < 1) throw std::domain_error("commutator_check: n must be >= 1");
    const FamilyFunction f = to_function(make_family_state(n, a1, A, q));
    const double fsup = sup_on_grid(f);
    const double pi0 = weight_eigenvalue(n, A);

    const FamilyFunction up = apply_raising_at(n, f);
    const FamilyFunction down = apply_lowering_at(n, f);
    const FamilyFunction down_up = apply_lowering_at(n + 1, up);
    const FamilyFunction up_down = apply_raising_at(n - 1, down);

    CommutatorResiduals r{};
    r.lower_raise = sup_diff(minus(down_up, up_down), scaled(f, 2.0 * pi0)) / fsup;
    // [Pi_0, Pi_+] f_n = pi0(n+1) Pi_+ f_n - Pi_+ (pi0(n) f_n)
    r.weight_raise = sup_diff(minus(scaled(up, pi0 + 1.0), scaled(up, pi0)), up) / fsup;
    // [Pi_-, Pi_0] f_n = Pi_- (pi0(n) f_n) - pi0(n-1) Pi_- f_n
    r.lower_weight = sup_diff(minus(scaled(down, pi0), scaled(down, pi0 - 1.0)), down) / fsup;
    return r;
}

double casimir_eigenvalue(int n, double A) { return casimir_orderings(n, A).raise_then_lower; }

CasimirPair casimir_orderings(int n, double A) {
    const double pi0 = weight_eigenvalue(n, A);
    // ladder products telescope: Pi_-Pi_+ |n> = (n+1)(n+1+A)|n>, Pi_+Pi_- |n> = n(n+A)|n>
    const double prod_up_down = (n + 1.0) * (n + 1.0 + A);
    const double prod_down_up = n * (n + A);
    return CasimirPair{-prod_up_down + pi0 * (pi0 + 1.0), -prod_down_up + pi0 * (pi0 - 1.0)};
}

double annihilation_residual(double a1, double A, double q) {
    const FamilyState s0 = make_family_state(0, a1, A, q);
    const LadderAction act = apply_lower(s0);
    return sup_on_grid(act.result) / sup_on_grid(to_function(s0));
}

double lower_residual(int n, double a1, double A, double q) {
    if (n < 1) throw std::domain_error("lower_residual: n must be >= 1");
    const FamilyState s = make_family_state(n, a1, A, q);
    const LadderAction act = apply_lower(s);
    const FamilyFunction target = scaled(to_function(make_family_state(n - 1, a1, A, q)), act.coeff);
    return sup_diff(act.result, target) / sup_on_grid(to_function(s));
}

double raise_residual(int n, double a1, double A, double q) {
    const FamilyState s = make_family_state(n, a1, A, q);
    const LadderAction act = apply_raise(s);
    const FamilyFunction target = scaled(to_function(make_family_state(n + 1, a1, A, q)), act.coeff);
    return sup_diff(act.result, target) / sup_on_grid(to_function(s));
}

}  // namespace ttmol::ladder
