#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "ttmol/ladder.hpp"
#include "ttmol/wavefunc.hpp"

using namespace ttmol;
namespace ld = ttmol::ladder;

namespace {

double sup_diff_on_grid(const ld::FamilyFunction& f, const ld::FamilyFunction& g) {
    double m = 0.0;
    for (int i = 1; i <= 2001; ++i) {
        const double x = f.q * i / 2002.0;
        m = std::max(m, std::abs(ld::eval(f, x) - ld::eval(g, x)));
    }
    return m;
}

double sup_on_grid(const ld::FamilyFunction& f) {
    double m = 0.0;
    for (int i = 1; i <= 2001; ++i) {
        const double x = f.q * i / 2002.0;
        m = std::max(m, std::abs(ld::eval(f, x)));
    }
    return m;
}

ld::FamilyFunction scaled(ld::FamilyFunction f, double c) {
    for (double& v : f.coeffs) v *= c;
    return f;
}

}  // namespace

TEST_CASE("kappa coefficients") {
    const ld::LadderCoeffs k0 = ld::kappa_coeffs(0, 0.8, 2.5);
    CHECK(k0.kappa2 == 0.0);
    CHECK(k0.kappa3 == 0.0);
    CHECK(k0.kappa1 == doctest::Approx(2.0 * 0.8 * 2.5 / (2.0 * 0.8 + 2.5)).epsilon(1e-15));
    const ld::LadderCoeffs k3 = ld::kappa_coeffs(3, 0.5, 3.0);
    CHECK(k3.kappa2 + k3.kappa3 == doctest::Approx(3.0).epsilon(1e-13));
    const ld::LadderCoeffs k1 = ld::kappa_coeffs(1, 1.0, 1.0);
    CHECK(k1.kappa4 == doctest::Approx(20.0 / 7.0).epsilon(1e-15));
    // kappa2 + kappa3 = n across parameters
    for (int n = 0; n <= 12; ++n) {
        const ld::LadderCoeffs k = ld::kappa_coeffs(n, 2.3, 0.4);
        CHECK(std::abs(k.kappa2 + k.kappa3 - n) <= 1e-13 * (1.0 + n));
    }
    CHECK_THROWS_AS(ld::kappa_coeffs(0, 0.25, -0.5), std::domain_error);
}

TEST_CASE("step-down annihilates the bottom state") {
    const std::tuple<double, double, double> families[] = {
        {0.5, 3.0, 1.0}, {1.0, 1.0, 0.5}, {2.3, 0.4, 0.8}};
    for (auto [a1, A, q] : families) {
        CHECK(ld::annihilation_residual(a1, A, q) <= 1e-12);
        const ld::LadderAction act = ld::apply_lower(ld::make_family_state(0, a1, A, q));
        CHECK(act.coeff == 0.0);
    }
}

TEST_CASE("ladder proportionality") {
    const double a1 = 0.5, A = 3.0, q = 1.0;
    for (int n = 1; n <= 8; ++n) {
        CHECK(ld::lower_residual(n, a1, A, q) <= 1e-10);
        CHECK(ld::raise_residual(n, a1, A, q) <= 1e-10);
    }
    CHECK(ld::raise_residual(0, a1, A, q) <= 1e-12);
    // the predicted coefficient is the published one
    const ld::LadderAction low = ld::apply_lower(ld::make_family_state(1, a1, A, q));
    const double expected = (1.0 + A) * wavefunc::normalize_unit_interval(1, a1, A, q) /
                            wavefunc::normalize_unit_interval(0, a1, A, q);
    CHECK(low.coeff == doctest::Approx(expected).epsilon(1e-13));
    const ld::LadderAction up = ld::apply_raise(ld::make_family_state(0, a1, A, q));
    CHECK(up.coeff == doctest::Approx(wavefunc::normalize_unit_interval(0, a1, A, q) /
                                      wavefunc::normalize_unit_interval(1, a1, A, q)).epsilon(1e-13));
}

TEST_CASE("results only depend on normalization ratios") {
    const double a1 = 0.7, A = 2.0, q = 1.0, factor = 3.7;
    const int n = 2;
    auto residual_with = [&](double f) {
        const ld::FamilyState s =
            ld::make_family_state(n, a1, A, q, f * wavefunc::normalize_unit_interval(n, a1, A, q));
        const ld::LadderAction act = ld::apply_lower(s);
        const ld::FamilyState down = ld::make_family_state(
            n - 1, a1, A, q, f * wavefunc::normalize_unit_interval(n - 1, a1, A, q));
        return sup_diff_on_grid(act.result, scaled(ld::to_function(down), act.coeff)) /
               sup_on_grid(ld::to_function(s));
    };
    CHECK(residual_with(1.0) <= 1e-12);
    CHECK(residual_with(factor) <= 1e-12);
}

TEST_CASE("composed ladder products telescope") {
    const double a1 = 0.5, A = 3.0, q = 1.0;
    for (int n = 1; n <= 6; ++n) {
        const ld::FamilyFunction f = ld::to_function(ld::make_family_state(n, a1, A, q));
        // step up then down: (n+1)(n+1+A)
        const ld::FamilyFunction ud = ld::apply_lowering_at(n + 1, ld::apply_raising_at(n, f));
        CHECK(sup_diff_on_grid(ud, scaled(f, (n + 1.0) * (n + 1.0 + A))) / sup_on_grid(f) <=
              1e-10 * (n + 1.0) * (n + 1.0 + A));
        // step down then up: n(n+A)
        const ld::FamilyFunction du = ld::apply_raising_at(n - 1, ld::apply_lowering_at(n, f));
        CHECK(sup_diff_on_grid(du, scaled(f, n * (n + A))) / sup_on_grid(f) <=
              1e-10 * n * (n + A));
    }
}

TEST_CASE("weight operator eigenvalue") {
    CHECK(ld::weight_eigenvalue(0, 1.0) == 1.0);
    CHECK(ld::weight_eigenvalue(3, 2.0) == 4.5);
    CHECK(ld::weight_eigenvalue(0, 0.0) == 0.5);
}

TEST_CASE("commutators close the algebra in function space") {
    const std::tuple<int, double, double, double> cases[] = {
        {2, 0.5, 3.0, 1.0}, {1, 1.0, 1.0, 0.5}, {5, 1.7, 0.3, 0.9}};
    for (auto [n, a1, A, q] : cases) {
        const ld::CommutatorResiduals r = ld::commutator_check(n, a1, A, q);
        CHECK(r.lower_raise <= 1e-10);
        CHECK(r.weight_raise <= 1e-10);
        CHECK(r.lower_weight <= 1e-10);
    }
    CHECK_THROWS_AS(ld::commutator_check(0, 0.5, 3.0, 1.0), std::domain_error);
}

TEST_CASE("eigenvalue identity of the commutator") {
    for (int n = 0; n <= 8; ++n)
        for (double A : {0.0, 1.0, 3.0}) {
            const double lhs = (n + 1.0) * (n + 1.0 + A) - n * (n + A);
            CHECK(lhs == 2.0 * n + 1.0 + A);  // exact in floating point for these A
        }
}

TEST_CASE("Casimir eigenvalue") {
    CHECK(ld::casimir_eigenvalue(4, 3.0) == doctest::Approx(2.0).epsilon(1e-15));  // c = 2
    CHECK(ld::casimir_eigenvalue(7, 1.0) == doctest::Approx(0.0).epsilon(1e-15));  // c = 1
    const double A = 2.7, c = 0.5 * (1.0 + A);
    for (int n = 0; n <= 50; ++n) {
        const ld::CasimirPair pair = ld::casimir_orderings(n, A);
        CHECK(std::abs(pair.raise_then_lower - c * (c - 1.0)) <= 1e-12 * (1.0 + n));
        CHECK(std::abs(pair.lower_then_raise - c * (c - 1.0)) <= 1e-12 * (1.0 + n));
        CHECK(std::abs(pair.raise_then_lower - pair.lower_then_raise) <= 1e-12 * (1.0 + n));
    }
}
