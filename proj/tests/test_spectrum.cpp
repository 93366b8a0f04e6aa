#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ttmol/spectrum.hpp"

using namespace ttmol;
namespace sm = ttmol::spectrum;

namespace {

// signed quantization function for bisection: sqrt(-eps) + Lambda/2 - sqrt(w - eps)
double quant_signed(const ScaledParams& sp, int n, double eps) {
    const double Lambda = 2.0 * n + 1.0 + sm::index_A(sp);
    return std::sqrt(-eps) + 0.5 * Lambda - std::sqrt(sm::well_strength(sp) - eps);
}

// random potential with at least one bound level
ScaledParams random_valid(std::mt19937& rng) {
    std::uniform_real_distribution<> v0d(0.5, 50.0), v1d(-0.2, 5.0), qd(0.1, 1.0);
    for (;;) {
        const double q = qd(rng), v1 = v1d(rng), v0 = v0d(rng);
        if (1.0 + 4.0 * v1 / (q * q) < 0.0) continue;
        const ScaledParams sp(v0, v1, q);
        if (sm::num_bound_states(sp) >= 1) return sp;
    }
}

}  // namespace

TEST_CASE("index_A") {
    CHECK(sm::index_A(ScaledParams(3, 0, 0.7)) == 1.0);
    CHECK(sm::index_A(ScaledParams(4, 2, 1)) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("reference level: v0=4, v1=2, q=1") {
    const ScaledParams sp(4, 2, 1);
    CHECK(sm::num_bound_states(sp) == 1);
    const sm::BoundState s = sm::energy_level(sp, 0);
    CHECK(s.A == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(s.Lambda == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(sm::well_strength(sp) == doctest::Approx(6.0).epsilon(1e-15));
    CHECK(s.a1 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s.eps == doctest::Approx(-0.25).epsilon(1e-15));
    CHECK_THROWS_AS(sm::energy_level(sp, 1), std::out_of_range);
    CHECK_THROWS_AS(sm::energy_level(sp, -1), std::out_of_range);
}

TEST_CASE("physical-units level") {
    // 2 mu/(beta^2 hbar^2) = 2 here, so E = eps/2
    const PotentialParams p(4, 2, 1, 1, 1, 1);
    const sm::BoundState s = sm::energy_level(p, 0);  // v0=8, v1=4
    CHECK(s.eps < 0.0);
    CHECK(s.E == doctest::Approx(s.eps / 2.0).epsilon(1e-15));
}

TEST_CASE("screened-Coulomb reduction") {
    for (double v0 : {4.0, 9.0, 25.0, 100.0}) {
        const ScaledParams sp(v0, 0, 1);
        const int count = sm::num_bound_states(sp);
        for (int n = 0; n < count; ++n) {
            const double np1 = n + 1.0;
            const double expected = -std::pow((np1 * np1 - v0) / (2.0 * np1), 2);
            CHECK(sm::energy_level(sp, n).eps == doctest::Approx(expected).epsilon(1e-13));
        }
    }
}

TEST_CASE("num_bound_states") {
    CHECK(sm::num_bound_states(ScaledParams(0, 0, 0.5)) == 0);
    CHECK(sm::num_bound_states(ScaledParams(4, 2, 1)) == 1);
    CHECK(sm::num_bound_states(ScaledParams(100, 0, 1)) == 9);
    // monotone nondecreasing in v0
    int prev = 0;
    for (double v0 = 0.0; v0 <= 60.0; v0 += 1.7) {
        const int c = sm::num_bound_states(ScaledParams(v0, 1.0, 0.8));
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("nu_intermediates at the reference level") {
    const ScaledParams sp(4, 2, 1);
    const sm::NuIntermediates nu = sm::nu_intermediates(sp, 0, -0.25);
    CHECK(std::abs(nu.lambda_ - nu.lambda_n) <= 1e-10);
    CHECK(nu.tau_c1 == doctest::Approx(-6.0).epsilon(1e-14));  // -(2 + 2*0.5 + 3)
    CHECK(nu.k_plus - nu.k_minus == doctest::Approx(3.0).epsilon(1e-13));  // 2 a1 A
    CHECK(nu.pi_c0 == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(nu.pi_c1 == doctest::Approx(-2.5).epsilon(1e-14));  // -(a1 + (1+A)/2)
    // a1^2 + a2^2 + a3^2 = v1/q^2
    CHECK(0.25 + nu.a2_sq + nu.a3_sq == doctest::Approx(2.0).epsilon(1e-13));
    CHECK_THROWS_AS(sm::nu_intermediates(sp, 0, 0.1), std::domain_error);
}

TEST_CASE("quantization residual behaviour") {
    const ScaledParams sp(4, 2, 1);
    CHECK(sm::quantization_residual(sp, 0, -0.25) <= 1e-10);
    CHECK(sm::quantization_residual(sp, 0, -0.25 * (1.0 + 1e-3)) > 1e-5);
    // screened-Coulomb root coincides with the closed form
    const ScaledParams hul(9, 0, 1);
    for (int n = 0; n < sm::num_bound_states(hul); ++n) {
        const double np1 = n + 1.0;
        const double root = -std::pow((np1 * np1 - 9.0) / (2.0 * np1), 2);
        CHECK(sm::quantization_residual(hul, n, root) <= 1e-12);
    }
}

TEST_CASE("levels are the unique quantization roots (bisection oracle)") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        const ScaledParams sp = random_valid(rng);
        const int count = sm::num_bound_states(sp);
        const double w = sm::well_strength(sp);
        double prev_eps = -std::numeric_limits<double>::infinity();
        for (int n = 0; n < count; ++n) {
            const sm::BoundState s = sm::energy_level(sp, n);
            // strictly increasing level ordering
            CHECK(s.eps > prev_eps);
            prev_eps = s.eps;
            // lambda = lambda_n at the closed-form level
            const sm::NuIntermediates nu = sm::nu_intermediates(sp, n, s.eps);
            CHECK(std::abs(nu.lambda_ - nu.lambda_n) <= 1e-10 * (1.0 + std::abs(nu.lambda_)));
            CHECK(nu.tau_c1 < 0.0);
            // bisection on the signed quantization function: f > 0 far down, f < 0 near zero
            double lo = -std::pow(w / s.Lambda, 2) - 1.0, hi = -1e-300;
            REQUIRE(quant_signed(sp, n, lo) > 0.0);
            REQUIRE(quant_signed(sp, n, hi) < 0.0);
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                (quant_signed(sp, n, mid) > 0.0 ? lo : hi) = mid;
            }
            CHECK(0.5 * (lo + hi) == doctest::Approx(s.eps).epsilon(1e-10));
        }
    }
}
