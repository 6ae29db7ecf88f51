#include <doctest.h>

#include "sigmaor/curve.hpp"
#include "sigmaor/sampling.hpp"

using namespace sigmaor;

TEST_CASE("fundamental domain coordinates") {
    CurveParams p(Complex(0.0, 1.0));
    auto [s0, t0] = reduce_mod_lattice(0.0, p);
    CHECK(std::abs(s0) < 1e-12);
    CHECK(std::abs(t0) < 1e-12);

    auto [s1, t1] = reduce_mod_lattice(kTwoPiI + kTwoPiI * p.tau(), p);
    CHECK(std::min(s1, 1.0 - s1) < 1e-12);
    CHECK(std::min(t1, 1.0 - t1) < 1e-12);

    // pi*i + 3*pi*i*tau reduces to (1/2, 1/2)
    auto [s2, t2] = reduce_mod_lattice(0.5 * kTwoPiI + 1.5 * kTwoPiI * p.tau(), p);
    CHECK(s2 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(t2 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("torsion orders") {
    CHECK(CurvePoint().order() == 1);
    CHECK(CurvePoint(Rational(1, 2), 0).order() == 2);
    CHECK(CurvePoint(Rational(1, 3), Rational(1, 2)).order() == 6);
    CHECK(CurvePoint(Rational(2, 4), 0).order() == 2);  // stored reduced
}

TEST_CASE("lifts and their integer invariants") {
    CurveParams p(Complex(0.0, 1.0));

    LiftedPoint zero(CurvePoint(), 0, 0);
    CHECK(zero.abar(p) == Complex(0.0));
    CHECK(zero.ell() == 0);
    CHECK(zero.k() == 0);
    CHECK(std::abs(zero.alpha(p) - Complex(1.0)) < 1e-15);

    LiftedPoint half(CurvePoint(Rational(1, 2), 0), 0, 0);
    CHECK(std::abs(half.abar(p) - Complex(0.0, kPi)) < 1e-15);
    CHECK(half.ell() == 1);
    CHECK(half.k() == 0);
    CHECK(std::abs(half.alpha(p) - Complex(-1.0)) < 1e-14);

    LiftedPoint tau_half(CurvePoint(0, Rational(1, 2)), 0, 0);
    CHECK(std::abs(tau_half.abar(p) - kPi * Complex(0.0, 1.0) * p.tau()) < 1e-15);
    CHECK(tau_half.ell() == 0);
    CHECK(tau_half.k() == 1);
    CHECK(std::abs(tau_half.alpha(p) - p.q_pow(0.5)) < 1e-14);

    // alpha^n = q^k for a mixed-order point
    LiftedPoint mixed(CurvePoint(Rational(1, 3), Rational(1, 2)), 2, -1);
    const long long n = mixed.order();
    Complex an = 1.0;
    for (long long i = 0; i < n; ++i) an *= mixed.alpha(p);
    CHECK(std::abs(an - p.q_pow(double(mixed.k()))) / std::abs(an) < 1e-12);
}

TEST_CASE("weil pairing hand values and lift independence") {
    CurveParams p(Complex(0.0, 1.0));
    CHECK(std::abs(weil_pairing(LiftedPoint(CurvePoint(), 0, 0), p) - Complex(1.0)) < 1e-14);
    CHECK(std::abs(weil_pairing(LiftedPoint(CurvePoint(Rational(1, 2), 0), 0, 0), p) -
                   Complex(-1.0)) < 1e-14);
    CHECK(std::abs(weil_pairing(LiftedPoint(CurvePoint(0, Rational(1, 2)), 0, 0), p) -
                   Complex(1.0)) < 1e-14);

    auto rng = trial_rng(7, "test_weil", 0);
    for (int trial = 0; trial < 50; ++trial) {
        CurvePoint a = random_torsion(rng, 12);
        const Complex w0 = weil_pairing(LiftedPoint(a, 0, 0), p);
        const Complex w1 = weil_pairing(random_lift(rng, a, 2), p);
        CHECK(std::abs(w0 - w1) < 1e-12);
        Complex wn = 1.0;
        for (long long i = 0; i < a.order(); ++i) wn *= w0;
        CHECK(std::abs(wn - 1.0) < 1e-12);
    }
}

TEST_CASE("lattice distance") {
    CurveParams p(Complex(0.0, 1.0));
    CHECK(lattice_distance(0.0, p) < 1e-12);
    CHECK(lattice_distance(kTwoPiI * (2.0 + 3.0 * p.tau()), p) < 1e-10);
    CHECK(lattice_distance(Complex(0.3, 0.1), p) ==
          doctest::Approx(std::abs(Complex(0.3, 0.1))).epsilon(1e-12));
}
