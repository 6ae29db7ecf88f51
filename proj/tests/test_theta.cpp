#include <doctest.h>

#include "sigmaor/sampling.hpp"
#include "sigmaor/theta.hpp"

using namespace sigmaor;

namespace {

Cocharacter cochar(std::initializer_list<int> e) {
    Cocharacter v(int(e.size()));
    int i = 0;
    for (int x : e) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("sigma basic values") {
    CurveParams p(Complex(0.0, 1.0));
    CHECK(std::abs(sigma(0.0, p)) == 0.0);

    const Complex z(0.3, 0.1);
    CHECK(std::abs(sigma(-z, p) + sigma(z, p)) < 1e-12);

    Jet at0 = sigma_jet(0.0, p, 1);
    CHECK(std::abs(at0.coeffs()[0]) < 1e-14);
    CHECK(std::abs(at0.coeffs()[1] - Complex(1.0)) < 1e-10);
}

TEST_CASE("sigma truncation converges") {
    CurveParams p(Complex(0.0, 1.0));
    const Complex z(0.7, -0.4);
    const Complex ref = sigma_with_terms(z, p, 60);
    double prev = 1e300;
    for (int terms = 2; terms <= 10; terms += 2) {
        const double err = std::abs(sigma_with_terms(z, p, terms) - ref);
        CHECK(err <= prev + 1e-18);
        prev = err;
    }
    CHECK(std::abs(sigma(z, p) - ref) < 1e-12 * std::abs(ref));
    // the adaptive term count meets its tolerance with margin
    const int terms = sigma_terms(1e-10, p, std::exp(std::abs(z.real())));
    CHECK(std::abs(sigma_with_terms(z, p, terms) - ref) < 1e-10 * std::abs(ref));
}

TEST_CASE("sigma quasi-periodicity") {
    for (Complex tau : {Complex(0.0, 1.0), Complex(0.3, 0.8), Complex(0.0, 1.5)}) {
        CurveParams p(tau);
        const Complex z(0.41, 0.13);
        for (int n = -3; n <= 3; ++n) {
            const Complex lhs = sigma(z + kTwoPiI * tau * double(n), p);
            const Complex rhs =
                (n % 2 ? -1.0 : 1.0) * std::exp(-double(n) * z) * p.q_pow(-0.5 * n * n) *
                sigma(z, p);
            CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(rhs));
        }
    }
}

TEST_CASE("sigma jet of jet-valued arguments") {
    CurveParams p(Complex(0.0, 1.0));
    JetSpacePtr sp = JetSpace::get(1, 3);
    const Complex z0(0.5, 0.0);
    Jet arg = Jet::variable(sp, 0) + z0;
    Jet via_arg = sigma_jet_arg(arg, p);
    Jet direct = sigma_jet(z0, p, 3);
    CHECK((via_arg - direct).max_abs() < 1e-10 * direct.max_abs());

    const double h = 1e-5;
    const Complex d2 = (sigma(z0 + h, p) - 2.0 * sigma(z0, p) + sigma(z0 - h, p)) / (h * h);
    CHECK(std::abs(direct.coeffs()[2] - 0.5 * d2) < 1e-6);
}

TEST_CASE("rank-d product") {
    CurveParams p(Complex(0.0, 1.0));
    ThetaFunction t2 = ThetaFunction::sigma_d(2);
    CHECK(t2.rank() == 2);

    Eigen::VectorXcd z(2);
    z << Complex(0.0), Complex(0.3, 0.2);
    CHECK(std::abs(t2.eval(z, p)) == 0.0);

    ThetaFunction t1 = ThetaFunction::sigma_d(1);
    Eigen::VectorXcd z1(1);
    z1 << Complex(0.4, -0.1);
    CHECK(std::abs(t1.eval(z1, p) - sigma(z1[0], p)) < 1e-13);

    z << Complex(0.4, -0.1), Complex(0.3, 0.2);
    SignedPermutation w{{1, 0}, {-1, -1}};  // even number of flips
    CHECK(std::abs(t2.eval(w.apply(z), p) - t2.eval(z, p)) < 1e-12 * std::abs(t2.eval(z, p)));
}

TEST_CASE("level functional equation") {
    CurveParams p(Complex(0.0, 1.0));
    auto rng = trial_rng(8, "test_level", 0);

    ThetaFunction t2 = ThetaFunction::sigma_d(2);
    Eigen::VectorXcd z(2);
    z << Complex(0.4, -0.1), Complex(0.3, 0.2);
    SignedPermutation id2 = SignedPermutation::identity(2);
    CHECK(verify_level(t2, Cocharacter::Zero(2), id2, {z}, p) < 1e-12);

    // d = 1, m = 1: sigma(u q) = -u^{-1} q^{-1/2} sigma(u)
    ThetaFunction t1 = ThetaFunction::sigma_d(1);
    Eigen::VectorXcd z1(1);
    z1 << Complex(0.4, -0.1);
    Cocharacter m1 = cochar({1});
    CHECK_FALSE(t1.lattice().contains(m1));  // spin(2) needs even entries
    const Complex u = std::exp(z1[0]);
    const Complex lhs = sigma(z1[0] + kTwoPiI * p.tau(), p);
    const Complex rhs = -1.0 / u * p.q_pow(-0.5) * sigma(z1[0], p);
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(rhs));
    CHECK(verify_level(t1, cochar({2}), SignedPermutation::identity(1), {z1}, p) < 1e-9);

    // product of two rank-2 factors with a one-block cocharacter
    ThetaFunction prod = ThetaFunction::product({t2, t2});
    Eigen::VectorXcd z4(4);
    z4 << Complex(0.4, -0.1), Complex(0.3, 0.2), Complex(-0.2, 0.15), Complex(0.6, 0.05);
    CHECK(verify_level(prod, cochar({2, 0, 0, 0}), SignedPermutation::identity(4), {z4}, p) <
          1e-9);

    // doubled level data for the square
    ThetaFunction sq = ThetaFunction::power(t1, 2);
    CHECK(sq.level_phi(cochar({2})) == 2 * t1.level_phi(cochar({2})));
    CHECK(verify_level(sq, cochar({2}), SignedPermutation::identity(1), {z1}, p) < 1e-9);

    for (int trial = 0; trial < 20; ++trial) {
        Cocharacter m = t2.lattice().random_member(rng, 3);
        SignedPermutation w = t2.lattice().random_element(rng);
        Eigen::VectorXcd zz(2);
        zz << Complex(0.37, -0.21), Complex(0.52, 0.11);
        CHECK(verify_level(t2, m, w, {zz}, p) < 1e-9);
    }
}

TEST_CASE("descriptors parse and round-trip") {
    ThetaFunction a = ThetaFunction::parse("sigma_d(3)");
    CHECK(a.rank() == 3);
    CHECK(a.descriptor() == "sigma_d(3)");

    ThetaFunction b = ThetaFunction::parse("pow(sigma_d(2),2)");
    CHECK(b.rank() == 2);
    CHECK(ThetaFunction::parse(b.descriptor()).descriptor() == b.descriptor());

    ThetaFunction c = ThetaFunction::parse("prod(sigma_d(1),pow(sigma_d(2),2))");
    CHECK(c.rank() == 3);
    CHECK(ThetaFunction::parse(c.descriptor()).descriptor() == c.descriptor());

    ThetaFunction one = ThetaFunction::parse("one");
    CHECK(one.rank() == 0);
    CHECK(std::abs(one.eval(Eigen::VectorXcd(0), CurveParams(Complex(0.0, 1.0))) -
                   Complex(1.0)) == 0.0);

    CHECK_THROWS_AS(ThetaFunction::parse("pow(sigma_d(2)"), parameter_error);
}

TEST_CASE("power of one is the same function") {
    CurveParams p(Complex(0.0, 1.0));
    ThetaFunction t = ThetaFunction::power(ThetaFunction::sigma_d(2), 1);
    Eigen::VectorXcd z(2);
    z << Complex(0.4, -0.1), Complex(0.3, 0.2);
    CHECK(std::abs(t.eval(z, p) - ThetaFunction::sigma_d(2).eval(z, p)) < 1e-13);
}
