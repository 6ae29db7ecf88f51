#include <doctest.h>

#include <algorithm>

#include "sigmaor/sampling.hpp"
#include "sigmaor/thom.hpp"

using namespace sigmaor;

namespace {

Cocharacter cochar(std::initializer_list<int> e) {
    Cocharacter v(int(e.size()));
    int i = 0;
    for (int x : e) v[i++] = x;
    return v;
}

double relj(const Jet& a, const Jet& b) {
    return (a - b).max_abs() / std::max({a.max_abs(), b.max_abs(), 1e-300});
}

ToyBundle make_bundle(std::initializer_list<int> m, const JetSpacePtr& sp) {
    Cocharacter mm = cochar(m);
    std::vector<Jet> roots;
    for (int i = 0; i < mm.size(); ++i) roots.push_back(Jet::variable(sp, i) * 0.5);
    return ToyBundle{LatticeWithForm::spin(2 * int(mm.size())), mm, roots, {}};
}

}  // namespace

TEST_CASE("special points") {
    JetSpacePtr sp = JetSpace::get(2, 4);
    ToyBundle V11 = make_bundle({1, 1}, sp);
    auto pts = special_points(V11, 6);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].is_zero());

    ToyBundle V20 = make_bundle({2, 0}, sp);
    auto pts2 = special_points(V20, 6);
    CHECK(pts2.size() == 4);  // zero plus the three points of order 2
    for (const auto& a : pts2) CHECK((a.is_zero() || a.order() == 2));

    ToyBundle V00 = make_bundle({0, 0}, sp);
    auto pts0 = special_points(V00, 6);
    REQUIRE(pts0.size() == 1);
    CHECK(pts0[0].is_zero());
}

TEST_CASE("euler ratio factors") {
    CurveParams p(Complex(0.0, 1.0));
    JetSpacePtr sp = JetSpace::get(2, 4);
    const Complex z(0.19, 0.11);

    ToyBundle V11 = make_bundle({1, 1}, sp);
    Jet e11 = euler_ratio_e(V11, 2, z, p);
    CHECK((e11 - Jet::constant(sp, 1.0)).max_abs() == 0.0);

    ToyBundle V20 = make_bundle({2, 0}, sp);
    Jet e20 = euler_ratio_e(V20, 2, z, p);
    Jet expected = sigma_jet_arg(V20.chern_roots[0] + 2.0 * z, p);
    CHECK(relj(e20, expected) < 1e-12);

    CHECK_THROWS_AS(euler_ratio_e(V20, 2, 0.0, p), not_a_unit);
}

TEST_CASE("degree-four matching") {
    auto rng = trial_rng(10, "test_match", 0);
    JetSpacePtr sp = JetSpace::get(2, 4);
    VirtualPair P = random_pair(rng, 2, sp, 3, true);
    CHECK(c2_matched(P));

    ToyBundle V = make_bundle({2, 0}, sp);
    VirtualPair bad{V, make_bundle({1, 1}, sp)};
    CHECK_FALSE(c2_matched(bad));

    TwistedSectionData data = random_twisted_data(rng, 2, sp, 2, 2);
    CHECK(c2_matched_theta(data.V, data.theta_prime, data.m_prime, data.roots_prime));
}

TEST_CASE("transition cocycle") {
    CurveParams p(Complex(0.0, 1.0));
    auto rng = trial_rng(11, "test_cocycle", 0);
    JetSpacePtr sp = JetSpace::get(2, 4);
    ToyBundle V = make_bundle({2, 0}, sp);
    const std::vector<Complex> zs = {Complex(0.03, 0.02), Complex(-0.02, 0.04)};

    const CurvePoint ord(Rational(1, 3), 0);  // order 3 kills no m_j here
    const CurvePoint spc(0, Rational(1, 2));

    CHECK(cocycle_check(V, ord, ord, ord, zs, p) < 1e-10);
    CHECK(cocycle_check(V, spc, ord, ord, zs, p) < 1e-9);
    CHECK(cocycle_check(V, ord, spc, ord, zs, p) < 1e-9);
    CHECK(cocycle_check(V, ord, ord, spc, zs, p) < 1e-9);
    CHECK_THROWS_AS(cocycle_check(V, spc, spc, ord, zs, p), parameter_error);
}

TEST_CASE("sections for a matched twist") {
    CurveParams p(Complex(0.0, 1.0));
    JetSpacePtr sp = JetSpace::get(2, 4);
    ToyBundle V = make_bundle({2, 0}, sp);
    ThetaFunction tp = ThetaFunction::sigma_d(2);
    const LiftedPoint lift(CurvePoint(0, Rational(1, 2)), 0, 0);
    const std::vector<Complex> zs = {Complex(0.09, 0.06), Complex(-0.07, 0.11)};

    // V is its own matching datum
    CHECK(c2_matched_theta(V, tp, V.m, V.chern_roots));
    CHECK(gluing_check_thm8(V, tp, V.m, V.chern_roots, lift, zs, p) < 1e-8);

    // trivial point: gluing degenerates to an identity of the two sections
    const LiftedPoint lift0(CurvePoint(), 0, 0);
    Jet special0 = gamma_special_thm8(V, tp, V.m, V.chern_roots, lift0, zs[0], p);
    Jet ordinary0 = gamma_ordinary_thm8(V, tp, V.m, V.chern_roots, zs[0], p);
    Jet ratio0 = euler_ratio_e(V, 1, zs[0], p);
    CHECK(relj(special0 * ratio0.inverse(), ordinary0) < 1e-10);

    // lattice invariance of the ordinary section
    Jet shifted = gamma_ordinary_thm8(V, tp, V.m, V.chern_roots, zs[0] + kTwoPiI * p.tau(), p);
    CHECK(relj(shifted, ordinary0) < 1e-9);
}

TEST_CASE("sections for a virtual pair") {
    CurveParams p(Complex(0.0, 1.0));
    auto rng = trial_rng(12, "test_pair", 0);
    JetSpacePtr sp = JetSpace::get(2, 4);
    const std::vector<Complex> zs = {Complex(0.09, 0.06), Complex(-0.07, 0.11)};

    // identical slots: gamma = 1 everywhere
    ToyBundle V = make_bundle({2, 0}, sp);
    VirtualPair same{V, V};
    const LiftedPoint lift(CurvePoint(0, Rational(1, 2)), 0, 0);
    Jet g = gamma_special_thm9(same, lift, zs[0], p);
    CHECK((g - Jet::constant(sp, 1.0)).max_abs() < 1e-12);
    CHECK(relj(gamma_ordinary_thm9(same, zs[0], p), Jet::constant(sp, 1.0)) < 1e-12);

    VirtualPair P = random_pair(rng, 2, sp, 2);
    const CurvePoint a = random_special_point(rng, P.V0, 6);
    CHECK(gluing_check_thm9(P, LiftedPoint(a, 0, 0), zs, p) < 1e-8);
}

TEST_CASE("stability exponentiality naturality") {
    CurveParams p(Complex(0.0, 1.0));
    auto rng = trial_rng(13, "test_laws", 0);
    JetSpacePtr sp = JetSpace::get(2, 4);
    VirtualPair P = random_pair(rng, 2, sp, 2);
    VirtualPair P2 = random_pair(rng, 2, sp, 2);
    ToyBundle W = random_bundle(rng, 1, sp, 2);
    const LiftedPoint lift(random_special_point(rng, P.V0, 6), 0, 0);
    std::vector<Jet> images = {Jet::variable(sp, 1) * 0.5,
                               Jet::variable(sp, 0) * 0.25 + Jet::variable(sp, 1) * 0.5};
    LawReport r = law_checks(P, P2, W, lift, {Complex(0.09, 0.06)}, images, p);
    CHECK(r.stability < 1e-8);
    CHECK(r.exponential < 1e-8);
    CHECK(r.naturality < 1e-8);
}

TEST_CASE("transfer formula") {
    CurveParams p(Complex(0.0, 1.0));
    JetSpacePtr sp = JetSpace::get(2, 4);
    ThetaFunction theta = ThetaFunction::sigma_d(2);
    std::vector<Jet> roots = {Jet::variable(sp, 0) * 0.5, Jet::variable(sp, 1) * 0.25};
    const Cocharacter m = cochar({2, 0});
    const std::vector<Complex> zs = {Complex(0.31, 0.12)};

    CHECK(transfer_check(theta, m, roots, LiftedPoint(CurvePoint(), 0, 0), zs, p) < 1e-12);
    CHECK(transfer_check(theta, m, roots, LiftedPoint(CurvePoint(Rational(1, 3), 0), 0, 0), zs,
                         p) < 1e-9);
    CHECK(transfer_check(theta, Cocharacter::Zero(2), roots,
                         LiftedPoint(CurvePoint(Rational(1, 4), Rational(1, 4)), 0, 0), zs, p) <
          1e-9);
}
