#include <doctest.h>

#include "sigmaor/equivariant.hpp"
#include "sigmaor/sampling.hpp"

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

}  // namespace

TEST_CASE("twisted class at the trivial point") {
    CurveParams p(Complex(0.0, 1.0));
    ThetaFunction theta = ThetaFunction::sigma_d(2);
    JetSpacePtr sp = JetSpace::get(2, 4);
    std::vector<Jet> roots = {Jet::variable(sp, 0) * 0.5, Jet::variable(sp, 1) * 0.25};
    const Cocharacter m = cochar({1, 1});
    const Complex z(0.21, 0.13);

    // order 1, abar = 0: all prefactors are 1 and F is the plain evaluation
    Jet F = F_eval(theta, m, LiftedPoint(CurvePoint(), 0, 0), p, z, roots);
    std::vector<Jet> args;
    for (int i = 0; i < 2; ++i) args.push_back(roots[i] + Complex(double(m[i])) * z);
    Jet direct = theta.eval_jet(args, p);
    CHECK(relj(F, direct) < 1e-12);
}

TEST_CASE("lift transformation of the twisted class") {
    CurveParams p(Complex(0.0, 1.0));
    ThetaFunction theta = ThetaFunction::sigma_d(2);
    JetSpacePtr sp = JetSpace::get(2, 4);
    std::vector<Jet> roots = {Jet::variable(sp, 0) * 0.5, Jet::variable(sp, 1) * 0.25};
    const Cocharacter m = cochar({1, 1});
    const Complex z(0.21, 0.13);
    const CurvePoint a(Rational(1, 2), 0);
    const LiftedPoint lift(a, 0, 0);

    auto [r0, p0] = F_lift_transform(theta, m, lift, lift, p, z, roots);
    CHECK(std::abs(r0 - 1.0) < 1e-12);
    CHECK(std::abs(p0 - 1.0) == 0.0);

    // delta = 1 on the order-2 point with phi(m) = 1: predicted -1
    auto [r1, p1] = F_lift_transform(theta, m, lift, LiftedPoint(a, 0, 1), p, z, roots);
    CHECK(std::abs(p1 - Complex(-1.0)) < 1e-12);
    CHECK(std::abs(r1 - p1) < 1e-9);

    // delta = 2: the square of the pairing
    auto [r2, p2] = F_lift_transform(theta, m, lift, LiftedPoint(a, 0, 2), p, z, roots);
    const Complex w = weil_pairing(lift, p);
    CHECK(std::abs(p2 - w * w) < 1e-12);
    CHECK(std::abs(r2 - p2) < 1e-9);
}

TEST_CASE("bundle evaluation is reduction independent") {
    CurveParams p(Complex(0.0, 1.0));
    auto rng = trial_rng(9, "test_bundle", 0);
    JetSpacePtr sp = JetSpace::get(2, 4);
    ThetaFunction theta = ThetaFunction::sigma_d(2);
    ToyBundle V = random_bundle(rng, 2, sp, 2);
    const LiftedPoint lift(CurvePoint(Rational(1, 3), 0), 0, 0);
    const std::vector<Complex> zs = {Complex(0.17, 0.08), Complex(-0.11, 0.21)};

    EvaluatedClass base = theta_of_bundle(theta, V, lift, p, zs);
    ToyBundle Vw = V.weyl_moved(V.lattice.random_element(rng));
    EvaluatedClass moved = theta_of_bundle(theta, Vw, lift, p, zs);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        CHECK(relj(base.values[i], moved.values[i]) < 1e-9);
    }

    // all rotation numbers zero: independent of the lift entirely
    ToyBundle V0{LatticeWithForm::spin(4), Cocharacter::Zero(2),
                 {Jet::variable(sp, 0) * 0.5, Jet::variable(sp, 1) * 0.25},
                 {}};
    EvaluatedClass c1 = theta_of_bundle(theta, V0, lift, p, zs);
    EvaluatedClass c2 = theta_of_bundle(theta, V0, LiftedPoint(CurvePoint(), 0, 0), p, zs);
    Jet plain = theta.eval_jet(V0.chern_roots, p);
    for (std::size_t i = 0; i < zs.size(); ++i) {
        CHECK(relj(c1.values[i], c2.values[i]) < 1e-12);
        CHECK(relj(c1.values[i], plain) < 1e-12);
    }
}

TEST_CASE("unit ratio R") {
    CurveParams p(Complex(0.0, 1.0));
    JetSpacePtr sp = JetSpace::get(2, 4);
    ToyBundle V{LatticeWithForm::spin(4), cochar({2, 0}),
                {Jet::variable(sp, 0) * 0.5, Jet::variable(sp, 1) * 0.25},
                {}};

    // trivial point: identically 1
    Jet one = R_eval(V, LiftedPoint(CurvePoint(), 0, 0), Complex(0.12, 0.07), p);
    CHECK((one - Jet::constant(sp, 1.0)).max_abs() == 0.0);

    // order 2 at a = (0, 1/2): the closed form is a unit at z = 0
    const LiftedPoint lift(CurvePoint(0, Rational(1, 2)), 0, 0);
    Jet R0 = R_eval(V, lift, 0.0, p);
    CHECK(std::abs(R0.constant_term()) > 1e-6);

    // no nonzero rotation number divisible by the order: still a unit at 0
    ToyBundle V11{V.lattice, cochar({1, 1}), V.chern_roots, {}};
    Jet R11 = R_eval(V11, lift, 0.0, p);
    CHECK(std::abs(R11.constant_term()) > 1e-6);

    // closed form against the direct quotient away from cancellations
    const Complex zg(0.43, 0.29);
    CHECK(relj(R_eval(V, lift, zg, p), R_eval_direct(V, lift, zg, p)) < 1e-9);
    CHECK(relj(R_eval(V11, lift, zg, p), R_eval_direct(V11, lift, zg, p)) < 1e-9);
}

TEST_CASE("bundle validation") {
    JetSpacePtr sp = JetSpace::get(2, 4);
    ToyBundle bad{LatticeWithForm::spin(4), cochar({1, 0}),
                  {Jet::variable(sp, 0), Jet::variable(sp, 1)},
                  {}};
    CHECK_THROWS_AS(bad.validate(), not_in_lattice);

    ToyBundle wrong_rank{LatticeWithForm::spin(4), cochar({1, 1}), {Jet::variable(sp, 0)}, {}};
    CHECK_THROWS_AS(wrong_rank.validate(), parameter_error);
}
