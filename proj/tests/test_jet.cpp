#include <doctest.h>

#include "sigmaor/jet.hpp"
#include "sigmaor/sampling.hpp"
#include "sigmaor/theta.hpp"

using namespace sigmaor;

namespace {

Jet random_jet(std::mt19937_64& rng, const JetSpacePtr& sp) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Jet a(sp);
    for (int i = 0; i < sp->size(); ++i) a.coeffs()[i] = Complex(dist(rng), dist(rng));
    return a;
}

Eigen::VectorXi mono(std::initializer_list<int> e) {
    Eigen::VectorXi v(int(e.size()));
    int i = 0;
    for (int x : e) v[i++] = x;
    return v;
}

}  // namespace

TEST_CASE("jet products and truncation") {
    JetSpacePtr sp2 = JetSpace::get(1, 2);
    Jet x = Jet::variable(sp2, 0);
    Jet prod = (x + 1.0) * (1.0 - x);
    CHECK((prod - (Jet::constant(sp2, 1.0) - x * x)).max_abs() == 0.0);

    JetSpacePtr sp1 = JetSpace::get(2, 1);
    Jet xy = Jet::variable(sp1, 0) * Jet::variable(sp1, 1);
    CHECK(xy.max_abs() == 0.0);

    JetSpacePtr sq = JetSpace::get(2, 2);
    Jet s = Jet::variable(sq, 0) + Jet::variable(sq, 1) + 1.0;
    Jet sq2 = s * s;
    CHECK(sq2.coeff(mono({0, 0})) == Complex(1.0));
    CHECK(sq2.coeff(mono({1, 0})) == Complex(2.0));
    CHECK(sq2.coeff(mono({0, 1})) == Complex(2.0));
    CHECK(sq2.coeff(mono({2, 0})) == Complex(1.0));
    CHECK(sq2.coeff(mono({1, 1})) == Complex(2.0));
    CHECK(sq2.coeff(mono({0, 2})) == Complex(1.0));
}

TEST_CASE("jet inverse") {
    JetSpacePtr sp = JetSpace::get(1, 3);
    CHECK((Jet::constant(sp, 1.0).inverse() - Jet::constant(sp, 1.0)).max_abs() == 0.0);

    Jet x = Jet::variable(sp, 0);
    Jet inv = (1.0 + x).inverse();
    Jet expected = Jet::constant(sp, 1.0) - x + x * x - x * x * x;
    CHECK((inv - expected).max_abs() < 1e-15);

    auto rng = trial_rng(1, "test_inv", 0);
    JetSpacePtr sp22 = JetSpace::get(2, 2);
    Jet a = random_jet(rng, sp22) + 2.0;
    CHECK(((a * a.inverse()) - Jet::constant(sp22, 1.0)).max_abs() < 1e-13);

    CHECK_THROWS_AS(Jet::variable(sp, 0).inverse(), not_a_unit);
}

TEST_CASE("analytic composition") {
    JetSpacePtr sp = JetSpace::get(1, 3);
    Jet x = Jet::variable(sp, 0);
    std::vector<Complex> exp_taylor = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0};
    Jet e = compose_analytic(exp_taylor, x);
    CHECK((e - (Jet::constant(sp, 1.0) + x + x * x * 0.5 + x * x * x * (1.0 / 6.0))).max_abs() <
          1e-15);
    CHECK((jet_exp(x) - e).max_abs() < 1e-15);

    auto rng = trial_rng(1, "test_compose", 0);
    Jet a = random_jet(rng, sp);
    std::vector<Complex> ident = {a.constant_term(), 1.0, 0.0, 0.0};
    CHECK((compose_analytic(ident, a) - a).max_abs() < 1e-15);
}

TEST_CASE("sigma jet matches finite differences") {
    CurveParams p(Complex(0.0, 1.0));
    const Complex z0 = 0.4;
    Jet j = sigma_jet(z0, p, 2);
    CHECK(std::abs(j.coeffs()[0] - sigma(z0, p)) < 1e-12);
    const double h = 1e-5;
    const Complex d1 = (sigma(z0 + h, p) - sigma(z0 - h, p)) / (2.0 * h);
    const Complex d2 = (sigma(z0 + h, p) - 2.0 * sigma(z0, p) + sigma(z0 - h, p)) / (h * h);
    CHECK(std::abs(j.coeffs()[1] - d1) < 1e-6);
    CHECK(std::abs(j.coeffs()[2] - 0.5 * d2) < 1e-5);
}

TEST_CASE("ring axioms on random jets") {
    auto rng = trial_rng(2, "test_ring", 0);
    JetSpacePtr sp = JetSpace::get(3, 3);
    for (int trial = 0; trial < 20; ++trial) {
        Jet a = random_jet(rng, sp), b = random_jet(rng, sp), c = random_jet(rng, sp);
        CHECK(((a * b) * c - a * (b * c)).max_abs() < 1e-13);
        CHECK((a * (b + c) - (a * b + a * c)).max_abs() < 1e-13);
        // summation order differs between the two products
        CHECK((a * b - b * a).max_abs() < 1e-13);
    }
}

TEST_CASE("substitution commutes with multiplication") {
    auto rng = trial_rng(3, "test_subst", 0);
    JetSpacePtr sp = JetSpace::get(2, 3);
    Jet a = random_jet(rng, sp), b = random_jet(rng, sp);
    std::vector<Jet> images = {Jet::variable(sp, 1) * 0.5,
                               Jet::variable(sp, 0) + Jet::variable(sp, 1)};
    CHECK((substitute(a * b, images) - substitute(a, images) * substitute(b, images)).max_abs() <
          1e-13);
    CHECK((substitute(jet_exp(a - a.constant_term()), images) -
           jet_exp(substitute(a - a.constant_term(), images)))
              .max_abs() < 1e-12);
}

TEST_CASE("promotion between spaces") {
    JetSpacePtr small = JetSpace::get(1, 4);
    JetSpacePtr big = JetSpace::get(2, 3);
    Jet x = Jet::variable(small, 0);
    Jet q = jet_pow(x + 1.0, 4);
    Jet moved = promote(q, big);  // degree-4 part truncated away
    CHECK(moved.coeff(mono({0, 0})) == Complex(1.0));
    CHECK(moved.coeff(mono({1, 0})) == Complex(4.0));
    CHECK(moved.coeff(mono({2, 0})) == Complex(6.0));
    CHECK(moved.coeff(mono({3, 0})) == Complex(4.0));
    CHECK(moved.coeff(mono({0, 1})) == Complex(0.0));
}
