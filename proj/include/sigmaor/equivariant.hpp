#pragma once

// The twisted class F(theta, m, abar) pulled back along split toy bundle
// data, its lift/Weyl transformation laws, and the unit ratio R that
// compares the numerator of a fixed sub-bundle Euler class with F.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sigmaor/curve.hpp"
#include "sigmaor/jet.hpp"
#include "sigmaor/lattice.hpp"
#include "sigmaor/theta.hpp"

namespace sigmaor {

/// A T-equivariant split bundle restricted to a fixed component: rotation
/// numbers m_j, Chern-root jets x_j (zero constant term), and orientation
/// signs for the fixed sub-bundles.  Sign keys: n >= 1 is the sub-bundle
/// fixed by the order-n cyclic subgroup, key 0 is the circle-fixed part.
struct ToyBundle {
    LatticeWithForm lattice;
    Cocharacter m;
    std::vector<Jet> chern_roots;
    std::map<long long, int> orientation_signs;

    int rank() const { return lattice.rank(); }
    int sign(long long n) const;
    /// n >= 1: indices j with n | m_j; n == 0: indices with m_j == 0.
    std::vector<int> fixed_indices(long long n) const;
    void validate() const;

    ToyBundle weyl_moved(const SignedPermutation& w) const;
    static ToyBundle direct_sum(const ToyBundle& a, const ToyBundle& b);
};

/// A jet-valued class sampled at finitely many z, with a provenance label.
struct EvaluatedClass {
    std::vector<Complex> z_samples;
    std::vector<Jet> values;
    std::string provenance;
};

/// F(z) = exp((k/n) [sum_i Ihat(mbar)_i (mbar_i z + x_i) + phi(mbar) abar])
///        * theta(jets mbar_i z + x_i + mbar_i abar),
/// with Ihat and phi taken from theta's level data.
Jet F_eval(const ThetaFunction& theta, const Cocharacter& mbar, const LiftedPoint& lift,
           const CurveParams& p, Complex z, const std::vector<Jet>& roots, double tol = 1e-13);

/// (ratio, predicted) for F under a change of lift of the same point:
/// ratio of constant terms, predicted = the n-th root of unity
/// w(a)^{dt phi} e^{2 pi i (k/n) ds phi}.  Throws division_near_zero when
/// the reference value is too small to divide by.
std::pair<Complex, Complex> F_lift_transform(const ThetaFunction& theta, const Cocharacter& mbar,
                                             const LiftedPoint& lift, const LiftedPoint& lift2,
                                             const CurveParams& p, Complex z,
                                             const std::vector<Jet>& roots, double tol = 1e-13);

/// F with the bundle's own (m, roots) at each sample point.
EvaluatedClass theta_of_bundle(const ThetaFunction& theta, const ToyBundle& V,
                               const LiftedPoint& lift, const CurveParams& p,
                               const std::vector<Complex>& z_samples, double tol = 1e-13);

/// The unit ratio R(V, abar) at z: sign eps(V^{T[n]}) times
///   prod_{m_j != 0} sigma(m_j z + x_j)^{[n | m_j]} / F(sigma_d, m, abar)
/// after the exact structural cancellations, so it is well defined at z = 0.
/// Throws not_a_unit when a surviving sigma factor fails to be a unit.
Jet R_eval(const ToyBundle& V, const LiftedPoint& lift, Complex z, const CurveParams& p,
           double tol = 1e-13);

/// Same ratio without the closed-form cancellations; only valid at generic z
/// where every factor is a unit.  Reference implementation for tests.
Jet R_eval_direct(const ToyBundle& V, const LiftedPoint& lift, Complex z, const CurveParams& p,
                  double tol = 1e-13);

}  // namespace sigmaor
