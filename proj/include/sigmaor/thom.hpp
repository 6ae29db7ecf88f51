#pragma once

// Thom cocycle data and the two global-section constructions: local sections
// around ordinary and special points, the Euler-ratio transition factors,
// gluing verification, and the stability/exponential/naturality laws.

#include <vector>

#include "sigmaor/curve.hpp"
#include "sigmaor/equivariant.hpp"
#include "sigmaor/jet.hpp"
#include "sigmaor/theta.hpp"

namespace sigmaor {

/// An ordered pair of bundles over one fixed component, sharing the jet
/// variable set of their Chern roots.
struct VirtualPair {
    ToyBundle V0, V1;
    void validate() const;
};

/// borel_c2 of V as a jet in (roots..., z), z adjoined as the last variable.
Jet pair_c2(const ToyBundle& V);
/// The level form of theta' on (m', roots') as the same kind of jet:
/// (1/2) (m' z + x')^T level_gram (m' z + x').
Jet theta_level_c2(const ThetaFunction& theta, const Cocharacter& m,
                   const std::vector<Jet>& roots);

bool c2_matched(const VirtualPair& P, double tol = 1e-9);
bool c2_matched_theta(const ToyBundle& V, const ThetaFunction& theta_prime,
                      const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                      double tol = 1e-9);

/// Torsion points a of order <= bound such that some nonzero rotation number
/// kills a (n | m_j), plus 0; exact rational arithmetic, sorted and deduped.
std::vector<CurvePoint> special_points(const ToyBundle& V, long long bound);

/// eps(V^{T[n]})/eps(V^T) * prod_{0 != m_j = 0 mod n} sigma(m_j z + x_j).
/// Throws not_a_unit when some contributing m_j z hits the lattice.
Jet euler_ratio_e(const ToyBundle& V, long long n, Complex z, const CurveParams& p,
                  double tol = 1e-13);

/// Residual of the triple cocycle identity for transition factors between
/// the charts at a, b, c (at most one special for V), with chart transport
/// realized as translation of the local coordinate.
double cocycle_check(const ToyBundle& V, const CurvePoint& a, const CurvePoint& b,
                     const CurvePoint& c, const std::vector<Complex>& z_samples,
                     const CurveParams& p, double tol = 1e-13);

/// Ordinary-chart section: eps(V^T) * theta'(m'_i z + x'_i) / prod_{m_j != 0}
/// sigma(m_j z + x_j); requires the c2-matching hypothesis.
Jet gamma_ordinary_thm8(const ToyBundle& V, const ThetaFunction& theta_prime,
                        const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                        Complex z, const CurveParams& p, double tol = 1e-13);
/// eps ratio * prod sigma(V0 lines)/prod sigma(V1 lines) for the pair.
Jet gamma_ordinary_thm9(const VirtualPair& P, Complex z, const CurveParams& p,
                        double tol = 1e-13);

/// Special-chart section at a point of order n: R(V, abar) * F(theta', m', abar).
Jet gamma_special_thm8(const ToyBundle& V, const ThetaFunction& theta_prime,
                       const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                       const LiftedPoint& lift, Complex z, const CurveParams& p,
                       double tol = 1e-13);
/// R(V1, abar) / R(V0, abar); a unit jet.
Jet gamma_special_thm9(const VirtualPair& P, const LiftedPoint& lift, Complex z,
                       const CurveParams& p, double tol = 1e-13);

/// Max residual of the gluing equation: euler ratio^{-1} * (special section)
/// against the ordinary section translated by abar, over the samples.
double gluing_check_thm8(const ToyBundle& V, const ThetaFunction& theta_prime,
                         const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                         const LiftedPoint& lift, const std::vector<Complex>& z_samples,
                         const CurveParams& p, double tol = 1e-13);
double gluing_check_thm9(const VirtualPair& P, const LiftedPoint& lift,
                         const std::vector<Complex>& z_samples, const CurveParams& p,
                         double tol = 1e-13);

struct LawReport {
    double stability = 0.0;
    double exponential = 0.0;
    double naturality = 0.0;
};

/// Stability under padding both slots with W, exponentiality under direct
/// sums of pairs, and commutation with substitution of the jet variables.
LawReport law_checks(const VirtualPair& P, const VirtualPair& P2, const ToyBundle& W,
                     const LiftedPoint& lift, const std::vector<Complex>& z_samples,
                     const std::vector<Jet>& nat_images, const CurveParams& p,
                     double tol = 1e-13);

/// Residual of the transfer formula: theta at m_i (z + abar) + x_i against
/// the translate combinator (shift m_i abar) at m_i z + x_i.
double transfer_check(const ThetaFunction& theta, const Cocharacter& m,
                      const std::vector<Jet>& roots, const LiftedPoint& lift,
                      const std::vector<Complex>& z_samples, const CurveParams& p,
                      double tol = 1e-13);

}  // namespace sigmaor
