#pragma once

// Deterministic randomized-instance generation for the verification suites:
// per-trial RNG streams, well-conditioned sample points on the curve, and
// random bundle data with the hypotheses (membership, matching degree-four
// classes) built in by construction.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sigmaor/curve.hpp"
#include "sigmaor/equivariant.hpp"
#include "sigmaor/theta.hpp"
#include "sigmaor/thom.hpp"

namespace sigmaor {

/// Independent RNG stream keyed by (seed, suite, trial); identical inputs
/// give identical streams on every platform.
std::mt19937_64 trial_rng(std::uint64_t seed, const std::string& suite, std::uint64_t trial);

Complex random_unit_disk(std::mt19937_64& rng);

/// z in the box |Re z|, |Im z| <= pi * min(1, Im tau), at Euclidean distance
/// >= margin from the lattice.
Complex random_z_general(std::mt19937_64& rng, const CurveParams& p, double margin = 1e-3);

/// z with rmin <= |z| <= rmax.
Complex random_z_annulus(std::mt19937_64& rng, double rmin = 0.05, double rmax = 0.2);

/// Degree-one jets with zero constant term; coefficients are (Gaussian
/// integers / 4) * scale so that polynomial identities in them stay exact
/// in floating point when scale is a power of two.
std::vector<Jet> random_roots(std::mt19937_64& rng, const JetSpacePtr& space, int count,
                              double scale = 1.0);

/// Uniform torsion point of order at most max_order (order 1 = zero allowed).
CurvePoint random_torsion(std::mt19937_64& rng, long long max_order);
/// Uniform point of exact order n.
CurvePoint random_torsion_of_order(std::mt19937_64& rng, long long n);
LiftedPoint random_lift(std::mt19937_64& rng, const CurvePoint& base, int max_shift = 1);

/// Random spin(2d) bundle: even-sum m with entries in [-max_entry, max_entry],
/// random roots, random orientation signs on keys {0, 1, ..., sign_key_bound}.
ToyBundle random_bundle(std::mt19937_64& rng, int d, const JetSpacePtr& space, int max_entry = 3,
                        long long sign_key_bound = 6);

/// (V1 = Weyl move of V0), optionally padded with one shared block; the
/// degree-four classes match exactly by construction.
VirtualPair random_pair(std::mt19937_64& rng, int d, const JetSpacePtr& space, int max_entry = 3,
                        bool pad = false);

/// Matched data for the twisted-section construction: V plus (theta', m',
/// roots') whose level form equals borel_c2(V).  k = 1 gives a Weyl move
/// with theta' = sigma_d; k = 2 doubles V' and squares the theta.
struct TwistedSectionData {
    ToyBundle V;
    ThetaFunction theta_prime;
    Cocharacter m_prime;
    std::vector<Jet> roots_prime;
};
TwistedSectionData random_twisted_data(std::mt19937_64& rng, int d, const JetSpacePtr& space,
                                       int k, int max_entry = 3);

/// A point of order n > 1 annihilating some nonzero rotation number of V,
/// or the zero point when none exists within the bound.
CurvePoint random_special_point(std::mt19937_64& rng, const ToyBundle& V, long long bound);

}  // namespace sigmaor
