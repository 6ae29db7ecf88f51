#include "sigmaor/sampling.hpp"

#include <numeric>

namespace sigmaor {

std::mt19937_64 trial_rng(std::uint64_t seed, const std::string& suite, std::uint64_t trial) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a over the suite name
    for (unsigned char c : suite) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(h),
                      std::uint32_t(h >> 32), std::uint32_t(trial), std::uint32_t(trial >> 32)};
    return std::mt19937_64(seq);
}

Complex random_unit_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (;;) {
        Complex z(dist(rng), dist(rng));
        if (std::abs(z) <= 1.0) return z;
    }
}

Complex random_z_general(std::mt19937_64& rng, const CurveParams& p, double margin) {
    const double box = kPi * std::min(1.0, p.tau().imag());
    std::uniform_real_distribution<double> dist(-box, box);
    for (int tries = 0; tries < 10000; ++tries) {
        Complex z(dist(rng), dist(rng));
        if (lattice_distance(z, p) >= margin) return z;
    }
    throw parameter_error("random_z_general: rejection sampling failed");
}

Complex random_z_annulus(std::mt19937_64& rng, double rmin, double rmax) {
    std::uniform_real_distribution<double> rdist(rmin, rmax);
    std::uniform_real_distribution<double> adist(0.0, 2.0 * kPi);
    const double r = rdist(rng);
    const double a = adist(rng);
    return Complex(r * std::cos(a), r * std::sin(a));
}

std::vector<Jet> random_roots(std::mt19937_64& rng, const JetSpacePtr& space, int count,
                              double scale) {
    // Quarter-integer Gaussian coefficients keep products of roots exact in
    // floating point, so "exact identity" checks can demand zero residual.
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<Jet> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        Jet x(space);
        for (int v = 0; v < space->vars(); ++v) {
            Complex c(coeff(rng) * 0.25 * scale, coeff(rng) * 0.25 * scale);
            if (c != Complex(0)) x += Jet::variable(space, v) * c;
        }
        out.push_back(std::move(x));
    }
    return out;
}

CurvePoint random_torsion_of_order(std::mt19937_64& rng, long long n) {
    if (n <= 0) throw parameter_error("random_torsion_of_order: n must be positive");
    if (n == 1) return CurvePoint();
    std::uniform_int_distribution<long long> dist(0, n - 1);
    for (;;) {
        CurvePoint a(Rational(dist(rng), n), Rational(dist(rng), n));
        if (a.order() == n) return a;
    }
}

CurvePoint random_torsion(std::mt19937_64& rng, long long max_order) {
    std::uniform_int_distribution<long long> dist(1, max_order);
    return random_torsion_of_order(rng, dist(rng));
}

LiftedPoint random_lift(std::mt19937_64& rng, const CurvePoint& base, int max_shift) {
    std::uniform_int_distribution<int> dist(-max_shift, max_shift);
    return LiftedPoint(base, dist(rng), dist(rng));
}

ToyBundle random_bundle(std::mt19937_64& rng, int d, const JetSpacePtr& space, int max_entry,
                        long long sign_key_bound) {
    ToyBundle V{LatticeWithForm::spin(2 * d), Cocharacter(), {}, {}};
    V.m = V.lattice.random_member(rng, max_entry);
    V.chern_roots = random_roots(rng, space, d);
    for (long long n = 0; n <= sign_key_bound; ++n) {
        V.orientation_signs[n] = (rng() & 1) ? 1 : -1;
    }
    return V;
}

VirtualPair random_pair(std::mt19937_64& rng, int d, const JetSpacePtr& space, int max_entry,
                        bool pad) {
    ToyBundle V0 = random_bundle(rng, d, space, max_entry);
    ToyBundle V1 = V0.weyl_moved(V0.lattice.random_element(rng));
    for (auto& [n, s] : V1.orientation_signs) s = (rng() & 1) ? 1 : -1;
    if (pad) {
        ToyBundle W = random_bundle(rng, 1, space, 2);
        return {ToyBundle::direct_sum(V0, W), ToyBundle::direct_sum(V1, W)};
    }
    return {std::move(V0), std::move(V1)};
}

TwistedSectionData random_twisted_data(std::mt19937_64& rng, int d, const JetSpacePtr& space,
                                       int k, int max_entry) {
    if (k != 1 && k != 2) throw parameter_error("random_twisted_data: k must be 1 or 2");
    ToyBundle Vp = random_bundle(rng, d, space, max_entry);
    const SignedPermutation w = Vp.lattice.random_element(rng);
    TwistedSectionData out{Vp, ThetaFunction::sigma_d(d), Vp.m, Vp.chern_roots};
    if (k == 1) {
        out.V = Vp.weyl_moved(w);
    } else {
        out.V = ToyBundle::direct_sum(Vp, Vp.weyl_moved(w));
        out.theta_prime = ThetaFunction::power(ThetaFunction::sigma_d(d), 2);
    }
    for (auto& [n, s] : out.V.orientation_signs) s = (rng() & 1) ? 1 : -1;
    return out;
}

CurvePoint random_special_point(std::mt19937_64& rng, const ToyBundle& V, long long bound) {
    std::vector<long long> orders;
    for (long long n = 2; n <= bound; ++n) {
        for (int j = 0; j < V.m.size(); ++j) {
            if (V.m[j] != 0 && V.m[j] % n == 0) {
                orders.push_back(n);
                break;
            }
        }
    }
    if (orders.empty()) return CurvePoint();
    return random_torsion_of_order(rng, orders[rng() % orders.size()]);
}

}  // namespace sigmaor
