#include "sigmaor/suites.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>
#include <utility>

#include "sigmaor/equivariant.hpp"
#include "sigmaor/jet.hpp"
#include "sigmaor/lattice.hpp"
#include "sigmaor/sampling.hpp"
#include "sigmaor/theta.hpp"
#include "sigmaor/thom.hpp"

namespace sigmaor {

void RunConfig::validate() const {
    if (!(tau.imag() > 0.0)) throw parameter_error("config: Im tau must be positive");
    if (tol < 0.0) throw parameter_error("config: tol must be positive");
    if (trials < 0) throw parameter_error("config: trials must be >= 1");
    if (degree_cap < 2) throw parameter_error("config: degree cap must be >= 2");
    if (d < 1 || d > 6) throw parameter_error("config: d out of range");
    if (torsion_bound < 1) throw parameter_error("config: torsion bound must be >= 1");
    if (jobs < 1) throw parameter_error("config: jobs must be >= 1");
}

namespace {

double rel(Complex a, Complex b) {
    const double s = std::max({std::abs(a), std::abs(b), 1e-300});
    return std::abs(a - b) / s;
}

double relj(const Jet& a, const Jet& b) {
    const double s = std::max({a.max_abs(), b.max_abs(), 1e-300});
    return (a - b).max_abs() / s;
}

int uni(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Keep every sigma argument that gets inverted away from the zero set:
// integer multiples of z and of z + abar up to mult_bound.
bool well_conditioned(Complex z, Complex abar, int mult_bound, const CurveParams& p,
                      double margin) {
    for (int mult = 1; mult <= mult_bound; ++mult) {
        if (lattice_distance(double(mult) * z, p) < margin) return false;
        if (lattice_distance(double(mult) * (z + abar), p) < margin) return false;
    }
    return true;
}

// Torsion point of exact order n with both coordinates <= 1/2, which keeps
// all lifted exponents within double range.
CurvePoint small_torsion(std::mt19937_64& rng, long long n) {
    if (n == 1) return CurvePoint();
    for (;;) {
        CurvePoint a = random_torsion_of_order(rng, n);
        if (a.s() <= Rational(1, 2) && a.t() <= Rational(1, 2)) return a;
    }
}

CurvePoint small_special_point(std::mt19937_64& rng, const ToyBundle& V, long long bound) {
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
    return small_torsion(rng, orders[rng() % orders.size()]);
}

// ------------------------------- suites ------------------------------------

double trial_sigma_laws(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    double r = 0.0;

    // Normalization sigma(z) = z + o(z^2) from the jet at 0.
    Jet at0 = sigma_jet(0.0, p, 2);
    r = std::max(r, std::abs(at0.coeffs()[0]));
    r = std::max(r, std::abs(at0.coeffs()[1] - Complex(1.0)));
    r = std::max(r, std::abs(at0.coeffs()[2]));  // odd, so no z^2 term

    const Complex z = random_z_general(rng, p);
    const int n = uni(rng, -3, 3);
    const Complex s = sigma(z, p);
    r = std::max(r, rel(sigma(-z, p), -s));
    const Complex lhs = sigma(z + kTwoPiI * p.tau() * double(n), p);
    const Complex rhs =
        (n % 2 ? -1.0 : 1.0) * std::exp(-double(n) * z) * p.q_pow(-0.5 * n * n) * s;
    return std::max(r, rel(lhs, rhs));
}

double trial_theta_level(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int d = uni(rng, 1, std::min(cfg.d, 3));
    ThetaFunction theta = ThetaFunction::sigma_d(d);
    Cocharacter m = theta.lattice().random_member(rng, 3);
    SignedPermutation w = theta.lattice().random_element(rng);
    for (int tries = 0; tries < 100; ++tries) {
        Eigen::VectorXcd z(d);
        for (int i = 0; i < d; ++i) z[i] = random_z_general(rng, p, 1e-2);
        try {
            return verify_level(theta, m, w, {z}, p);
        } catch (const sample_at_zero&) {
        }
    }
    throw parameter_error("theta_level: could not find a well-conditioned sample");
}

double trial_lattice(std::mt19937_64& rng, const RunConfig& cfg) {
    const int d = uni(rng, 1, 4);
    LatticeWithForm L = LatticeWithForm::spin(2 * d);
    const Cocharacter a = L.random_member(rng, 4);
    const Cocharacter b = L.random_member(rng, 4);
    const SignedPermutation w = L.random_element(rng);
    const int n = uni(rng, 1, 6);
    const int c = uni(rng, -3, 3);

    bool ok = L.phi(a + b) == L.phi(a) + L.pairing(a, b) + L.phi(b);
    ok = ok && L.phi(Cocharacter(c * a)) == (long long)(c) * c * L.phi(a);
    ok = ok && L.phi(w.apply(a)) == L.phi(a);
    ok = ok && L.pairing(w.apply(a), w.apply(b)) == L.pairing(a, b);
    const Cocharacter delta = L.random_member(rng, 2);
    ok = ok && (L.phi(a + n * delta) - L.phi(a)) % n == 0;

    // The quadratic expansion in one extra variable z, coefficient by
    // coefficient against phi(m) z^2 + Ihat(m)(x) z + x^T G x / 2.
    JetSpacePtr rsp = JetSpace::get(d, cfg.degree_cap);
    JetSpacePtr zsp = JetSpace::get(d + 1, cfg.degree_cap);
    std::vector<Jet> roots = random_roots(rng, rsp, d);
    std::vector<Jet> lifted;
    for (const auto& x : roots) lifted.push_back(promote(x, zsp));
    Jet z = Jet::variable(zsp, d);
    Jet lhs = borel_c2(L, a, lifted, z);
    Jet rhs = z * z * Complex(double(L.phi(a)));
    const Eigen::VectorXi ih = L.adjoint(a);
    Jet lin(zsp);
    for (int i = 0; i < d; ++i) lin += lifted[i] * Complex(double(ih[i]));
    rhs += z * lin;
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const int g = L.gram()(i, j);
            if (g != 0) rhs += lifted[i] * lifted[j] * Complex(0.5 * double(g));
        }
    }
    ok = ok && (lhs - rhs).max_abs() == 0.0;
    return ok ? 0.0 : 1.0;
}

double trial_F_lemmas(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int d = uni(rng, 1, std::min(cfg.d, 3));
    ThetaFunction theta = ThetaFunction::sigma_d(d);
    JetSpacePtr sp = JetSpace::get(d, cfg.degree_cap);
    std::vector<Jet> roots;
    for (bool again = true; again;) {
        roots = random_roots(rng, sp, d);
        again = false;
        for (const Jet& x : roots) again = again || x.max_abs() == 0.0;
    }
    Cocharacter m = theta.lattice().random_member(rng, 2);
    const long long n = uni(rng, 1, int(cfg.torsion_bound));
    const CurvePoint a = small_torsion(rng, n);
    const LiftedPoint lift(a, 0, 0);
    const Complex abar = lift.abar(p);

    // Second reduction lift m + n*Delta (Delta in the lattice, small).
    Cocharacter delta = theta.lattice().random_member(rng, 1);
    if (d == 1 && delta[0] == 0) delta[0] = (rng() & 1) ? 2 : -2;
    const Cocharacter m2 = m + int(n) * delta;
    const SignedPermutation wmod = theta.lattice().stabilizer_mod_sample(m, n, rng, 1)[0];
    const Cocharacter m3 = wmod.apply(m);
    const SignedPermutation wany = theta.lattice().random_element(rng);

    Complex z;
    for (int tries = 0;; ++tries) {
        if (tries >= 200) throw parameter_error("F_lemmas: conditioning failed");
        z = random_z_annulus(rng, 0.05, 0.4);
        bool ok = true;
        for (const Cocharacter* mm : {&std::as_const(m), &m2, &m3}) {
            for (int i = 0; i < d; ++i) {
                // m_i = 0 arguments sit exactly on the lattice by construction
                // and evaluate through the jet of sigma at its simple zero
                if (m[i] == 0) continue;
                const Complex arg = double(m[i]) * z + double((*mm)[i]) * abar;
                if (lattice_distance(arg, p) < 1e-2) ok = false;
            }
        }
        if (ok) break;
    }

    // Changing the reduction lift moves only the alpha-powers; the evaluation
    // point stays fixed, so the variant roots absorb the z-coefficient shift.
    auto compensated = [&](const Cocharacter& mv) {
        std::vector<Jet> out = roots;
        for (int i = 0; i < d; ++i) out[i] += Complex(double(m[i] - mv[i])) * z;
        return out;
    };

    double r = 0.0;
    const Jet base = F_eval(theta, m, lift, p, z, roots);
    r = std::max(r, relj(F_eval(theta, m2, lift, p, z, compensated(m2)), base));
    r = std::max(r, relj(F_eval(theta, m3, lift, p, z, compensated(m3)), base));
    r = std::max(r, relj(F_eval(theta, wany.apply(m), lift, p, z, wany.apply(roots)), base));

    // Change of lift: ratio of constant terms against the predicted root of
    // unity; for pure t-shifts that root is the Weyl-pairing power.
    const int delta_t = uni(rng, 1, 2);
    const LiftedPoint lift2(a, 0, delta_t);
    auto [ratio, predicted] = F_lift_transform(theta, m, lift, lift2, p, z, roots);
    r = std::max(r, rel(ratio, predicted));
    Complex root_pow = 1.0;
    const long long expo = delta_t * theta.level_phi(m);
    const Complex wp = weil_pairing(lift, p);
    for (long long i = 0; i < ((expo % n) + n) % n; ++i) root_pow *= wp;
    r = std::max(r, rel(predicted, root_pow));
    Complex unit = 1.0;
    for (long long i = 0; i < n; ++i) unit *= predicted;
    return std::max(r, std::abs(unit - 1.0));
}

double trial_weil(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    double r = 0.0;
    for (long long n = 1; n <= 12; ++n) {
        for (long long ps = 0; ps < n; ++ps) {
            for (long long pt = 0; pt < n; ++pt) {
                CurvePoint a(Rational(ps, n), Rational(pt, n));
                const LiftedPoint l0(a, 0, 0);
                const Complex w = weil_pairing(l0, p);
                Complex pw = 1.0;
                for (long long i = 0; i < a.order(); ++i) pw *= w;
                r = std::max(r, std::abs(pw - 1.0));
                const LiftedPoint l1(a, uni(rng, -2, 2), uni(rng, -2, 2));
                r = std::max(r, std::abs(w - weil_pairing(l1, p)));
            }
        }
    }
    const Complex h1 = weil_pairing(LiftedPoint(CurvePoint(Rational(1, 2), 0), 0, 0), p);
    const Complex h2 = weil_pairing(LiftedPoint(CurvePoint(0, Rational(1, 2)), 0, 0), p);
    r = std::max(r, std::abs(h1 - Complex(-1.0)));
    return std::max(r, std::abs(h2 - Complex(1.0)));
}

double trial_R_unit(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int d = uni(rng, 1, std::min(cfg.d, 3));
    JetSpacePtr sp = JetSpace::get(d, cfg.degree_cap);
    ToyBundle V{LatticeWithForm::spin(2 * d), Cocharacter(), random_roots(rng, sp, d), {}};
    do {
        V.m = V.lattice.random_member(rng, 2);
    } while (V.lattice.phi_twice(V.m) > 8);

    const long long n = uni(rng, 2, int(std::min<long long>(3, std::max<long long>(2, cfg.torsion_bound))));
    CurvePoint a;
    do {
        a = CurvePoint(Rational(uni(rng, 0, int(n) - 1), n), Rational(uni(rng, 0, 1), n));
    } while (a.order() != n);
    const LiftedPoint lift(a, 0, 0);

    double r = 0.0;
    // The trivial point gives the constant 1 exactly.
    Jet one = R_eval(V, LiftedPoint(CurvePoint(), 0, 0), 0.0, p);
    r = std::max(r, (one - Jet::constant(sp, 1.0)).max_abs());

    // Unit bound on the disk and at the center.
    const Complex z = random_z_annulus(rng, 0.01, 0.1);
    if (std::abs(R_eval(V, lift, z, p).constant_term()) <= 1e-6) r = std::max(r, 1.0);
    if (std::abs(R_eval(V, lift, 0.0, p).constant_term()) <= 1e-6) r = std::max(r, 1.0);

    // Closed form against the direct quotient at a generic point.
    for (int tries = 0; tries < 200; ++tries) {
        const Complex zg = random_z_general(rng, p, 1e-2);
        if (!well_conditioned(zg, lift.abar(p), 2, p, 1e-2)) continue;
        return std::max(r, relj(R_eval(V, lift, zg, p), R_eval_direct(V, lift, zg, p)));
    }
    throw parameter_error("R_unit: conditioning failed");
}

double trial_cocycle(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int d = uni(rng, 1, std::min(cfg.d, 3));
    JetSpacePtr sp = JetSpace::get(d, cfg.degree_cap);
    ToyBundle V = random_bundle(rng, d, sp, 3, 12);

    auto special_for = [&V](const CurvePoint& x) {
        const long long n = x.order();
        for (int j = 0; j < V.m.size(); ++j) {
            if (V.m[j] != 0 && V.m[j] % n == 0) return true;
        }
        return false;
    };
    auto ordinary = [&]() {
        for (int tries = 0; tries < 400; ++tries) {
            CurvePoint x = random_torsion(rng, 12);
            if (!special_for(x)) return x;
        }
        throw parameter_error("cocycle: no ordinary point found");
    };

    for (int attempt = 0; attempt < 60; ++attempt) {
        CurvePoint pts[3] = {ordinary(), ordinary(), ordinary()};
        const int pos = uni(rng, 0, 3);
        if (pos < 3) pts[pos] = small_special_point(rng, V, cfg.torsion_bound);
        std::vector<Complex> zs = {random_z_annulus(rng, 0.01, 0.05),
                                   random_z_annulus(rng, 0.01, 0.05)};
        try {
            return cocycle_check(V, pts[0], pts[1], pts[2], zs, p);
        } catch (const not_a_unit&) {
        }
    }
    throw parameter_error("cocycle: conditioning failed");
}

double trial_gamma_thm8(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int k = 1 + int(rng() & 1);
    const int dmax = k == 1 ? std::min(cfg.d, 3) : std::min(std::max(cfg.d / 2, 1), 2);
    const int d = uni(rng, 1, dmax);
    JetSpacePtr sp = JetSpace::get(d, cfg.degree_cap);
    TwistedSectionData data = random_twisted_data(rng, d, sp, k, 3);
    const CurvePoint a = small_special_point(rng, data.V, cfg.torsion_bound);
    const LiftedPoint lift(a, 0, 0);
    const Complex abar = lift.abar(p);
    double r = 0.0;

    // Lattice invariance of the ordinary section.
    for (int tries = 0;; ++tries) {
        if (tries >= 200) throw parameter_error("gamma_thm8: conditioning failed");
        const Complex z0 = random_z_general(rng, p, 1e-2);
        if (!well_conditioned(z0, 0.0, 6, p, 1e-2)) continue;
        const Jet g0 =
            gamma_ordinary_thm8(data.V, data.theta_prime, data.m_prime, data.roots_prime, z0, p);
        r = std::max(r, relj(gamma_ordinary_thm8(data.V, data.theta_prime, data.m_prime,
                                                 data.roots_prime, z0 + kTwoPiI, p),
                             g0));
        r = std::max(r, relj(gamma_ordinary_thm8(data.V, data.theta_prime, data.m_prime,
                                                 data.roots_prime, z0 + kTwoPiI * p.tau(), p),
                             g0));
        break;
    }

    // Gluing across the special chart, plus lift-independence there.
    std::vector<Complex> zs;
    for (int tries = 0; int(zs.size()) < 2; ++tries) {
        if (tries >= 400) throw parameter_error("gamma_thm8: conditioning failed");
        const Complex z = random_z_annulus(rng, 0.05, 0.2);
        if (well_conditioned(z, abar, 6, p, 1e-3)) zs.push_back(z);
    }
    r = std::max(r, gluing_check_thm8(data.V, data.theta_prime, data.m_prime, data.roots_prime,
                                      lift, zs, p));
    const LiftedPoint lift2(a, 0, 1);
    r = std::max(r, relj(gamma_special_thm8(data.V, data.theta_prime, data.m_prime,
                                            data.roots_prime, lift, zs[0], p),
                         gamma_special_thm8(data.V, data.theta_prime, data.m_prime,
                                            data.roots_prime, lift2, zs[0], p)));
    return r;
}

double trial_gamma_thm9(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int d = uni(rng, 1, std::min(cfg.d, 3));
    JetSpacePtr sp = JetSpace::get(d, cfg.degree_cap);
    VirtualPair P = random_pair(rng, d, sp, 3, (rng() & 1) != 0);
    const CurvePoint a = small_special_point(rng, P.V0, cfg.torsion_bound);
    const LiftedPoint lift(a, 0, 0);
    const Complex abar = lift.abar(p);

    std::vector<Complex> zs;
    for (int tries = 0; int(zs.size()) < 2; ++tries) {
        if (tries >= 400) throw parameter_error("gamma_thm9: conditioning failed");
        const Complex z = random_z_annulus(rng, 0.05, 0.2);
        if (well_conditioned(z, abar, 6, p, 1e-3)) zs.push_back(z);
    }

    double r = gluing_check_thm9(P, lift, zs, p);
    const Jet gamma = gamma_special_thm9(P, lift, zs[0], p);
    if (std::abs(gamma.constant_term()) <= 1e-6) r = std::max(r, 1.0);
    const LiftedPoint lift2(a, 0, 1);
    r = std::max(r, relj(gamma, gamma_special_thm9(P, lift2, zs[0], p)));

    // Stability and exponentiality at the sampled chart.
    ToyBundle W = random_bundle(rng, 1, sp, 2);
    VirtualPair P2 = random_pair(rng, d, sp, 2, false);
    std::vector<Jet> identity;
    for (int v = 0; v < sp->vars(); ++v) identity.push_back(Jet::variable(sp, v));
    LawReport laws = law_checks(P, P2, W, lift, {zs[0]}, identity, p);
    r = std::max(r, laws.stability);
    return std::max(r, laws.exponential);
}

double trial_laws(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int d = uni(rng, 1, std::min(cfg.d, 3));
    JetSpacePtr sp = JetSpace::get(d, cfg.degree_cap);
    VirtualPair P = random_pair(rng, d, sp, 3, false);
    VirtualPair P2 = random_pair(rng, d, sp, 2, false);
    ToyBundle W = random_bundle(rng, 1, sp, 2);
    const CurvePoint a = small_special_point(rng, P.V0, cfg.torsion_bound);
    const LiftedPoint lift(a, 0, 0);
    const Complex abar = lift.abar(p);

    std::vector<Jet> images;
    for (int v = 0; v < d; ++v) {
        Jet img(sp);
        for (int u = 0; u < d; ++u) {
            img += Jet::variable(sp, u) * Complex(uni(rng, -2, 2) * 0.25);
        }
        images.push_back(std::move(img));
    }

    for (int tries = 0; tries < 400; ++tries) {
        const Complex z = random_z_annulus(rng, 0.05, 0.2);
        if (!well_conditioned(z, abar, 6, p, 1e-3)) continue;
        LawReport laws = law_checks(P, P2, W, lift, {z}, images, p);
        return std::max({laws.stability, laws.exponential, laws.naturality});
    }
    throw parameter_error("laws: conditioning failed");
}

double trial_transfer(std::mt19937_64& rng, const RunConfig& cfg) {
    CurveParams p(cfg.tau);
    const int d = uni(rng, 1, std::min(cfg.d, 3));
    ThetaFunction theta = ThetaFunction::sigma_d(d);
    JetSpacePtr sp = JetSpace::get(d, cfg.degree_cap);
    std::vector<Jet> roots = random_roots(rng, sp, d);
    Cocharacter m = theta.lattice().random_member(rng, 3);
    const CurvePoint a = small_torsion(rng, uni(rng, 1, int(cfg.torsion_bound)));
    const LiftedPoint lift = random_lift(rng, a, 1);
    const Complex abar = lift.abar(p);

    std::vector<Complex> zs;
    for (int tries = 0; int(zs.size()) < 2; ++tries) {
        if (tries >= 400) throw parameter_error("transfer: conditioning failed");
        const Complex z = random_z_general(rng, p, 1e-2);
        if (well_conditioned(z, abar, 3, p, 1e-3)) zs.push_back(z);
    }
    return transfer_check(theta, m, roots, lift, zs, p);
}

// ----------------------------- orchestration -------------------------------

struct SuiteSpec {
    int trials;
    double tol;
    double (*fn)(std::mt19937_64&, const RunConfig&);
};

const std::map<std::string, SuiteSpec>& registry() {
    static const std::map<std::string, SuiteSpec> reg = {
        {"sigma_laws", {500, 1e-9, trial_sigma_laws}},
        {"theta_level", {200, 1e-9, trial_theta_level}},
        {"lattice_identities", {1000, 1e-9, trial_lattice}},
        {"F_lemmas", {200, 1e-9, trial_F_lemmas}},
        {"weil", {4, 1e-12, trial_weil}},
        {"R_unit", {100, 1e-9, trial_R_unit}},
        {"cocycle", {100, 1e-9, trial_cocycle}},
        {"gamma_thm8", {100, 1e-8, trial_gamma_thm8}},
        {"gamma_thm9", {100, 1e-8, trial_gamma_thm9}},
        {"laws", {100, 1e-8, trial_laws}},
        {"transfer", {100, 1e-9, trial_transfer}},
    };
    return reg;
}

double run_trials(const std::string& name, const RunConfig& cfg, int trials,
                  double (*fn)(std::mt19937_64&, const RunConfig&)) {
    const int jobs = std::min(cfg.jobs, trials);
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr eptr;
    std::mutex emu;
    std::vector<double> worst(std::max(jobs, 1), 0.0);

    auto worker = [&](int wi) {
        for (;;) {
            const int t = next.fetch_add(1);
            if (t >= trials || failed.load()) return;
            auto rng = trial_rng(cfg.seed, name, std::uint64_t(t));
            try {
                worst[wi] = std::max(worst[wi], fn(rng, cfg));
            } catch (...) {
                std::lock_guard<std::mutex> lock(emu);
                if (!eptr) eptr = std::current_exception();
                failed = true;
            }
        }
    };
    if (jobs <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }
    if (eptr) std::rethrow_exception(eptr);
    double out = 0.0;
    for (double w : worst) out = std::max(out, w);
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "sigma_laws", "theta_level", "lattice_identities", "F_lemmas", "weil", "R_unit",
        "cocycle",    "gamma_thm8",  "gamma_thm9",         "laws",     "transfer"};
    return names;
}

bool is_suite_name(const std::string& name) {
    return registry().count(name) != 0;
}

SuiteResult run_suite(const std::string& name, const RunConfig& cfg) {
    cfg.validate();
    auto it = registry().find(name);
    if (it == registry().end()) throw parameter_error("unknown suite: " + name);
    const SuiteSpec& spec = it->second;

    SuiteResult result;
    result.name = name;
    result.trials = cfg.trials > 0 ? cfg.trials : spec.trials;
    result.tol = cfg.tol > 0.0 ? cfg.tol : spec.tol;
    const auto start = std::chrono::steady_clock::now();
    result.max_residual = run_trials(name, cfg, result.trials, spec.fn);
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.pass = result.max_residual <= result.tol;
    return result;
}

nlohmann::json run_report(const std::vector<std::string>& names, const RunConfig& cfg) {
    std::vector<std::string> expanded;
    for (const auto& n : names) {
        if (n == "all") {
            expanded.insert(expanded.end(), suite_names().begin(), suite_names().end());
        } else {
            expanded.push_back(n);
        }
    }
    nlohmann::json suites = nlohmann::json::array();
    bool all_pass = true;
    for (const auto& n : expanded) {
        SuiteResult r = run_suite(n, cfg);
        all_pass = all_pass && r.pass;
        suites.push_back({{"name", r.name},
                          {"trials", r.trials},
                          {"max_residual", r.max_residual},
                          {"tol", r.tol},
                          {"pass", r.pass},
                          {"seconds", r.seconds}});
    }
    return nlohmann::json{
        {"schema_version", "1"},
        {"config",
         {{"tau_re", cfg.tau.real()},
          {"tau_im", cfg.tau.imag()},
          {"d", cfg.d},
          {"torsion_bound", cfg.torsion_bound},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"tol", cfg.tol},
          {"degree_cap", cfg.degree_cap},
          {"jobs", cfg.jobs}}},
        {"suites", suites},
        {"all_pass", all_pass}};
}

}  // namespace sigmaor
