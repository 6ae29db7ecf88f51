#include "sigmaor/thom.hpp"

#include <algorithm>
#include <numeric>

namespace sigmaor {

void VirtualPair::validate() const {
    V0.validate();
    V1.validate();
    if (V0.rank() > 0 && V1.rank() > 0 &&
        V0.chern_roots[0].space() != V1.chern_roots[0].space()) {
        throw parameter_error("VirtualPair: slots must share one jet variable set");
    }
}

namespace {

// Adjoin z as one extra (last) nilpotent variable over the roots' space.
JetSpacePtr with_z(const std::vector<Jet>& roots) {
    const int vars = roots.empty() ? 0 : roots[0].vars();
    const int cap = roots.empty() ? 2 : roots[0].cap();
    return JetSpace::get(vars + 1, cap);
}

double rel_residual(const Jet& a, const Jet& b) {
    const double scale = std::max({a.max_abs(), b.max_abs(), 1e-300});
    return (a - b).max_abs() / scale;
}

bool is_special(const ToyBundle& V, long long n) {
    for (int j = 0; j < V.m.size(); ++j) {
        if (V.m[j] != 0 && V.m[j] % n == 0) return true;
    }
    return false;
}

}  // namespace

Jet pair_c2(const ToyBundle& V) {
    JetSpacePtr sp = with_z(V.chern_roots);
    Jet z = Jet::variable(sp, sp->vars() - 1);
    std::vector<Jet> roots;
    roots.reserve(V.chern_roots.size());
    for (const auto& x : V.chern_roots) roots.push_back(promote(x, sp));
    return borel_c2(V.lattice, V.m, roots, z);
}

Jet theta_level_c2(const ThetaFunction& theta, const Cocharacter& m,
                   const std::vector<Jet>& roots) {
    if (m.size() != theta.rank() || int(roots.size()) != theta.rank()) {
        throw parameter_error("theta_level_c2: rank mismatch");
    }
    JetSpacePtr sp = with_z(roots);
    Jet z = Jet::variable(sp, sp->vars() - 1);
    std::vector<Jet> lin;
    lin.reserve(roots.size());
    for (int i = 0; i < theta.rank(); ++i) {
        lin.push_back(promote(roots[i], sp) + z * Complex(double(m[i])));
    }
    const Eigen::MatrixXi& g = theta.level_gram();
    Jet acc(sp);
    for (int i = 0; i < theta.rank(); ++i) {
        for (int j = 0; j < theta.rank(); ++j) {
            if (g(i, j) != 0) acc += lin[i] * lin[j] * Complex(0.5 * double(g(i, j)));
        }
    }
    return acc;
}

bool c2_matched(const VirtualPair& P, double tol) {
    P.validate();
    return rel_residual(pair_c2(P.V0), pair_c2(P.V1)) <= tol;
}

bool c2_matched_theta(const ToyBundle& V, const ThetaFunction& theta_prime,
                      const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                      double tol) {
    return rel_residual(pair_c2(V), theta_level_c2(theta_prime, m_prime, roots_prime)) <= tol;
}

std::vector<CurvePoint> special_points(const ToyBundle& V, long long bound) {
    std::vector<CurvePoint> out = {CurvePoint()};
    auto seen = [&out](const CurvePoint& a) {
        return std::any_of(out.begin(), out.end(), [&a](const CurvePoint& b) { return a == b; });
    };
    for (long long n = 2; n <= bound; ++n) {
        if (!is_special(V, n)) continue;
        for (long long ps = 0; ps < n; ++ps) {
            for (long long pt = 0; pt < n; ++pt) {
                CurvePoint a(Rational(ps, n), Rational(pt, n));
                if (a.order() != n || seen(a)) continue;
                out.push_back(a);
            }
        }
    }
    return out;
}

Jet euler_ratio_e(const ToyBundle& V, long long n, Complex z, const CurveParams& p, double tol) {
    if (n <= 0) throw parameter_error("euler_ratio_e: n must be positive");
    V.validate();
    JetSpacePtr sp = V.chern_roots.empty() ? JetSpace::get(0, 0) : V.chern_roots[0].space();
    Jet acc = Jet::constant(sp, Complex(double(V.sign(n) * V.sign(0))));
    for (int j = 0; j < V.rank(); ++j) {
        const long long mj = V.m[j];
        if (mj == 0 || mj % n != 0) continue;
        if (lattice_distance(double(mj) * z, p) < 1e-6) {
            throw not_a_unit("euler_ratio_e: m_j z on the lattice, factor vanishes");
        }
        acc = acc * sigma_jet_arg(V.chern_roots[j] + double(mj) * z, p, tol);
    }
    return acc;
}

double cocycle_check(const ToyBundle& V, const CurvePoint& a, const CurvePoint& b,
                     const CurvePoint& c, const std::vector<Complex>& z_samples,
                     const CurveParams& p, double tol) {
    const Complex abar = LiftedPoint(a, 0, 0).abar(p);
    const Complex bbar = LiftedPoint(b, 0, 0).abar(p);
    const Complex cbar = LiftedPoint(c, 0, 0).abar(p);
    int specials = int(is_special(V, a.order())) + int(is_special(V, b.order())) +
                   int(is_special(V, c.order()));
    if (specials > 1) throw parameter_error("cocycle_check: at most one special point");

    // Transition factor between the charts at x and y, as a germ at x:
    // the ratio of signed Euler products of the two fixed sub-bundles.
    // When only y is special, antisymmetry defines it from the (y, x) germ.
    auto factor = [&](const CurvePoint& x, Complex xbar, const CurvePoint& y, Complex ybar,
                      Complex zbar, auto&& self) -> Jet {
        if (!is_special(V, y.order())) {
            Jet e = euler_ratio_e(V, x.order(), zbar, p, tol);
            return e * Complex(double(V.sign(0) * V.sign(y.order())));
        }
        return self(y, ybar, x, xbar, zbar + xbar - ybar, self).inverse();
    };

    double worst = 0.0;
    for (Complex zbar : z_samples) {
        Jet lhs = factor(a, abar, b, bbar, zbar + cbar - abar, factor) *
                  factor(b, bbar, c, cbar, zbar + cbar - bbar, factor);
        Jet rhs = factor(a, abar, c, cbar, zbar + cbar - abar, factor);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    return worst;
}

Jet gamma_ordinary_thm8(const ToyBundle& V, const ThetaFunction& theta_prime,
                        const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                        Complex z, const CurveParams& p, double tol) {
    V.validate();
    if (!c2_matched_theta(V, theta_prime, m_prime, roots_prime)) {
        throw hypothesis_violated("gamma_ordinary_thm8: degree-four classes do not match");
    }
    std::vector<Jet> args;
    args.reserve(roots_prime.size());
    for (int i = 0; i < theta_prime.rank(); ++i) {
        args.push_back(roots_prime[i] + double(m_prime[i]) * z);
    }
    Jet acc = theta_prime.eval_jet(args, p, tol) * Complex(double(V.sign(0)));
    for (int j = 0; j < V.rank(); ++j) {
        if (V.m[j] == 0) continue;
        acc = acc * sigma_jet_arg(V.chern_roots[j] + double(V.m[j]) * z, p, tol).inverse();
    }
    return acc;
}

Jet gamma_ordinary_thm9(const VirtualPair& P, Complex z, const CurveParams& p, double tol) {
    P.validate();
    if (!c2_matched(P)) {
        throw hypothesis_violated("gamma_ordinary_thm9: degree-four classes do not match");
    }
    JetSpacePtr sp =
        P.V0.chern_roots.empty() ? JetSpace::get(0, 0) : P.V0.chern_roots[0].space();
    Jet acc = Jet::constant(sp, Complex(double(P.V1.sign(0) * P.V0.sign(0))));
    for (int j = 0; j < P.V0.rank(); ++j) {
        if (P.V0.m[j] == 0) continue;
        acc = acc * sigma_jet_arg(P.V0.chern_roots[j] + double(P.V0.m[j]) * z, p, tol);
    }
    for (int j = 0; j < P.V1.rank(); ++j) {
        if (P.V1.m[j] == 0) continue;
        acc = acc * sigma_jet_arg(P.V1.chern_roots[j] + double(P.V1.m[j]) * z, p, tol).inverse();
    }
    return acc;
}

Jet gamma_special_thm8(const ToyBundle& V, const ThetaFunction& theta_prime,
                       const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                       const LiftedPoint& lift, Complex z, const CurveParams& p, double tol) {
    if (!c2_matched_theta(V, theta_prime, m_prime, roots_prime)) {
        throw hypothesis_violated("gamma_special_thm8: degree-four classes do not match");
    }
    return R_eval(V, lift, z, p, tol) *
           F_eval(theta_prime, m_prime, lift, p, z, roots_prime, tol);
}

Jet gamma_special_thm9(const VirtualPair& P, const LiftedPoint& lift, Complex z,
                       const CurveParams& p, double tol) {
    P.validate();
    if (!c2_matched(P)) {
        throw hypothesis_violated("gamma_special_thm9: degree-four classes do not match");
    }
    return R_eval(P.V1, lift, z, p, tol) * R_eval(P.V0, lift, z, p, tol).inverse();
}

double gluing_check_thm8(const ToyBundle& V, const ThetaFunction& theta_prime,
                         const Cocharacter& m_prime, const std::vector<Jet>& roots_prime,
                         const LiftedPoint& lift, const std::vector<Complex>& z_samples,
                         const CurveParams& p, double tol) {
    const long long n = lift.order();
    const Complex abar = lift.abar(p);
    double worst = 0.0;
    for (Complex z : z_samples) {
        Jet lhs = euler_ratio_e(V, n, z, p, tol).inverse() *
                  gamma_special_thm8(V, theta_prime, m_prime, roots_prime, lift, z, p, tol);
        Jet rhs = gamma_ordinary_thm8(V, theta_prime, m_prime, roots_prime, z + abar, p, tol);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    return worst;
}

double gluing_check_thm9(const VirtualPair& P, const LiftedPoint& lift,
                         const std::vector<Complex>& z_samples, const CurveParams& p,
                         double tol) {
    const long long n = lift.order();
    const Complex abar = lift.abar(p);
    double worst = 0.0;
    for (Complex z : z_samples) {
        Jet lhs = euler_ratio_e(P.V0, n, z, p, tol) *
                  euler_ratio_e(P.V1, n, z, p, tol).inverse() *
                  gamma_special_thm9(P, lift, z, p, tol);
        Jet rhs = gamma_ordinary_thm9(P, z + abar, p, tol);
        worst = std::max(worst, rel_residual(lhs, rhs));
    }
    return worst;
}

LawReport law_checks(const VirtualPair& P, const VirtualPair& P2, const ToyBundle& W,
                     const LiftedPoint& lift, const std::vector<Complex>& z_samples,
                     const std::vector<Jet>& nat_images, const CurveParams& p, double tol) {
    LawReport report;
    VirtualPair padded{ToyBundle::direct_sum(P.V0, W), ToyBundle::direct_sum(P.V1, W)};
    VirtualPair summed{ToyBundle::direct_sum(P.V0, P2.V0), ToyBundle::direct_sum(P.V1, P2.V1)};
    auto subst_bundle = [&](const ToyBundle& V) {
        ToyBundle out = V;
        for (auto& x : out.chern_roots) x = substitute(x, nat_images);
        return out;
    };
    VirtualPair renamed{subst_bundle(P.V0), subst_bundle(P.V1)};
    for (Complex z : z_samples) {
        Jet base = gamma_special_thm9(P, lift, z, p, tol);
        report.stability = std::max(
            report.stability, rel_residual(gamma_special_thm9(padded, lift, z, p, tol), base));
        report.exponential = std::max(
            report.exponential,
            rel_residual(gamma_special_thm9(summed, lift, z, p, tol),
                         base * gamma_special_thm9(P2, lift, z, p, tol)));
        report.naturality = std::max(
            report.naturality, rel_residual(gamma_special_thm9(renamed, lift, z, p, tol),
                                            substitute(base, nat_images)));
    }
    return report;
}

double transfer_check(const ThetaFunction& theta, const Cocharacter& m,
                      const std::vector<Jet>& roots, const LiftedPoint& lift,
                      const std::vector<Complex>& z_samples, const CurveParams& p, double tol) {
    if (m.size() != theta.rank() || int(roots.size()) != theta.rank()) {
        throw parameter_error("transfer_check: rank mismatch");
    }
    const Complex abar = lift.abar(p);
    Eigen::VectorXcd shift(theta.rank());
    for (int i = 0; i < theta.rank(); ++i) shift[i] = double(m[i]) * abar;
    ThetaFunction translated = ThetaFunction::translate(theta, shift);
    double worst = 0.0;
    for (Complex z : z_samples) {
        std::vector<Jet> lhs_args, rhs_args;
        for (int i = 0; i < theta.rank(); ++i) {
            lhs_args.push_back(roots[i] + double(m[i]) * (z + abar));
            rhs_args.push_back(roots[i] + double(m[i]) * z);
        }
        worst = std::max(worst, rel_residual(theta.eval_jet(lhs_args, p, tol),
                                             translated.eval_jet(rhs_args, p, tol)));
    }
    return worst;
}

}  // namespace sigmaor
