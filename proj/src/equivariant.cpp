#include "sigmaor/equivariant.hpp"

#include <cmath>

namespace sigmaor {

int ToyBundle::sign(long long n) const {
    auto it = orientation_signs.find(n);
    return it == orientation_signs.end() ? 1 : it->second;
}

std::vector<int> ToyBundle::fixed_indices(long long n) const {
    std::vector<int> out;
    for (int j = 0; j < m.size(); ++j) {
        if (n == 0 ? m[j] == 0 : m[j] % n == 0) out.push_back(j);
    }
    return out;
}

void ToyBundle::validate() const {
    lattice.require_member(m);
    if (int(chern_roots.size()) != rank()) {
        throw parameter_error("ToyBundle: one Chern root per rank");
    }
    for (const auto& x : chern_roots) {
        if (std::abs(x.constant_term()) != 0.0) {
            throw parameter_error("ToyBundle: Chern roots must have zero constant term");
        }
    }
    for (const auto& [n, s] : orientation_signs) {
        if (n < 0 || (s != 1 && s != -1)) {
            throw parameter_error("ToyBundle: orientation signs must be +-1 keyed by n >= 0");
        }
    }
}

ToyBundle ToyBundle::weyl_moved(const SignedPermutation& w) const {
    ToyBundle out = *this;
    out.m = w.apply(m);
    out.chern_roots = w.apply(chern_roots);
    return out;
}

ToyBundle ToyBundle::direct_sum(const ToyBundle& a, const ToyBundle& b) {
    ToyBundle out{LatticeWithForm::direct_sum(a.lattice, b.lattice), Cocharacter(a.rank() + b.rank()),
                  {}, a.orientation_signs};
    out.m.head(a.rank()) = a.m;
    out.m.tail(b.rank()) = b.m;
    out.chern_roots = a.chern_roots;
    out.chern_roots.insert(out.chern_roots.end(), b.chern_roots.begin(), b.chern_roots.end());
    for (const auto& [n, s] : b.orientation_signs) {
        out.orientation_signs[n] = out.sign(n) * s;
    }
    return out;
}

Jet F_eval(const ThetaFunction& theta, const Cocharacter& mbar, const LiftedPoint& lift,
           const CurveParams& p, Complex z, const std::vector<Jet>& roots, double tol) {
    if (mbar.size() != theta.rank() || int(roots.size()) != theta.rank()) {
        throw parameter_error("F_eval: rank mismatch");
    }
    theta.lattice().require_member(mbar);
    const long long n = lift.order();
    const Complex abar = lift.abar(p);
    const double kn = double(lift.k()) / double(n);
    const Eigen::VectorXi ihat = theta.level_adjoint(mbar);
    const long long phi = theta.level_phi(mbar);

    JetSpacePtr space = roots.empty() ? JetSpace::get(0, 0) : roots[0].space();
    Jet exponent = Jet::constant(space, Complex(double(phi)) * abar);
    std::vector<Jet> args;
    args.reserve(roots.size());
    for (int i = 0; i < theta.rank(); ++i) {
        Jet lin = roots[i] + double(mbar[i]) * z;
        exponent += Complex(double(ihat[i])) * lin;
        args.push_back(lin + double(mbar[i]) * abar);
    }
    return jet_exp(exponent * Complex(kn)) * theta.eval_jet(args, p, tol);
}

std::pair<Complex, Complex> F_lift_transform(const ThetaFunction& theta, const Cocharacter& mbar,
                                             const LiftedPoint& lift, const LiftedPoint& lift2,
                                             const CurveParams& p, Complex z,
                                             const std::vector<Jet>& roots, double tol) {
    if (!(lift.base() == lift2.base())) {
        throw parameter_error("F_lift_transform: lifts must share a base point");
    }
    const Jet f1 = F_eval(theta, mbar, lift, p, z, roots, tol);
    const Jet f2 = F_eval(theta, mbar, lift2, p, z, roots, tol);
    // The two jets differ by a scalar, but the constant term vanishes when
    // some mbar_i is zero; divide at the largest coefficient instead.
    Eigen::Index at = 0;
    f1.coeffs().cwiseAbs().maxCoeff(&at);
    // the jet may carry a legitimately tiny overall exponential scale
    if (std::abs(f1.coeffs()[at]) < 1e-250) {
        throw division_near_zero("F_lift_transform: reference value too close to zero");
    }
    const Complex ratio = f2.coeffs()[at] / f1.coeffs()[at];

    const long long n = lift.order();
    const double dt = double(lift2.shift_t() - lift.shift_t());
    const double ds = double(lift2.shift_s() - lift.shift_s());
    const double phi = double(theta.level_phi(mbar));
    const double kn = double(lift.k()) / double(n);
    // w(a)^{dt phi} with the extra s-shift root of unity; both are n-th roots
    // of unity so the product still is one.
    const Complex predicted =
        std::exp(phi * (-dt * lift.abar(p) + kTwoPiI * p.tau() * kn * dt + kTwoPiI * kn * ds));
    return {ratio, predicted};
}

EvaluatedClass theta_of_bundle(const ThetaFunction& theta, const ToyBundle& V,
                               const LiftedPoint& lift, const CurveParams& p,
                               const std::vector<Complex>& z_samples, double tol) {
    V.validate();
    if (!(V.lattice == theta.lattice())) {
        throw incompatible_lattices("theta_of_bundle: bundle and theta lattices differ");
    }
    EvaluatedClass out;
    out.z_samples = z_samples;
    out.provenance = "theta_of_bundle:" + theta.descriptor();
    out.values.reserve(z_samples.size());
    for (Complex z : z_samples) {
        out.values.push_back(F_eval(theta, V.m, lift, p, z, V.chern_roots, tol));
    }
    return out;
}

namespace {

// Shared prefactor exponent (k/n)[sum Ihat(m)_i (m_i z + x_i) + phi(m) abar]
// of F(sigma_d, m, abar), with the bundle's own gram as level data.
Jet sigma_prefactor_exponent(const ToyBundle& V, const LiftedPoint& lift, Complex z,
                             const CurveParams& p) {
    const long long n = lift.order();
    const double kn = double(lift.k()) / double(n);
    const Eigen::VectorXi ihat = V.lattice.adjoint(V.m);
    const long long phi = V.lattice.phi(V.m);
    JetSpacePtr space = V.chern_roots.empty() ? JetSpace::get(0, 0) : V.chern_roots[0].space();
    Jet e = Jet::constant(space, Complex(double(phi)) * lift.abar(p));
    for (int i = 0; i < V.rank(); ++i) {
        e += Complex(double(ihat[i])) * (V.chern_roots[i] + double(V.m[i]) * z);
    }
    return e * Complex(kn);
}

}  // namespace

Jet R_eval(const ToyBundle& V, const LiftedPoint& lift, Complex z, const CurveParams& p,
           double tol) {
    V.validate();
    const long long n = lift.order();
    const Complex abar = lift.abar(p);
    const long long ell = lift.ell();
    const long long kk = lift.k();
    JetSpacePtr space = V.chern_roots.empty() ? JetSpace::get(0, 0) : V.chern_roots[0].space();

    Jet acc = jet_exp(-sigma_prefactor_exponent(V, lift, z, p));
    acc *= Complex(double(V.sign(n)));
    for (int j = 0; j < V.rank(); ++j) {
        const long long mj = V.m[j];
        if (mj == 0) continue;  // sigma(x_j) cancels exactly between numerator and F
        const Jet lin = V.chern_roots[j] + double(mj) * z;
        if (mj % n == 0) {
            // sigma(w) / sigma(w + m_j abar) with m_j abar in the lattice:
            // the functional equation collapses the ratio to an exponential.
            const long long c = mj / n;
            const long long aj = c * ell;
            const long long bj = c * kk;
            Jet factor = jet_exp(lin * Complex(double(bj)));
            factor *= p.q_pow(double(bj) * double(bj) / 2.0);
            if ((aj + bj) % 2 != 0) factor *= Complex(-1.0);
            acc = acc * factor;
        } else {
            acc = acc * sigma_jet_arg(lin + double(mj) * abar, p, tol).inverse();
        }
    }
    return acc;
}

Jet R_eval_direct(const ToyBundle& V, const LiftedPoint& lift, Complex z, const CurveParams& p,
                  double tol) {
    V.validate();
    const long long n = lift.order();
    const Complex abar = lift.abar(p);
    Jet acc = jet_exp(-sigma_prefactor_exponent(V, lift, z, p));
    acc *= Complex(double(V.sign(n)));
    for (int j = 0; j < V.rank(); ++j) {
        const long long mj = V.m[j];
        if (mj == 0) continue;
        const Jet lin = V.chern_roots[j] + double(mj) * z;
        if (mj % n == 0) acc = acc * sigma_jet_arg(lin, p, tol);
        acc = acc * sigma_jet_arg(lin + double(mj) * abar, p, tol).inverse();
    }
    return acc;
}

}  // namespace sigmaor
