#pragma once

// The Weierstrass sigma function as a q-product, its jet-valued evaluation,
// the rank-d product sigma_d, and the closed family of theta functions with
// declared level data (products, integer powers, fixed translations).

#include <memory>
#include <string>
#include <vector>

#include "sigmaor/curve.hpp"
#include "sigmaor/jet.hpp"
#include "sigmaor/lattice.hpp"

namespace sigmaor {

/// Number of q-product terms needed so the dropped tail is below tol for
/// arguments with |u|, |u|^{-1} up to u_scale.
int sigma_terms(double tol, const CurveParams& p, double u_scale);

/// sigma(z) = (u^{1/2} - u^{-1/2}) prod_{n>=1} (1-q^n u)(1-q^n u^{-1})/(1-q^n)^2
/// with u^r = e^{rz}; vanishes exactly on the lattice.
Complex sigma(Complex z, const CurveParams& p, double tol = 1e-14);
Complex sigma_with_terms(Complex z, const CurveParams& p, int terms);

/// sigma of a jet-valued argument (same product, exp of jets).
Jet sigma_jet_arg(const Jet& z, const CurveParams& p, double tol = 1e-14);

/// Univariate jet of sigma at z0 to order D (Taylor data for composition).
Jet sigma_jet(Complex z0, const CurveParams& p, int order);

class ThetaFunction {
  public:
    /// sigma_d(z) = prod_i sigma(z_i); level-c2 theta for the spin(2d) preset.
    static ThetaFunction sigma_d(int d);
    /// Empty product: the constant 1 of rank 0 and level 0.
    static ThetaFunction one();
    static ThetaFunction product(const std::vector<ThetaFunction>& parts);
    static ThetaFunction power(const ThetaFunction& t, int k);
    static ThetaFunction translate(const ThetaFunction& t, const Eigen::VectorXcd& shift);

    /// Parse "sigma_d(3)", "pow(sigma_d(2),2)", "prod(a,b,...)", "one".
    static ThetaFunction parse(const std::string& descriptor);
    std::string descriptor() const;

    int rank() const;
    const LatticeWithForm& lattice() const { return lattice_; }
    const Eigen::MatrixXi& level_gram() const { return level_gram_; }
    long long level_phi(const Cocharacter& m) const;
    Eigen::VectorXi level_adjoint(const Cocharacter& m) const;

    Complex eval(const Eigen::VectorXcd& zvec, const CurveParams& p, double tol = 1e-14) const;
    Jet eval_jet(const std::vector<Jet>& zvec, const CurveParams& p, double tol = 1e-14) const;

    struct Node;

  private:
    using NodePtr = std::shared_ptr<const Node>;
    ThetaFunction(NodePtr root, LatticeWithForm lattice, Eigen::MatrixXi level_gram);
    NodePtr root_;
    LatticeWithForm lattice_;
    Eigen::MatrixXi level_gram_;
};

/// Max relative residual of the level functional equation
///   theta(u q^m) = u^{-Ihat(m)} q^{-phi(m)} theta(u)
/// and of Weyl invariance theta(u^w) = theta(u) over the given samples.
/// Throws sample_at_zero when a sample lands on a zero of theta.
double verify_level(const ThetaFunction& theta, const Cocharacter& m, const SignedPermutation& w,
                    const std::vector<Eigen::VectorXcd>& samples, const CurveParams& p,
                    double tol = 1e-14);

}  // namespace sigmaor
