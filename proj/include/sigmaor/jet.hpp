#pragma once

// Truncated multivariate power series over C in nilpotent generators
// x_1..x_r, cut at a fixed total degree.  Storage is dense over the
// monomial basis; each (vars, cap) pair shares one immutable JetSpace
// carrying the monomial enumeration and the product table.

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "sigmaor/curve.hpp"
#include "sigmaor/errors.hpp"

namespace sigmaor {

class JetSpace {
  public:
    struct ProdEntry {
        int a, b, c;  // monomial(a) * monomial(b) = monomial(c)
    };

    static std::shared_ptr<const JetSpace> get(int vars, int cap);

    int vars() const { return vars_; }
    int cap() const { return cap_; }
    int size() const { return int(monomials_.size()); }

    const std::vector<Eigen::VectorXi>& monomials() const { return monomials_; }
    int degree(int idx) const { return degrees_[idx]; }
    int index_of(const Eigen::VectorXi& mono) const;  // -1 if degree > cap
    const std::vector<ProdEntry>& prod_table() const { return prod_; }

  private:
    JetSpace(int vars, int cap);
    int vars_, cap_;
    std::vector<Eigen::VectorXi> monomials_;
    std::vector<int> degrees_;
    std::vector<ProdEntry> prod_;
};

using JetSpacePtr = std::shared_ptr<const JetSpace>;

class Jet {
  public:
    Jet() : Jet(JetSpace::get(0, 0), 0.0) {}
    explicit Jet(JetSpacePtr space, Complex constant = 0.0);
    static Jet constant(JetSpacePtr space, Complex c) { return Jet(std::move(space), c); }
    static Jet variable(JetSpacePtr space, int i);

    const JetSpacePtr& space() const { return space_; }
    int vars() const { return space_->vars(); }
    int cap() const { return space_->cap(); }

    Complex constant_term() const { return c_[0]; }
    Complex coeff(const Eigen::VectorXi& mono) const;
    const Eigen::VectorXcd& coeffs() const { return c_; }
    Eigen::VectorXcd& coeffs() { return c_; }

    double max_abs() const { return c_.cwiseAbs().maxCoeff(); }

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator+=(Complex s);
    Jet& operator-=(Complex s);
    Jet& operator*=(Complex s);
    Jet& operator/=(Complex s);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(const Jet& a, const Jet& b);
    friend Jet operator+(Jet a, Complex s) { return a += s; }
    friend Jet operator+(Complex s, Jet a) { return a += s; }
    friend Jet operator-(Jet a, Complex s) { return a -= s; }
    friend Jet operator-(Complex s, const Jet& a) { return (-a) += s; }
    friend Jet operator*(Jet a, Complex s) { return a *= s; }
    friend Jet operator*(Complex s, Jet a) { return a *= s; }
    friend Jet operator/(Jet a, Complex s) { return a /= s; }

    /// Two-sided inverse at truncation order; throws not_a_unit when the
    /// constant term has modulus <= unit_tol.
    Jet inverse(double unit_tol = 1e-12) const;

    friend Jet operator/(const Jet& a, const Jet& b) { return a * b.inverse(); }

  private:
    void align(const Jet& o, Jet& out) const;
    JetSpacePtr space_;
    Eigen::VectorXcd c_;
};

/// Re-express a in the given space (vars must not shrink below a's support,
/// cap may truncate).
Jet promote(const Jet& a, const JetSpacePtr& space);

/// Integer power by repeated multiplication (k >= 0).
Jet jet_pow(const Jet& a, int k);

/// f(a) = sum_k f_taylor[k] * (a - c)^k where c = a.constant_term().
/// f_taylor must carry at least cap+1 entries.
Jet compose_analytic(const std::vector<Complex>& f_taylor, const Jet& a);

/// exp(a), exact at truncation order.
Jet jet_exp(const Jet& a);

/// Substitute variable i by images[i]; every image must have zero constant
/// term (so truncation commutes with substitution).
Jet substitute(const Jet& a, const std::vector<Jet>& images);

}  // namespace sigmaor
