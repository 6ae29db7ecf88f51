#pragma once

// Arithmetic on the complex torus C = C/Lambda with Lambda = 2*pi*i*(Z + tau*Z).
// Torsion points are stored with exact rationals so that orders and
// divisibility tests never go through floating point.

#include <boost/rational.hpp>
#include <complex>
#include <utility>

#include "sigmaor/errors.hpp"

namespace sigmaor {

using Complex = std::complex<double>;
using Rational = boost::rational<long long>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline const Complex kTwoPiI{0.0, 2.0 * kPi};

/// Modulus of the curve C = C / (2*pi*i*Z + 2*pi*i*tau*Z).
/// Powers of u and q are always exponentials: u^r = e^{r z}, q^r = e^{2 pi i r tau}.
class CurveParams {
  public:
    explicit CurveParams(Complex tau) : tau_(tau) {
        if (!(tau.imag() > 0.0)) {
            throw parameter_error("CurveParams: tau must lie in the upper half plane");
        }
    }

    Complex tau() const { return tau_; }
    Complex q() const { return std::exp(kTwoPiI * tau_); }
    /// q^r = e^{2 pi i r tau}, branch-free for rational/real r.
    Complex q_pow(double r) const { return std::exp(kTwoPiI * tau_ * r); }

  private:
    Complex tau_;
};

/// The class of 2*pi*i*s + 2*pi*i*tau*t in C, with s,t rational in [0,1).
/// Always a torsion point; its order is lcm of the two denominators.
class CurvePoint {
  public:
    CurvePoint() : s_(0), t_(0) {}
    CurvePoint(Rational s, Rational t) : s_(reduce(s)), t_(reduce(t)) {}

    Rational s() const { return s_; }
    Rational t() const { return t_; }

    /// Least n >= 1 with n*(s,t) integral.
    long long order() const;

    bool is_zero() const { return s_.numerator() == 0 && t_.numerator() == 0; }

    CurvePoint scaled(long long c) const { return CurvePoint(c * s_, c * t_); }
    CurvePoint operator+(const CurvePoint& o) const { return CurvePoint(s_ + o.s_, t_ + o.t_); }
    bool operator==(const CurvePoint& o) const { return s_ == o.s_ && t_ == o.t_; }

  private:
    static Rational reduce(Rational r);
    Rational s_, t_;
};

/// A chosen preimage abar of a torsion point in the plane, together with the
/// integers (ell, k) defined by n*abar = 2*pi*i*ell + 2*pi*i*tau*k.
class LiftedPoint {
  public:
    LiftedPoint(CurvePoint base, long long shift_s, long long shift_t)
        : base_(base), shift_s_(shift_s), shift_t_(shift_t) {}

    const CurvePoint& base() const { return base_; }
    long long shift_s() const { return shift_s_; }
    long long shift_t() const { return shift_t_; }

    long long order() const { return base_.order(); }

    /// abar = 2*pi*i*(s + shift_s) + 2*pi*i*tau*(t + shift_t).
    Complex abar(const CurveParams& p) const;

    long long ell() const;  // n*(s + shift_s)
    long long k() const;    // n*(t + shift_t)

    /// alpha = e^{abar}; satisfies alpha^n = q^k.
    Complex alpha(const CurveParams& p) const { return std::exp(abar(p)); }

  private:
    CurvePoint base_;
    long long shift_s_, shift_t_;
};

/// Canonical fundamental-domain coordinates of z: z = 2*pi*i*s + 2*pi*i*tau*t + Lambda
/// with s,t in [0,1).
std::pair<double, double> reduce_mod_lattice(Complex z, const CurveParams& p);

/// Euclidean distance from z to the nearest lattice point of Lambda.
double lattice_distance(Complex z, const CurveParams& p);

/// Weil pairing w(a, q^{1/n}) = alpha^{-1} q^{k/n}, an n-th root of unity
/// independent of the chosen lift.
Complex weil_pairing(const LiftedPoint& lift, const CurveParams& p);

}  // namespace sigmaor
