#include "sigmaor/curve.hpp"

#include <cmath>
#include <numeric>

namespace sigmaor {

Rational CurvePoint::reduce(Rational r) {
    long long n = r.numerator(), d = r.denominator();
    long long m = ((n % d) + d) % d;
    return Rational(m, d);
}

long long CurvePoint::order() const {
    return std::lcm(s_.denominator(), t_.denominator());
}

Complex LiftedPoint::abar(const CurveParams& p) const {
    const double s = boost::rational_cast<double>(base_.s()) + double(shift_s_);
    const double t = boost::rational_cast<double>(base_.t()) + double(shift_t_);
    return kTwoPiI * (s + p.tau() * t);
}

long long LiftedPoint::ell() const {
    const long long n = order();
    Rational v = (base_.s() + shift_s_) * n;
    return v.numerator() / v.denominator();  // exact by construction
}

long long LiftedPoint::k() const {
    const long long n = order();
    Rational v = (base_.t() + shift_t_) * n;
    return v.numerator() / v.denominator();
}

std::pair<double, double> reduce_mod_lattice(Complex z, const CurveParams& p) {
    // z / (2 pi i) = s + tau * t, solved as a real 2x2 system.
    const Complex c = z / kTwoPiI;
    const double t = c.imag() / p.tau().imag();
    const double s = c.real() - p.tau().real() * t;
    auto frac = [](double x) {
        double f = x - std::floor(x);
        return (f >= 1.0) ? 0.0 : f;
    };
    return {frac(s), frac(t)};
}

double lattice_distance(Complex z, const CurveParams& p) {
    auto [s, t] = reduce_mod_lattice(z, p);
    double best = std::numeric_limits<double>::infinity();
    for (int ds = -1; ds <= 1; ++ds) {
        for (int dt = -1; dt <= 1; ++dt) {
            Complex w = kTwoPiI * ((s + ds) + p.tau() * (t + dt));
            best = std::min(best, std::abs(w));
        }
    }
    return best;
}

Complex weil_pairing(const LiftedPoint& lift, const CurveParams& p) {
    const long long n = lift.order();
    return std::exp(-lift.abar(p)) * p.q_pow(double(lift.k()) / double(n));
}

}  // namespace sigmaor
