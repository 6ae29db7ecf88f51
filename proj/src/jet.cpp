#include "sigmaor/jet.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace sigmaor {

namespace {

// Monomials of total degree <= cap in graded-lex order (degree first).
void enumerate(int vars, int cap, std::vector<Eigen::VectorXi>& out) {
    Eigen::VectorXi mono = Eigen::VectorXi::Zero(vars);
    // Recursive enumeration by remaining degree.
    struct Rec {
        int vars, deg;
        std::vector<Eigen::VectorXi>* out;
        void go(Eigen::VectorXi& mono, int pos, int left) {
            if (pos == vars) {
                if (left == 0) out->push_back(mono);
                return;
            }
            for (int e = 0; e <= left; ++e) {
                mono[pos] = e;
                go(mono, pos + 1, left - e);
            }
            mono[pos] = 0;
        }
    };
    for (int d = 0; d <= cap; ++d) {
        Rec r{vars, d, &out};
        r.go(mono, 0, d);
    }
}

uint64_t pack_key(const Eigen::VectorXi& mono) {
    // cap <= 15 and vars <= 12 in practice; 5 bits per exponent.
    uint64_t k = 0;
    for (int i = 0; i < mono.size(); ++i) k = (k << 5) | uint64_t(mono[i] & 31);
    return k;
}

}  // namespace

JetSpace::JetSpace(int vars, int cap) : vars_(vars), cap_(cap) {
    if (vars < 0 || cap < 0 || vars > 12 || cap > 15) {
        throw parameter_error("JetSpace: unsupported (vars, cap)");
    }
    enumerate(vars, cap, monomials_);
    degrees_.reserve(monomials_.size());
    for (const auto& m : monomials_) degrees_.push_back(m.sum());

    std::unordered_map<uint64_t, int> idx;
    idx.reserve(monomials_.size() * 2);
    for (int i = 0; i < int(monomials_.size()); ++i) idx[pack_key(monomials_[i])] = i;

    for (int a = 0; a < int(monomials_.size()); ++a) {
        for (int b = 0; b < int(monomials_.size()); ++b) {
            if (degrees_[a] + degrees_[b] > cap_) continue;
            Eigen::VectorXi s = monomials_[a] + monomials_[b];
            prod_.push_back({a, b, idx.at(pack_key(s))});
        }
    }
}

int JetSpace::index_of(const Eigen::VectorXi& mono) const {
    if (mono.size() != vars_ || mono.sum() > cap_) return -1;
    // linear scan is fine off the hot path
    for (int i = 0; i < int(monomials_.size()); ++i) {
        if (monomials_[i] == mono) return i;
    }
    return -1;
}

JetSpacePtr JetSpace::get(int vars, int cap) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, JetSpacePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(vars, cap);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    JetSpacePtr sp(new JetSpace(vars, cap));
    cache[key] = sp;
    return sp;
}

Jet::Jet(JetSpacePtr space, Complex constant) : space_(std::move(space)) {
    c_ = Eigen::VectorXcd::Zero(space_->size());
    c_[0] = constant;
}

Jet Jet::variable(JetSpacePtr space, int i) {
    Jet j(space);
    Eigen::VectorXi mono = Eigen::VectorXi::Zero(space->vars());
    mono[i] = 1;
    int idx = space->index_of(mono);
    if (idx < 0) throw parameter_error("Jet::variable: index out of range or cap < 1");
    j.c_[idx] = 1.0;
    return j;
}

Complex Jet::coeff(const Eigen::VectorXi& mono) const {
    int idx = space_->index_of(mono);
    return idx < 0 ? Complex(0) : c_[idx];
}

Jet promote(const Jet& a, const JetSpacePtr& space) {
    if (a.space() == space) return a;
    Jet out(space);
    const auto& monos = a.space()->monomials();
    for (int i = 0; i < int(monos.size()); ++i) {
        if (a.coeffs()[i] == Complex(0)) continue;
        Eigen::VectorXi mono = Eigen::VectorXi::Zero(space->vars());
        if (monos[i].size() > mono.size()) {
            throw parameter_error("promote: cannot shrink variable count");
        }
        mono.head(monos[i].size()) = monos[i];
        int idx = space->index_of(mono);
        if (idx >= 0) out.coeffs()[idx] += a.coeffs()[i];
        // degree above the target cap is truncated away
    }
    return out;
}

void Jet::align(const Jet& o, Jet& out) const {
    // Results carry max(vars) and min(cap) of the operands.
    int vars = std::max(space_->vars(), o.space_->vars());
    int cap = std::min(space_->cap(), o.space_->cap());
    out = Jet(JetSpace::get(vars, cap));
}

Jet Jet::operator-() const {
    Jet r = *this;
    r.c_ = -r.c_;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    if (space_ == o.space_) {
        c_ += o.c_;
        return *this;
    }
    Jet out;
    align(o, out);
    out = promote(*this, out.space());
    out.c_ += promote(o, out.space()).c_;
    return *this = out;
}

Jet& Jet::operator-=(const Jet& o) {
    return *this += -o;
}

Jet& Jet::operator+=(Complex s) {
    c_[0] += s;
    return *this;
}
Jet& Jet::operator-=(Complex s) {
    c_[0] -= s;
    return *this;
}
Jet& Jet::operator*=(Complex s) {
    c_ *= s;
    return *this;
}
Jet& Jet::operator/=(Complex s) {
    c_ /= s;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    if (a.space_ == b.space_) {
        Jet r(a.space_);
        r.c_[0] = 0.0;
        const auto& table = a.space_->prod_table();
        for (const auto& e : table) {
            r.c_[e.c] += a.c_[e.a] * b.c_[e.b];
        }
        return r;
    }
    Jet out;
    a.align(b, out);
    return promote(a, out.space()) * promote(b, out.space());
}

Jet Jet::inverse(double unit_tol) const {
    const Complex c0 = c_[0];
    if (std::abs(c0) <= unit_tol) {
        throw not_a_unit("Jet::inverse: constant term is (numerically) zero");
    }
    // a = c0 (1 + n) with n nilpotent: 1/a = (1/c0) sum (-n)^k.
    Jet n = *this / c0;
    n -= Complex(1.0);
    Jet acc = Jet::constant(space_, 1.0);
    Jet term = Jet::constant(space_, 1.0);
    for (int k = 1; k <= space_->cap(); ++k) {
        term = term * (-n);
        acc += term;
    }
    return acc / c0;
}

Jet jet_pow(const Jet& a, int k) {
    if (k < 0) throw parameter_error("jet_pow: negative exponent");
    Jet r = Jet::constant(a.space(), 1.0);
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

Jet compose_analytic(const std::vector<Complex>& f_taylor, const Jet& a) {
    const int cap = a.cap();
    if (int(f_taylor.size()) < cap + 1) {
        throw parameter_error("compose_analytic: need cap+1 Taylor coefficients");
    }
    Jet nil = a;
    nil -= a.constant_term();
    // Horner in the nilpotent part.
    Jet acc = Jet::constant(a.space(), f_taylor[cap]);
    for (int k = cap - 1; k >= 0; --k) {
        acc = acc * nil;
        acc += f_taylor[k];
    }
    return acc;
}

Jet jet_exp(const Jet& a) {
    std::vector<Complex> taylor(a.cap() + 1);
    double fact = 1.0;
    const Complex e0 = std::exp(a.constant_term());
    for (int k = 0; k <= a.cap(); ++k) {
        if (k > 0) fact *= k;
        taylor[k] = e0 / fact;
    }
    return compose_analytic(taylor, a);
}

Jet substitute(const Jet& a, const std::vector<Jet>& images) {
    if (int(images.size()) != a.vars()) {
        throw parameter_error("substitute: need one image per variable");
    }
    for (const auto& g : images) {
        if (std::abs(g.constant_term()) != 0.0) {
            throw parameter_error("substitute: images must have zero constant term");
        }
    }
    JetSpacePtr target =
        images.empty() ? a.space() : JetSpace::get(images[0].vars(), std::min(a.cap(), images[0].cap()));
    // Precompute powers of each image up to the cap.
    std::vector<std::vector<Jet>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i) {
        powers[i].push_back(Jet::constant(target, 1.0));
        for (int k = 1; k <= target->cap(); ++k) {
            powers[i].push_back(powers[i].back() * promote(images[i], target));
        }
    }
    Jet out(target);
    const auto& monos = a.space()->monomials();
    for (int idx = 0; idx < int(monos.size()); ++idx) {
        const Complex c = a.coeffs()[idx];
        if (c == Complex(0)) continue;
        if (a.space()->degree(idx) > target->cap()) continue;  // image is nilpotent of that order
        Jet term = Jet::constant(target, c);
        for (int v = 0; v < a.vars(); ++v) {
            const int e = monos[idx][v];
            if (e > 0) term = term * powers[v][e];
        }
        out += term;
    }
    return out;
}

}  // namespace sigmaor
