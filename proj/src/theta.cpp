#include "sigmaor/theta.hpp"

#include <cctype>
#include <cmath>
#include <cstring>
#include <sstream>

namespace sigmaor {

namespace {

inline Complex exp_of(const Complex& z) {
    return std::exp(z);
}
inline Jet exp_of(const Jet& z) {
    return jet_exp(z);
}

// Shared q-product body for complex and jet arguments.
template <class T>
T sigma_product(const T& z, const CurveParams& p, int terms) {
    const T u = exp_of(z);
    const T ui = exp_of(-z);
    T acc = exp_of(z * Complex(0.5)) - exp_of(z * Complex(-0.5));
    const Complex q = p.q();
    Complex qn = 1.0;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        const Complex d = 1.0 - qn;
        acc = acc * ((Complex(1.0) - qn * u) * (Complex(1.0) - qn * ui) / (d * d));
    }
    return acc;
}

double u_scale_of(Complex z) {
    return std::exp(std::abs(z.real()) + std::abs(z.imag()));
}

}  // namespace

int sigma_terms(double tol, const CurveParams& p, double u_scale) {
    if (!(tol > 0.0)) throw parameter_error("sigma_terms: tol must be positive");
    const double absq = std::abs(p.q());
    const double need = (std::log(1.0 / tol) + std::log1p(2.0 * std::max(u_scale, 1.0))) /
                        (-std::log(absq));
    return int(std::ceil(need)) + 5;
}

Complex sigma(Complex z, const CurveParams& p, double tol) {
    return sigma_product(z, p, sigma_terms(tol, p, u_scale_of(z)));
}

Complex sigma_with_terms(Complex z, const CurveParams& p, int terms) {
    return sigma_product(z, p, terms);
}

Jet sigma_jet_arg(const Jet& z, const CurveParams& p, double tol) {
    return sigma_product(z, p, sigma_terms(tol, p, u_scale_of(z.constant_term())));
}

Jet sigma_jet(Complex z0, const CurveParams& p, int order) {
    JetSpacePtr sp = JetSpace::get(1, order);
    Jet arg = Jet::variable(sp, 0) + z0;
    return sigma_jet_arg(arg, p);
}

// ---------------------------------------------------------------------------

struct ThetaFunction::Node {
    enum Kind { SigmaD, Product, Power, Translate, One } kind;
    int d = 0;  // SigmaD rank
    int k = 0;  // Power exponent
    std::vector<NodePtr> children;
    Eigen::VectorXcd shift;  // Translate
    int rank = 0;
};

namespace {

using Node = ThetaFunction::Node;

template <class T>
T eval_node(const Node& node, const std::vector<T>& args, int offset, const CurveParams& p,
            int terms) {
    switch (node.kind) {
        case Node::SigmaD: {
            T acc = sigma_product(args[offset], p, terms);
            for (int i = 1; i < node.d; ++i) {
                acc = acc * sigma_product(args[offset + i], p, terms);
            }
            return acc;
        }
        case Node::Product: {
            T acc = eval_node(*node.children[0], args, offset, p, terms);
            int at = offset + node.children[0]->rank;
            for (size_t i = 1; i < node.children.size(); ++i) {
                acc = acc * eval_node(*node.children[i], args, at, p, terms);
                at += node.children[i]->rank;
            }
            return acc;
        }
        case Node::Power: {
            T base = eval_node(*node.children[0], args, offset, p, terms);
            T acc = base;
            for (int i = 1; i < node.k; ++i) acc = acc * base;
            return acc;
        }
        case Node::Translate: {
            std::vector<T> moved(args.begin() + offset, args.begin() + offset + node.rank);
            for (int i = 0; i < node.rank; ++i) moved[i] = moved[i] + node.shift[i];
            return eval_node(*node.children[0], moved, 0, p, terms);
        }
        case Node::One:
            break;
    }
    // One: fall through to the constant; a rank-0 product needs a value type.
    if constexpr (std::is_same_v<T, Complex>) {
        return Complex(1.0);
    } else {
        return Jet::constant(JetSpace::get(0, 0), 1.0);
    }
}

double max_u_scale(const Eigen::VectorXcd& zvec) {
    double s = 1.0;
    for (int i = 0; i < zvec.size(); ++i) s = std::max(s, u_scale_of(zvec[i]));
    return s;
}

double max_u_scale(const std::vector<Jet>& zvec) {
    double s = 1.0;
    for (const auto& z : zvec) s = std::max(s, u_scale_of(z.constant_term()));
    return s;
}

}  // namespace

ThetaFunction::ThetaFunction(NodePtr root, LatticeWithForm lattice, Eigen::MatrixXi level_gram)
    : root_(std::move(root)), lattice_(std::move(lattice)), level_gram_(std::move(level_gram)) {}

int ThetaFunction::rank() const {
    return root_->rank;
}

ThetaFunction ThetaFunction::sigma_d(int d) {
    if (d <= 0) throw parameter_error("sigma_d: d must be positive");
    auto node = std::make_shared<Node>();
    node->kind = Node::SigmaD;
    node->d = d;
    node->rank = d;
    return ThetaFunction(node, LatticeWithForm::spin(2 * d), Eigen::MatrixXi::Identity(d, d));
}

ThetaFunction ThetaFunction::one() {
    auto node = std::make_shared<Node>();
    node->kind = Node::One;
    node->rank = 0;
    return ThetaFunction(node, LatticeWithForm::torus(Eigen::MatrixXi(0, 0)),
                         Eigen::MatrixXi(0, 0));
}

ThetaFunction ThetaFunction::product(const std::vector<ThetaFunction>& parts) {
    if (parts.empty()) return one();
    if (parts.size() == 1) return parts[0];
    auto node = std::make_shared<Node>();
    node->kind = Node::Product;
    LatticeWithForm lattice = parts[0].lattice_;
    int total = parts[0].rank();
    node->children.push_back(parts[0].root_);
    for (size_t i = 1; i < parts.size(); ++i) {
        node->children.push_back(parts[i].root_);
        lattice = LatticeWithForm::direct_sum(lattice, parts[i].lattice_);
        total += parts[i].rank();
    }
    node->rank = total;
    Eigen::MatrixXi level = Eigen::MatrixXi::Zero(total, total);
    int at = 0;
    for (const auto& part : parts) {
        level.block(at, at, part.rank(), part.rank()) = part.level_gram_;
        at += part.rank();
    }
    return ThetaFunction(node, std::move(lattice), std::move(level));
}

ThetaFunction ThetaFunction::power(const ThetaFunction& t, int k) {
    if (k <= 0) throw parameter_error("power: exponent must be positive");
    if (k == 1) return t;
    auto node = std::make_shared<Node>();
    node->kind = Node::Power;
    node->k = k;
    node->children.push_back(t.root_);
    node->rank = t.rank();
    return ThetaFunction(node, t.lattice_, Eigen::MatrixXi(k * t.level_gram_));
}

ThetaFunction ThetaFunction::translate(const ThetaFunction& t, const Eigen::VectorXcd& shift) {
    if (shift.size() != t.rank()) throw parameter_error("translate: one shift per variable");
    auto node = std::make_shared<Node>();
    node->kind = Node::Translate;
    node->children.push_back(t.root_);
    node->shift = shift;
    node->rank = t.rank();
    return ThetaFunction(node, t.lattice_, t.level_gram_);
}

long long ThetaFunction::level_phi(const Cocharacter& m) const {
    lattice_.require_member(m);
    const long long twice =
        (m.cast<long long>().transpose() * level_gram_.cast<long long>() * m.cast<long long>())(0);
    if (twice % 2 != 0) {
        throw not_in_lattice("level_phi is not integral on this vector");
    }
    return twice / 2;
}

Eigen::VectorXi ThetaFunction::level_adjoint(const Cocharacter& m) const {
    return level_gram_ * m;
}

Complex ThetaFunction::eval(const Eigen::VectorXcd& zvec, const CurveParams& p, double tol) const {
    if (zvec.size() != rank()) throw parameter_error("eval: wrong argument count");
    std::vector<Complex> args(zvec.data(), zvec.data() + zvec.size());
    return eval_node(*root_, args, 0, p, sigma_terms(tol, p, max_u_scale(zvec)));
}

Jet ThetaFunction::eval_jet(const std::vector<Jet>& zvec, const CurveParams& p, double tol) const {
    if (int(zvec.size()) != rank()) throw parameter_error("eval_jet: wrong argument count");
    return eval_node(*root_, zvec, 0, p, sigma_terms(tol, p, max_u_scale(zvec)));
}

// --------------------------- descriptor grammar ----------------------------

namespace {

struct Parser {
    const std::string& s;
    size_t at = 0;

    void skip() {
        while (at < s.size() && std::isspace(static_cast<unsigned char>(s[at]))) ++at;
    }
    bool eat(char c) {
        skip();
        if (at < s.size() && s[at] == c) {
            ++at;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw parameter_error("theta descriptor: expected '" + std::string(1, c) +
                                           "' at offset " + std::to_string(at));
    }
    bool word(const char* w) {
        skip();
        size_t n = std::strlen(w);
        if (s.compare(at, n, w) == 0) {
            at += n;
            return true;
        }
        return false;
    }
    int integer() {
        skip();
        size_t end = at;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
        if (end == at) throw parameter_error("theta descriptor: integer expected");
        int v = std::stoi(s.substr(at, end - at));
        at = end;
        return v;
    }

    ThetaFunction expr() {
        if (word("sigma_d")) {
            expect('(');
            int d = integer();
            expect(')');
            return ThetaFunction::sigma_d(d);
        }
        if (word("one")) return ThetaFunction::one();
        if (word("pow")) {
            expect('(');
            ThetaFunction base = expr();
            expect(',');
            int k = integer();
            expect(')');
            return ThetaFunction::power(base, k);
        }
        if (word("prod")) {
            expect('(');
            std::vector<ThetaFunction> parts;
            parts.push_back(expr());
            while (eat(',')) parts.push_back(expr());
            expect(')');
            return ThetaFunction::product(parts);
        }
        throw parameter_error("theta descriptor: unknown form at offset " + std::to_string(at));
    }
};

void describe(const Node& node, std::ostream& os) {
    switch (node.kind) {
        case Node::SigmaD:
            os << "sigma_d(" << node.d << ")";
            return;
        case Node::One:
            os << "one";
            return;
        case Node::Power:
            os << "pow(";
            describe(*node.children[0], os);
            os << "," << node.k << ")";
            return;
        case Node::Product:
            os << "prod(";
            for (size_t i = 0; i < node.children.size(); ++i) {
                if (i) os << ",";
                describe(*node.children[i], os);
            }
            os << ")";
            return;
        case Node::Translate:
            os << "translate(";
            describe(*node.children[0], os);
            os << ")";
            return;
    }
}

}  // namespace

ThetaFunction ThetaFunction::parse(const std::string& descriptor) {
    Parser p{descriptor};
    ThetaFunction t = p.expr();
    p.skip();
    if (p.at != descriptor.size()) {
        throw parameter_error("theta descriptor: trailing characters");
    }
    return t;
}

std::string ThetaFunction::descriptor() const {
    std::ostringstream os;
    describe(*root_, os);
    return os.str();
}

double verify_level(const ThetaFunction& theta, const Cocharacter& m, const SignedPermutation& w,
                    const std::vector<Eigen::VectorXcd>& samples, const CurveParams& p,
                    double tol) {
    if (m.size() != theta.rank() || w.rank() != theta.rank()) {
        throw parameter_error("verify_level: rank mismatch");
    }
    const long long phi = theta.level_phi(m);
    const Eigen::VectorXi ihat = theta.level_adjoint(m);
    double worst = 0.0;
    for (const auto& z : samples) {
        const Complex base = theta.eval(z, p, tol);
        Eigen::VectorXcd shifted = z;
        Complex log_factor = 0.0;
        for (int i = 0; i < z.size(); ++i) {
            shifted[i] += kTwoPiI * p.tau() * double(m[i]);
            log_factor -= double(ihat[i]) * z[i];
        }
        log_factor -= kTwoPiI * p.tau() * double(phi);
        const Complex lhs = theta.eval(shifted, p, tol);
        const Complex rhs = std::exp(log_factor) * base;
        const double scale = std::max(std::abs(lhs), std::abs(rhs));
        if (scale < 1e-120) throw sample_at_zero("verify_level: sample lies on a zero");
        worst = std::max(worst, std::abs(lhs - rhs) / scale);

        const Complex moved = theta.eval(w.apply(z), p, tol);
        const double wscale = std::max(std::abs(moved), std::abs(base));
        if (wscale < 1e-120) throw sample_at_zero("verify_level: sample lies on a zero");
        worst = std::max(worst, std::abs(moved - base) / wscale);
    }
    return worst;
}

}  // namespace sigmaor
