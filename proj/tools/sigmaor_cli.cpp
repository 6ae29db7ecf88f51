// Command-line front end: run verification suites and evaluate the core
// functions at explicit arguments.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "sigmaor/equivariant.hpp"
#include "sigmaor/sampling.hpp"
#include "sigmaor/suites.hpp"
#include "sigmaor/theta.hpp"
#include "sigmaor/thom.hpp"

namespace {

using namespace sigmaor;

// "i", "1.5i", "re,im", or a plain real.
Complex parse_complex(const std::string& text) {
    if (!text.empty() && text.back() == 'i' && text.find(',') == std::string::npos) {
        std::string head = text.substr(0, text.size() - 1);
        if (head.empty()) return Complex(0.0, 1.0);
        if (head == "-") return Complex(0.0, -1.0);
        return Complex(0.0, std::stod(head));
    }
    const auto comma = text.find(',');
    if (comma == std::string::npos) return Complex(std::stod(text), 0.0);
    return Complex(std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1)));
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text), 1);
    return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
}

// "s,t" with each coordinate a rational "p/q".
CurvePoint parse_torsion(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw parameter_error("torsion point must be \"s,t\"");
    return CurvePoint(parse_rational(text.substr(0, comma)),
                      parse_rational(text.substr(comma + 1)));
}

Cocharacter parse_cochar(const std::string& text) {
    std::vector<long long> entries;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto comma = text.find(',', pos);
        const std::string part =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        entries.push_back(std::stoll(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    Cocharacter m(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m[int(i)] = int(entries[i]);
    return m;
}

std::vector<Jet> variable_roots(const JetSpacePtr& space, int count) {
    std::vector<Jet> roots;
    for (int i = 0; i < count; ++i) roots.push_back(Jet::variable(space, i));
    return roots;
}

void print_complex(const char* label, Complex v) {
    std::cout << label << " = " << v.real() << (v.imag() < 0 ? " - " : " + ")
              << std::abs(v.imag()) << "i\n";
}

struct EvalArgs {
    std::string tau = "i";
    std::string z = "0";
    std::string a = "0,0";
    std::string theta = "sigma_d(1)";
    std::string m = "0";
    int shift_s = 0;
    int shift_t = 0;
    int degree_cap = 4;
    double tol = 1e-9;
};

int run_eval(const std::string& what, const EvalArgs& args) {
    CurveParams p(parse_complex(args.tau));
    if (what == "sigma") {
        const Complex z = parse_complex(args.z);
        const int terms = sigma_terms(args.tol, p, std::exp(std::abs(z.real())));
        print_complex("sigma(z)", sigma_with_terms(z, p, terms));
        std::cout << "q-product terms used: " << terms << "\n";
        return 0;
    }
    if (what == "weil") {
        const CurvePoint a = parse_torsion(args.a);
        const Complex w = weil_pairing(LiftedPoint(a, args.shift_s, args.shift_t), p);
        print_complex("w(a, q^{1/n})", w);
        std::cout << "order n = " << a.order() << "\n";
        return 0;
    }

    ThetaFunction theta = ThetaFunction::parse(args.theta);
    const int d = theta.rank();
    if (what == "sigma_d") {
        Eigen::VectorXcd z(d);
        std::size_t pos = 0;
        for (int i = 0; i < d; ++i) {
            const auto semi = args.z.find(';', pos);
            z[i] = parse_complex(semi == std::string::npos ? args.z.substr(pos)
                                                          : args.z.substr(pos, semi - pos));
            pos = semi == std::string::npos ? args.z.size() : semi + 1;
        }
        print_complex("theta(z)", theta.eval(z, p, args.tol));
        std::cout << "descriptor: " << theta.descriptor() << "\n";
        return 0;
    }

    const Cocharacter m = parse_cochar(args.m);
    const CurvePoint a = parse_torsion(args.a);
    const LiftedPoint lift(a, args.shift_s, args.shift_t);
    const Complex z = parse_complex(args.z);
    JetSpacePtr space = JetSpace::get(d, args.degree_cap);
    if (what == "F") {
        const Jet F = F_eval(theta, m, lift, p, z, variable_roots(space, d));
        print_complex("F constant term", F.constant_term());
        std::cout << "jet in " << d << " variable(s), degree cap " << args.degree_cap << "\n";
        return 0;
    }
    if (what == "R") {
        ToyBundle V{LatticeWithForm::spin(2 * d), m, variable_roots(space, d), {}};
        const Jet R = R_eval(V, lift, z, p);
        print_complex("R constant term", R.constant_term());
        std::cout << "jet in " << d << " variable(s), degree cap " << args.degree_cap << "\n";
        return 0;
    }
    std::cerr << "unknown eval target: " << what << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"equivariant sigma-orientation verification tool"};
    app.require_subcommand(1);

    sigmaor::RunConfig cfg;
    std::string tau_text = "i";
    std::string out_path;
    std::vector<std::string> suites;

    auto* verify = app.add_subcommand("verify", "run randomized verification suites");
    verify->add_option("suites", suites, "suite names, or \"all\"")->required();
    verify->add_option("--tau", tau_text, "curve parameter, \"i\", \"1.5i\" or \"re,im\"");
    verify->add_option("--d", cfg.d, "spin rank parameter");
    verify->add_option("--trials", cfg.trials, "trials per suite (0 = suite default)");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--tol", cfg.tol, "residual tolerance (0 = suite default)");
    verify->add_option("--degree-cap", cfg.degree_cap, "jet truncation degree");
    verify->add_option("--torsion-bound", cfg.torsion_bound, "max torsion order");
    verify->add_option("--out", out_path, "write the JSON report here");
    verify->add_option("--jobs", cfg.jobs, "worker threads");

    EvalArgs eargs;
    std::string what;
    auto* eval = app.add_subcommand("eval", "evaluate one function at explicit arguments");
    eval->add_option("what", what, "one of sigma, sigma_d, F, R, weil")->required();
    eval->add_option("--tau", eargs.tau, "curve parameter");
    eval->add_option("--z", eargs.z, "evaluation point; for sigma_d a ;-separated list");
    eval->add_option("--a", eargs.a, "torsion point \"p/q,p/q\"");
    eval->add_option("--theta", eargs.theta, "theta descriptor, e.g. sigma_d(2)");
    eval->add_option("--m", eargs.m, "cocharacter, comma-separated integers");
    eval->add_option("--shift-s", eargs.shift_s, "lift shift along the real period");
    eval->add_option("--shift-t", eargs.shift_t, "lift shift along the tau period");
    eval->add_option("--degree-cap", eargs.degree_cap, "jet truncation degree");
    eval->add_option("--tol", eargs.tol, "truncation tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return run_eval(what, eargs);

        cfg.tau = parse_complex(tau_text);
        for (const auto& s : suites) {
            if (s != "all" && !sigmaor::is_suite_name(s)) {
                std::cerr << "unknown suite: " << s << "\n";
                return 2;
            }
        }
        nlohmann::json report = sigmaor::run_report(suites, cfg);
        for (const auto& s : report["suites"]) {
            std::cout << (s["pass"].get<bool>() ? "PASS" : "FAIL") << "  "
                      << s["name"].get<std::string>() << "  trials=" << s["trials"]
                      << "  max_residual=" << s["max_residual"].get<double>()
                      << "  tol=" << s["tol"].get<double>() << "  ("
                      << s["seconds"].get<double>() << " s)\n";
        }
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "cannot open " << out_path << "\n";
                return 2;
            }
            out << report.dump(2) << "\n";
        }
        return report["all_pass"].get<bool>() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
