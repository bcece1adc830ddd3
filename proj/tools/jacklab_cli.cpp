#include "jacklab/asymptotics.hpp"
#include "jacklab/contour.hpp"
#include "jacklab/jack.hpp"
#include "jacklab/pieri.hpp"
#include "jacklab/residue.hpp"
#include "jacklab/scalar.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <vector>

using namespace jacklab;
using nlohmann::json;

namespace {

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string fmt(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

struct VerifyStream {
    bool all_pass = true;

    void emit(json rec, bool pass) {
        rec["pass"] = pass;
        all_pass &= pass;
        std::cout << rec.dump() << "\n";
    }
};

int run_verify_residue(double theta, long n) {
    long th = static_cast<long>(std::lround(theta));
    std::vector<Signature> sigs;
    if (n >= 3)
        sigs = {Signature(std::vector<long>(n, 0)), Signature([&] {
                    std::vector<long> v(n, 0);
                    v[0] = 2;
                    v[1] = 1;
                    return v;
                }()),
                Signature([&] {
                    std::vector<long> v(n, 0);
                    v[0] = 3;
                    v[n - 1] = -1;
                    return v;
                }())};
    else
        sigs = {Signature(std::vector<long>(n, 0))};
    std::vector<Complex> grid{{0.3, 0.0}, {0.7, 0.2}, {1.5, 0.0}, {-0.4, 0.0}, {0.9, -0.9}};
    VerifyStream vs;
    for (const auto& sig : sigs)
        for (Complex x : grid) {
            Complex lhs = jack_character(sig, std::vector<Complex>{x}, n, theta);
            auto r = residue_eval(sig, th, x);
            double rel = std::abs(lhs - r.value) / std::max(std::abs(lhs), 1e-300);
            vs.emit({{"suite", "residue"},
                     {"lambda", sig.to_string()},
                     {"theta", theta},
                     {"x", fmt(x)},
                     {"lhs", fmt(lhs)},
                     {"rhs", fmt(r.value)},
                     {"rel_err", rel}},
                    rel < 1e-9);
        }
    return vs.all_pass ? 0 : 1;
}

int run_verify_contour(double theta, long n, bool inside) {
    std::vector<Signature> sigs{Signature([&] {
                                    std::vector<long> v(n, 0);
                                    v[0] = 2;
                                    if (n > 1) v[1] = 1;
                                    return v;
                                }()),
                                Signature([&] {
                                    std::vector<long> v(n, 0);
                                    v[n - 1] = -1;
                                    return v;
                                }())};
    std::vector<Complex> grid;
    if (inside) {
        double ang = 2.0 * std::numbers::pi / 7.0;
        grid = {{0.3, 0.0}, {0.7, 0.0}, {0.9 * std::cos(ang), 0.9 * std::sin(ang)}};
    } else {
        grid = {{1.1, 0.0}, {1.5, 0.0}, {3.0, 0.0}};
    }
    VerifyStream vs;
    for (const auto& sig : sigs)
        for (Complex x : grid) {
            Complex lhs = jack_character(sig, std::vector<Complex>{x}, n, theta);
            auto r = inside ? contour_inside(sig, theta, x) : contour_outside(sig, theta, x);
            double rel = std::abs(lhs - r.value) / std::max(std::abs(lhs), 1e-300);
            vs.emit({{"suite", inside ? "contour-in" : "contour-out"},
                     {"lambda", sig.to_string()},
                     {"theta", theta},
                     {"x", fmt(x)},
                     {"lhs", fmt(lhs)},
                     {"rhs", fmt(r.value)},
                     {"rel_err", rel}},
                    rel < 1e-6);
        }
    return vs.all_pass ? 0 : 1;
}

int run_verify_pieri(double theta, long m) {
    VerifyStream vs;
    if (m < 1 || m > 3) {
        vs.emit({{"suite", "pieri"},
                 {"error", "capacity: kernel integration supports 1 <= m <= 3"},
                 {"m", m}},
                false);
        return 1;
    }
    std::vector<double> xs = m == 1 ? std::vector<double>{0.5}
                                    : (m == 2 ? std::vector<double>{0.6, 0.8}
                                              : std::vector<double>{0.6, 0.75, 0.9});
    double x = m == 1 ? 0.8 : (m == 2 ? 0.9 : 0.95);
    long n = m + 3;
    std::vector<std::vector<long>> shapes{{0}, {1}, {2, 1}, {1, 0, -1}};
    double tol = theta < 1.0 ? 1e-4 : 1e-6;
    for (const auto& shape : shapes) {
        std::vector<long> parts;
        // place the nonnegative parts as a prefix and the negative ones as a suffix
        std::vector<long> pos, neg;
        for (long v : shape) (v >= 0 ? pos : neg).push_back(v);
        parts.assign(n, 0);
        for (std::size_t i = 0; i < pos.size(); ++i) parts[i] = pos[i];
        for (std::size_t i = 0; i < neg.size(); ++i) parts[n - neg.size() + i] = neg[i];
        Signature nu(parts);
        auto r = pieri_check(nu, xs, x, theta);
        vs.emit({{"suite", "pieri"},
                 {"nu", nu.to_string()},
                 {"theta", theta},
                 {"m", m},
                 {"lhs", r.lhs},
                 {"rhs", r.rhs},
                 {"rel_err", r.rel_error}},
                r.rel_error < tol);
    }
    return vs.all_pass ? 0 : 1;
}

int run_verify_branching_ones() {
    VerifyStream vs;
    std::vector<Rational> thetas{Rational(1, 2), Rational(1), Rational(2)};
    for (long n = 2; n <= 4; ++n)
        for (long l1 = 0; l1 <= 3; ++l1)
            for (long l2 = 0; l2 <= l1; ++l2) {
                std::vector<long> parts(n, 0);
                parts[0] = l1;
                parts[1] = l2;
                Signature sig(parts);
                for (const auto& th : thetas) {
                    std::vector<Rational> ones(n, Rational(1));
                    Rational lhs = jack_eval(sig, ones, th);
                    Rational rhs = jack_eval_ones(Partition(sig.parts()), n, th);
                    vs.emit({{"suite", "branching-ones"},
                             {"lambda", sig.to_string()},
                             {"theta", rational_to_string(th)},
                             {"lhs", rational_to_string(lhs)},
                             {"rhs", rational_to_string(rhs)}},
                            lhs == rhs);
                }
            }
    return vs.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Jack character laboratory: exact evaluation, integral representations, "
                 "kernel identities and boundary asymptotics"};
    app.require_subcommand(1);
    if (const char* t = std::getenv("JACKLAB_THREADS")) (void)t;  // computations are serial

    // eval / char
    std::string lambda_text, vars_text, recipe_text, csv_path, engine_name = "branching";
    std::string theta_text = "1";
    long n_flag = 0, m_flag = 1;
    bool exact = false;
    double tol = 1e-9;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a Jack Laurent polynomial");
    eval_cmd->add_option("--lambda", lambda_text, "signature, e.g. [2,1,0]")->required();
    eval_cmd->add_option("--vars", vars_text, "comma-separated arguments")->required();
    eval_cmd->add_option("--theta", theta_text, "Jack parameter (rational or decimal)");
    eval_cmd->add_flag("--exact", exact, "exact rational arithmetic");

    auto* char_cmd = app.add_subcommand("char", "evaluate a normalized character");
    char_cmd->add_option("--lambda", lambda_text)->required();
    char_cmd->add_option("--vars", vars_text)->required();
    char_cmd->add_option("--N", n_flag, "total variable count")->required();
    char_cmd->add_option("--theta", theta_text);
    char_cmd->add_flag("--exact", exact);

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite (JSON lines)");
    std::string suite;
    verify_cmd
        ->add_option("suite", suite,
                     "one of residue, contour-in, contour-out, pieri, branching-ones")
        ->required();
    verify_cmd->add_option("--theta", theta_text);
    verify_cmd->add_option("--N", n_flag);
    verify_cmd->add_option("--m", m_flag);

    auto* pieri_cmd = app.add_subcommand("pieri-check", "check the kernel identity at one point");
    std::string nu_text, xs_text;
    double x_val = 0.0;
    pieri_cmd->add_option("--nu", nu_text, "signature of length N")->required();
    pieri_cmd->add_option("--xs", xs_text, "comma-separated x_1..x_m")->required();
    pieri_cmd->add_option("--x", x_val, "the extra variable x")->required();
    pieri_cmd->add_option("--theta", theta_text);
    pieri_cmd->add_option("--tol", tol, "quadrature tolerance");

    auto* vk_cmd = app.add_subcommand("vk-limit", "character convergence along a boundary recipe");
    std::string ns_text = "20,40,80";
    vk_cmd->add_option("--recipe", recipe_text, "boundary point JSON")->required();
    vk_cmd->add_option("--theta", theta_text);
    vk_cmd->add_option("--m", m_flag, "number of variables");
    vk_cmd->add_option("--Ns", ns_text, "comma-separated N list");
    vk_cmd->add_option("--engine", engine_name, "branching or residue");
    vk_cmd->add_option("--csv", csv_path, "also write (N, sup_error) CSV");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (eval_cmd->parsed() || char_cmd->parsed()) {
            Signature sig = Signature::parse(lambda_text);
            auto var_items = split_commas(vars_text);
            if (exact) {
                Rational th = parse_rational(theta_text);
                std::vector<Rational> xs;
                for (const auto& t : var_items) xs.push_back(parse_rational(t));
                Rational v = eval_cmd->parsed()
                                 ? jack_eval(sig, xs, th)
                                 : jack_character(sig, xs, n_flag, th);
                std::cout << rational_to_string(v) << "\n";
            } else {
                double th = static_cast<double>(parse_rational(theta_text));
                std::vector<double> xs;
                for (const auto& t : var_items) xs.push_back(static_cast<double>(parse_rational(t)));
                double v = eval_cmd->parsed() ? jack_eval(sig, xs, th)
                                              : jack_character(sig, xs, n_flag, th);
                std::cout << fmt(v) << "\n";
            }
            return 0;
        }

        if (verify_cmd->parsed()) {
            double th = static_cast<double>(parse_rational(theta_text));
            if (suite == "residue") return run_verify_residue(th, n_flag ? n_flag : 3);
            if (suite == "contour-in") return run_verify_contour(th, n_flag ? n_flag : 3, true);
            if (suite == "contour-out") return run_verify_contour(th, n_flag ? n_flag : 3, false);
            if (suite == "pieri") return run_verify_pieri(th, m_flag);
            if (suite == "branching-ones") return run_verify_branching_ones();
            std::cerr << "unknown suite: " << suite << "\n";
            return 2;
        }

        if (pieri_cmd->parsed()) {
            Signature nu = Signature::parse(nu_text);
            std::vector<double> xs;
            for (const auto& t : split_commas(xs_text)) xs.push_back(static_cast<double>(parse_rational(t)));
            double th = static_cast<double>(parse_rational(theta_text));
            PieriConfig cfg;
            cfg.tolerance = tol;
            auto r = pieri_check(nu, xs, x_val, th, cfg);
            json rec{{"nu", nu.to_string()}, {"x", x_val},     {"theta", th},
                     {"lhs", r.lhs},         {"rhs", r.rhs},   {"abs_error", r.abs_error},
                     {"rel_error", r.rel_error}};
            std::cout << rec.dump() << "\n";
            return r.rel_error < 1e-4 ? 0 : 1;
        }

        if (vk_cmd->parsed()) {
            BoundaryPoint omega = BoundaryPoint::from_json(recipe_text);
            double th = static_cast<double>(parse_rational(theta_text));
            std::vector<long> ns;
            for (const auto& t : split_commas(ns_text)) ns.push_back(std::stol(t));
            CharEngine engine =
                engine_name == "residue" ? CharEngine::residue : CharEngine::branching;
            std::vector<std::vector<Complex>> grid;
            std::vector<Complex> zs;
            for (double radius : {0.97, 1.0, 1.03})
                for (double ang : {0.5, 1.5, 2.6, 3.7, 4.8})
                    zs.push_back(Complex(radius * std::cos(ang), radius * std::sin(ang)));
            if (m_flag == 1)
                for (Complex z : zs) grid.push_back({z});
            else
                for (std::size_t i = 0; i < zs.size(); i += m_flag) {
                    std::vector<Complex> pt;
                    for (long j = 0; j < m_flag; ++j) pt.push_back(zs[(i + j) % zs.size()]);
                    grid.push_back(pt);
                }
            auto rows = convergence_experiment(omega, th, grid, ns, engine);
            json rep{{"recipe", json::parse(omega.to_json())},
                     {"theta", th},
                     {"m", m_flag},
                     {"engine", engine_name},
                     {"grid_size", grid.size()},
                     {"rows", json::array()}};
            for (const auto& r : rows) rep["rows"].push_back({{"N", r.n}, {"sup_error", r.sup_error}});
            std::cout << rep.dump(2) << "\n";
            if (!csv_path.empty()) {
                std::ofstream csv(csv_path);
                csv << "N,sup_error\n";
                for (const auto& r : rows) csv << r.n << "," << fmt(r.sup_error) << "\n";
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
