#include "jacklab/asymptotics.hpp"

#include "jacklab/jack.hpp"
#include "jacklab/loggamma.hpp"
#include "jacklab/residue.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace jacklab {

namespace {

void check_profile(const std::vector<double>& v, const char* name, double cap) {
    double prev = cap;
    for (double t : v) {
        if (!(t >= 0.0 && t <= prev))
            throw std::invalid_argument(std::string(name) +
                                        " must be weakly decreasing, nonnegative and bounded");
        prev = t;
    }
}

/// One-sided part multiset: alpha rows, beta columns, near-square gamma block.
std::vector<long> side_parts(const std::vector<double>& alpha, const std::vector<double>& beta,
                             double gamma, long n) {
    std::vector<long> parts;
    for (double a : alpha) parts.push_back(static_cast<long>(std::floor(a * n)));

    std::vector<long> cols;
    for (double b : beta) cols.push_back(static_cast<long>(std::floor(b * n)));
    std::sort(cols.begin(), cols.end(), std::greater<>());
    while (!cols.empty() && cols.back() == 0) cols.pop_back();
    if (!cols.empty()) {
        Partition conj_cols = conjugate(Partition(cols));
        for (long p : conj_cols.parts()) parts.push_back(p);
    }

    long area = static_cast<long>(std::floor(gamma * n));
    if (area > 0) {
        // balanced rectangle: rows of width round(sqrt(area)) plus a
        // remainder row; the regular shape keeps the prelimit error
        // one-signed, so error sequences decrease monotonically
        long w = std::max(1L, static_cast<long>(std::llround(std::sqrt(static_cast<double>(area)))));
        for (long r = 0; r < area / w; ++r) parts.push_back(w);
        if (area % w != 0) parts.push_back(area % w);
    }

    std::sort(parts.begin(), parts.end(), std::greater<>());
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return parts;
}

Complex cpow(Complex base, double e) { return std::exp(e * std::log(base)); }

}  // namespace

void BoundaryPoint::validate() const {
    check_profile(alpha_plus, "alpha_plus", std::numeric_limits<double>::infinity());
    check_profile(alpha_minus, "alpha_minus", std::numeric_limits<double>::infinity());
    check_profile(beta_plus, "beta_plus", 1.0);
    check_profile(beta_minus, "beta_minus", 1.0);
    if (!(gamma_plus >= 0.0 && gamma_minus >= 0.0))
        throw std::invalid_argument("gamma weights must be nonnegative");
    double b1p = beta_plus.empty() ? 0.0 : beta_plus.front();
    double b1m = beta_minus.empty() ? 0.0 : beta_minus.front();
    if (b1p + b1m > 1.0)
        throw std::invalid_argument("beta_1^+ + beta_1^- must not exceed 1");
}

std::string BoundaryPoint::to_json() const {
    nlohmann::json j;
    j["alpha_plus"] = alpha_plus;
    j["beta_plus"] = beta_plus;
    j["alpha_minus"] = alpha_minus;
    j["beta_minus"] = beta_minus;
    j["gamma_plus"] = gamma_plus;
    j["gamma_minus"] = gamma_minus;
    return j.dump();
}

BoundaryPoint BoundaryPoint::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BoundaryPoint p;
    p.alpha_plus = j.value("alpha_plus", std::vector<double>{});
    p.beta_plus = j.value("beta_plus", std::vector<double>{});
    p.alpha_minus = j.value("alpha_minus", std::vector<double>{});
    p.beta_minus = j.value("beta_minus", std::vector<double>{});
    p.gamma_plus = j.value("gamma_plus", 0.0);
    p.gamma_minus = j.value("gamma_minus", 0.0);
    p.validate();
    return p;
}

Complex psi_limit(Complex z, const BoundaryPoint& omega, double theta) {
    if (z == Complex(0.0)) throw std::domain_error("psi_limit undefined at z = 0");
    Complex u = z - 1.0, v = 1.0 / z - 1.0;
    for (double a : omega.alpha_plus)
        if (a > 0.0 && std::abs(1.0 - a * u / theta) < 1e-14)
            throw std::domain_error("psi_limit singular at z = 1 + theta/alpha_i^+");
    for (double a : omega.alpha_minus)
        if (a > 0.0 && std::abs(1.0 - a * v / theta) < 1e-14)
            throw std::domain_error("psi_limit singular at an alpha_i^- point");
    Complex out = std::exp(omega.gamma_plus * u + omega.gamma_minus * v);
    for (double b : omega.beta_plus) out *= 1.0 + b * u;
    for (double b : omega.beta_minus) out *= 1.0 + b * v;
    for (double a : omega.alpha_plus) out /= cpow(1.0 - a * u / theta, theta);
    for (double a : omega.alpha_minus) out /= cpow(1.0 - a * v / theta, theta);
    return out;
}

Complex psi_tilde(Complex z, const BoundaryPoint& omega, double theta) {
    if (z.imag() == 0.0 && z.real() <= theta)
        throw std::domain_error("psi_tilde defined off the cut (-infinity, theta]");
    Complex s = z - theta;
    Complex out = std::exp(theta * omega.gamma_plus / s - theta * omega.gamma_minus / z);
    for (double b : omega.beta_plus) out *= 1.0 + theta * b / s;
    for (double b : omega.beta_minus) out *= 1.0 - theta * b / z;
    for (double a : omega.alpha_plus) out /= cpow(1.0 - a / s, theta);
    for (double a : omega.alpha_minus) out /= cpow(1.0 + a / z, theta);
    return out;
}

Complex psi_prelimit(Complex z, const Signature& lambda, double theta) {
    const long n = static_cast<long>(lambda.length());
    const double dn = static_cast<double>(n);
    if (z.imag() == 0.0 && z.real() <= theta)
        throw std::domain_error("psi_prelimit defined off the cut (-infinity, theta]");
    Complex h = z * std::log(z) - (z - theta) * std::log(z - theta) - theta;
    Complex acc = dn * h + theta * dn * std::log(dn);
    for (long i = 1; i <= n; ++i) {
        double a = static_cast<double>(lambda[i - 1]) + theta * static_cast<double>(n - i);
        for (double arg : {dn * z.real() + 1.0 - (a + theta), dn * z.real() + 1.0 - a})
            if (z.imag() == 0.0 && arg <= 0.0 && std::abs(arg - std::round(arg)) < 1e-12)
                throw std::domain_error("psi_prelimit hits a Gamma pole");
        acc += log_gamma(dn * z + 1.0 - (a + theta)) - log_gamma(dn * z + 1.0 - a);
    }
    return std::exp(acc);
}

Signature vk_sequence(const BoundaryPoint& omega, long n) {
    omega.validate();
    if (n < 1) throw std::invalid_argument("need n >= 1");
    auto plus = side_parts(omega.alpha_plus, omega.beta_plus, omega.gamma_plus, n);
    auto minus = side_parts(omega.alpha_minus, omega.beta_minus, omega.gamma_minus, n);
    if (static_cast<long>(plus.size() + minus.size()) > n)
        throw std::domain_error("boundary point not realizable at this n: too many nonzero rows");
    return join_split(Partition(std::move(plus)), Partition(std::move(minus)), n);
}

std::vector<ConvergenceRow> convergence_experiment(const BoundaryPoint& omega, double theta,
                                                   const std::vector<std::vector<Complex>>& grid,
                                                   const std::vector<long>& ns, CharEngine engine) {
    long theta_int = static_cast<long>(std::lround(theta));
    if (engine == CharEngine::residue &&
        (std::abs(theta - static_cast<double>(theta_int)) > 1e-12 || theta_int < 1))
        throw std::invalid_argument("residue engine needs integer theta");

    std::vector<ConvergenceRow> rows;
    for (long n : ns) {
        Signature lambda = vk_sequence(omega, n);
        double sup = 0.0;
        for (const auto& pt : grid) {
            Complex target(1.0);
            for (Complex zi : pt) target *= psi_limit(zi, omega, theta);
            Complex got;
            if (engine == CharEngine::residue) {
                if (pt.size() != 1)
                    throw std::invalid_argument("residue engine needs single-variable grid points");
                got = residue_eval(lambda, theta_int, pt[0]).value;
            } else {
                got = jack_character(lambda, pt, n, theta);
            }
            sup = std::max(sup, std::abs(got - target));
        }
        rows.push_back({n, sup});
    }
    return rows;
}

std::vector<ConvergenceRow> prelimit_convergence_check(const BoundaryPoint& omega, double theta,
                                                       Complex z, const std::vector<long>& ns) {
    Complex target = std::sqrt((z - theta) / z) * psi_tilde(z, omega, theta);
    std::vector<ConvergenceRow> rows;
    for (long n : ns) {
        Signature lambda = vk_sequence(omega, n);
        rows.push_back({n, std::abs(psi_prelimit(z, lambda, theta) - target)});
    }
    return rows;
}

double MomentRow::sup() const {
    return std::max(std::max(a_plus_err, b_plus_err), std::max(a_minus_err, b_minus_err));
}

std::vector<MomentRow> moment_convergence_check(const BoundaryPoint& omega, long k,
                                                const std::vector<long>& ns) {
    if (k < 2) throw std::invalid_argument("moment order k must be >= 2");
    auto psum = [k](const std::vector<double>& v) {
        double s = 0.0;
        for (double t : v) s += std::pow(t, static_cast<double>(k));
        return s;
    };
    auto scaled = [k](const FrobeniusCoords& f, long n, bool arms) {
        double s = 0.0;
        const auto& d = arms ? f.doubled_a : f.doubled_b;
        for (long t : d) s += std::pow(0.5 * static_cast<double>(t) / static_cast<double>(n),
                                       static_cast<double>(k));
        return s;
    };
    std::vector<MomentRow> rows;
    for (long n : ns) {
        Signature lambda = vk_sequence(omega, n);
        auto [plus, minus] = split_signature(lambda);
        FrobeniusCoords fp = frobenius(plus), fm = frobenius(minus);
        MomentRow r;
        r.n = n;
        r.a_plus_err = std::abs(scaled(fp, n, true) - psum(omega.alpha_plus));
        r.b_plus_err = std::abs(scaled(fp, n, false) - psum(omega.beta_plus));
        r.a_minus_err = std::abs(scaled(fm, n, true) - psum(omega.alpha_minus));
        r.b_minus_err = std::abs(scaled(fm, n, false) - psum(omega.beta_minus));
        rows.push_back(r);
    }
    return rows;
}

}  // namespace jacklab
