#include "jacklab/pieri.hpp"

#include "jacklab/jack.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <functional>
#include <stdexcept>

namespace jacklab {

namespace {

double wlast_of(const std::vector<double>& w, double x) {
    double p = 1.0;
    for (double wi : w) p *= wi;
    return x / p;
}

struct KernelJob {
    std::vector<double> xs;  // x_1 < ... < x_m
    double x;
    long n;
    double theta;
    double box_lo = 0.0;  // extra lower clip per coordinate (corner-box mass)
    std::function<double(const std::vector<double>&)> payload;  // args -> character value
    PieriConfig cfg;

    std::size_t m() const { return xs.size(); }
};

/// Kernel density at an interior point. dlow = w_m - x / (w_1...w_{m-1}) is
/// passed separately: near the product boundary it is only known accurately
/// from the quadrature transform, and the vanishing factor of F is
/// proportional to it.
double kernel_density(const KernelJob& job, const std::vector<double>& w, double dlow,
                      const std::vector<double>& dup) {
    const std::size_t m = job.m();
    const double theta = job.theta;

    // F with its last factor (1 - w_{m+1}) written as dlow / w_m.
    double f = 1.0 / (1.0 - job.x);
    for (std::size_t j = 0; j < m; ++j) f /= 1.0 - job.xs[j];
    for (std::size_t i = 0; i < m; ++i) f *= 1.0 - job.xs[i] * w[i];
    f *= dlow / w[m - 1];
    const double p_exp = theta * static_cast<double>(job.n - static_cast<long>(m));
    double val = std::pow(f, p_exp - 1.0);

    val *= kernel_G(job.xs, job.x, w, theta);
    for (std::size_t i = 0; i < m; ++i) val *= std::pow(dup[i], theta - 1.0) / w[i];

    std::vector<double> args(m + 1);
    for (std::size_t i = 0; i < m; ++i) args[i] = job.xs[i] * w[i];
    args[m] = wlast_of(w, job.x);
    return val * job.payload(args);
}

double integrate_level(const KernelJob& job, std::size_t level, double partial,
                       std::vector<double>& w, std::vector<double>& dup) {
    const std::size_t m = job.m();
    const double lo_sing = job.x / partial;
    const double lo = std::max(job.box_lo, lo_sing);
    if (!(lo < 1.0)) return 0.0;
    boost::math::quadrature::tanh_sinh<double> ts(job.cfg.max_refinements);
    // inner levels run at a tighter tolerance so their noise does not stall
    // the outer refinement
    double tol = job.cfg.tolerance * std::pow(0.1, static_cast<double>(m - 1 - level));

    auto f = [&](double wi, double xc) -> double {
        double dleft = xc < 0 ? -xc : wi - lo;
        double dright = xc > 0 ? xc : 1.0 - wi;
        w[level] = wi;
        dup[level] = dright;
        if (level + 1 < m) return integrate_level(job, level + 1, partial * wi, w, dup);
        double dlow = lo == lo_sing ? dleft : wi - lo_sing;
        return kernel_density(job, w, dlow, dup);
    };
    return ts.integrate(f, lo, 1.0, tol);
}

double kernel_integral(KernelJob job) {
    const std::size_t m = job.m();
    if (m < 1 || m > 3) throw std::invalid_argument("kernel integral supports 1 <= m <= 3");
    if (!pieri_admissible(job.xs, job.x))
        throw std::domain_error("inadmissible (x_1..x_m, x) configuration for the kernel");
    if (job.n <= static_cast<long>(m)) throw std::invalid_argument("need N > m");

    std::vector<double> w(m), dup(m);
    double integral = integrate_level(job, 0, 1.0, w, dup);

    double lp = std::lgamma(job.n * job.theta) - std::lgamma((job.n - m) * job.theta) -
                static_cast<double>(m) * std::lgamma(job.theta);
    lp += m * job.theta * std::log(job.x) - m * job.theta * std::log1p(-job.x);
    for (double xi : job.xs) lp -= job.theta * std::log1p(-xi);
    return std::exp(lp) * integral;
}

}  // namespace

bool pieri_admissible(const std::vector<double>& xs, double x) {
    if (xs.empty() || !(x > 0.0 && x < 1.0)) return false;
    for (double xi : xs)
        if (!(xi > 0.0 && xi < 1.0)) return false;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        if (!(xs[i] < xs[i + 1])) return false;
        if (!(x > xs[i] / xs[i + 1])) return false;
    }
    if (!(xs.back() < x)) return false;
    return true;
}

bool in_domain(const std::vector<double>& w, double x) {
    double p = 1.0;
    for (double wi : w) {
        if (!(wi >= 0.0 && wi <= 1.0)) return false;
        p *= wi;
    }
    return p >= x;
}

double kernel_F(const std::vector<double>& xs, double x, const std::vector<double>& w) {
    const std::size_t m = xs.size();
    if (w.size() != m) throw std::invalid_argument("kernel_F: w length mismatch");
    double f = 1.0 / (1.0 - x);
    for (std::size_t j = 0; j < m; ++j) f /= 1.0 - xs[j];
    for (std::size_t i = 0; i < m; ++i) f *= 1.0 - xs[i] * w[i];
    f *= 1.0 - wlast_of(w, x);  // the i = m+1 factor, x_{m+1} = 1
    return f;
}

double kernel_G(const std::vector<double>& xs, double x, const std::vector<double>& w,
                double theta) {
    const std::size_t m = xs.size();
    if (w.size() != m) throw std::invalid_argument("kernel_G: w length mismatch");
    const double wlast = wlast_of(w, x);
    double val = 1.0;
    for (std::size_t i = 0; i < m; ++i)
        val *= std::pow(w[i], -theta * static_cast<double>(m - i));
    auto xv = [&](std::size_t i) { return i < m ? xs[i] : 1.0; };
    auto wv = [&](std::size_t i) { return i < m ? w[i] : wlast; };
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            double base = 1.0 - xs[i] / xs[j] * w[i];
            if (!(base > 0.0)) throw std::domain_error("kernel_G: nonpositive fractional base");
            val *= std::pow(base, theta - 1.0);
            val *= std::pow(1.0 - xs[i] / xs[j], 1.0 - 2.0 * theta);
        }
    for (std::size_t i = 0; i < m + 1; ++i)
        for (std::size_t j = i + 1; j < m + 1; ++j) {
            val *= 1.0 - (xv(i) * wv(i)) / (xv(j) * wv(j));
            double base = 1.0 - xv(i) / (xv(j) * wv(j));
            if (!(base > 0.0)) throw std::domain_error("kernel_G: nonpositive fractional base");
            val *= std::pow(base, theta - 1.0);
        }
    return val;
}

double pieri_lhs(const Signature& nu, const std::vector<double>& xs, double x, double theta) {
    long n = static_cast<long>(nu.length());
    return jack_character(nu, xs, n, theta) * jack_character(nu, std::vector<double>{x}, n, theta);
}

double pieri_rhs(const Signature& nu, const std::vector<double>& xs, double x, double theta,
                 const PieriConfig& cfg) {
    KernelJob job{xs, x, static_cast<long>(nu.length()), theta, 0.0, nullptr, cfg};
    job.payload = [&nu, theta, n = job.n](const std::vector<double>& args) {
        return jack_character(nu, args, n, theta);
    };
    return kernel_integral(std::move(job));
}

double pieri_mass(long n, const std::vector<double>& xs, double x, double theta,
                  const PieriConfig& cfg) {
    KernelJob job{xs, x, n, theta, 0.0, [](const std::vector<double>&) { return 1.0; }, cfg};
    return kernel_integral(std::move(job));
}

double pieri_tail_mass(long n, const std::vector<double>& xs, double x, double theta, double delta,
                       const PieriConfig& cfg) {
    if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("need 0 < delta < 1");
    double total = pieri_mass(n, xs, x, theta, cfg);
    KernelJob job{xs, x, n, theta, 1.0 - delta,
                  [](const std::vector<double>&) { return 1.0; }, cfg};
    double box = kernel_integral(std::move(job));
    return total - box;
}

PieriCheckResult pieri_check(const Signature& nu, const std::vector<double>& xs, double x,
                             double theta, const PieriConfig& cfg) {
    PieriCheckResult r;
    r.lhs = pieri_lhs(nu, xs, x, theta);
    r.rhs = pieri_rhs(nu, xs, x, theta, cfg);
    r.abs_error = std::abs(r.lhs - r.rhs);
    r.rel_error = r.abs_error / std::max(std::abs(r.lhs), 1e-300);
    return r;
}

}  // namespace jacklab
