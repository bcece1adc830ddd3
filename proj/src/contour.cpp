#include "jacklab/contour.hpp"

#include "jacklab/loggamma.hpp"
#include "jacklab/quadrature.hpp"

#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace jacklab {

namespace {

constexpr double pi = std::numbers::pi;

/// log x with the cut along (-i infinity, 0]: on the negative real axis the
/// limit from above is taken, log x = ln|x| + i pi.
Complex log_branch(Complex x) {
    if (x.imag() == 0.0 && x.real() < 0.0) return Complex(std::log(-x.real()), pi);
    return std::log(x);
}

Complex lgamma_c(const Complex& z) { return log_gamma(z); }

template <class CT>
CT lgamma_c(const CT& z) {
    return log_gamma_stirling(z);
}

template <class CT, class RT>
struct Integrand {
    CT logx;
    std::vector<double> upper;  // per-factor upper gamma argument offset
    std::vector<double> lower;
    bool outside;

    // inside:  prod Gamma(upper_i - z) / Gamma(lower_i - z)
    // outside: prod Gamma(z + 1 - lower_i) / Gamma(z + 1 - upper_i)
    CT operator()(const CT& z) const {
        using std::exp;
        CT lg = z * logx;
        for (std::size_t i = 0; i < upper.size(); ++i) {
            if (!outside)
                lg += lgamma_c(CT(RT(upper[i])) - z) - lgamma_c(CT(RT(lower[i])) - z);
            else
                lg += lgamma_c(z + RT(1) - RT(lower[i])) - lgamma_c(z + RT(1) - RT(upper[i]));
        }
        return exp(lg);
    }
};

template <class CT, class RT>
struct LoopSum {
    CT sum{};
    RT abs_sum{};  // sum of contribution magnitudes, measures cancellation
};

/// Counterclockwise rectangle-with-rays integral, truncated at ray length len.
/// Rays run right for the inside contour and left for the outside one.
template <class CT, class RT>
LoopSum<CT, RT> loop_integral(const Integrand<CT, RT>& f, const ContourSpec& spec, double len,
                              double panel, int nodes) {
    using std::abs;
    const auto& gl = gauss_legendre_t<RT>(nodes);
    LoopSum<CT, RT> out;
    auto add_segment = [&](auto&& g, double a, double b, const CT& factor) {
        const RT mid = (RT(a) + RT(b)) / 2, half = (RT(b) - RT(a)) / 2;
        for (std::size_t k = 0; k < gl.nodes.size(); ++k) {
            CT v = factor * g(mid + half * gl.nodes[k]) * (half * gl.weights[k]);
            out.sum += v;
            out.abs_sum += abs(v);
        }
    };

    const RT edge(spec.edge);
    const double r = spec.half_height;
    // vertical edge, traversed downward on the inside contour
    CT vfac = f.outside ? CT(RT(0), RT(1)) : CT(RT(0), RT(-1));
    add_segment([&](const RT& s) { return f(CT(edge, s)); }, -r, r, vfac);

    const double dir = f.outside ? -1.0 : 1.0;
    const RT rr(r);
    for (double t0 = 0.0; t0 < len; t0 += panel) {
        double a = spec.edge + dir * t0;
        double b = spec.edge + dir * std::min(t0 + panel, len);
        add_segment([&](const RT& t) { return f(CT(t, -rr)); }, a, b, CT(RT(dir)));
        add_segment([&](const RT& t) { return f(CT(t, rr)); }, a, b, CT(RT(-dir)));
    }
    return out;
}

template <class CT>
Complex to_complex(const CT& z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

ContourResult contour_common(const Signature& lambda, double theta, Complex x, ContourSpec spec,
                             const QuadratureConfig& cfg, bool outside) {
    const long n = static_cast<long>(lambda.length());
    Integrand<Complex, double> f;
    f.logx = log_branch(x);
    f.outside = outside;
    for (long i = 1; i <= n; ++i) {
        double a = static_cast<double>(lambda[i - 1]) + theta * static_cast<double>(n - i);
        f.upper.push_back(a);
        f.lower.push_back(a + theta);
    }

    double decay = std::abs(std::log(std::abs(x)));
    if (decay == 0.0) throw std::domain_error("contour representation needs |x| != 1");
    double tn = theta * static_cast<double>(n);

    // along the rays each Gamma ratio decays like (d_i + t)^{-theta}, where
    // d_i is the distance from the edge to that factor's nearest pole; on top
    // of the exponential |x|^{-t} this lets the rays be truncated much earlier
    // than the exponential rate alone would suggest
    std::vector<double> pole_dist;
    for (std::size_t i = 0; i < f.upper.size(); ++i) {
        double start = outside ? f.lower[i] - 1.0 : f.upper[i];
        pole_dist.push_back(std::max(1.0, std::abs(start - spec.edge)));
    }
    auto ray_len = [&](double eps) {
        double target = std::log(1.0 / std::max(eps, 1e-300));
        auto logdrop = [&](double t) {
            double v = decay * t;
            for (double d : pole_dist) v += theta * std::log1p(t / d);
            return v;
        };
        double hi = cfg.max_length;
        if (logdrop(hi) <= target) return hi;
        double lo = 0.0;
        for (int i = 0; i < 80; ++i) {
            double mid = 0.5 * (lo + hi);
            (logdrop(mid) < target ? lo : hi) = mid;
        }
        return std::max(10.0, hi);
    };

    double len = ray_len(cfg.trunc_eps);
    auto loop = loop_integral(f, spec, len, cfg.panel, cfg.nodes);
    auto refined = loop_integral(f, spec, len, cfg.panel, cfg.nodes + 8);

    Complex coarse_val = loop.sum, refined_val = refined.sum;
    double cancellation = refined.abs_sum / std::max(std::abs(refined.sum), 1e-300);
    if (cancellation > 1e8) {
        // the loop integral is a tiny difference of large contributions
        // (steep (x-1) power in the prefactor); redo it in 50-digit
        // arithmetic where the cancellation is harmless, with the ray
        // truncation tightened to match the smaller target
        using MPC = boost::multiprecision::cpp_complex_50;
        using MPR = MPC::value_type;
        Integrand<MPC, MPR> fm;
        fm.logx = MPC(MPR(f.logx.real()), MPR(f.logx.imag()));
        fm.upper = f.upper;
        fm.lower = f.lower;
        fm.outside = f.outside;
        len = ray_len(cfg.trunc_eps / cancellation);
        coarse_val = to_complex(loop_integral(fm, spec, len, cfg.panel, cfg.nodes).sum);
        refined_val = to_complex(loop_integral(fm, spec, len, cfg.panel, cfg.nodes + 8).sum);
    }
    Complex pref;
    if (outside)
        pref = std::exp(std::lgamma(tn)) / std::pow(x - 1.0, tn - 1.0);
    else
        pref = -std::exp(std::lgamma(tn)) / std::pow(1.0 - x, tn - 1.0);
    Complex scale = pref / Complex(0, 2.0 * pi);

    ContourResult out;
    out.value = scale * refined_val;
    out.error_estimate = std::abs(scale * (refined_val - coarse_val));
    out.ray_length = len;
    return out;
}

}  // namespace

ContourResult contour_inside(const Signature& lambda, double theta, Complex x,
                             std::optional<ContourSpec> spec, const QuadratureConfig& cfg) {
    if (theta <= 0.0) throw std::invalid_argument("theta must be positive");
    if (!(std::abs(x) < 1.0) || x == Complex(0.0))
        throw std::domain_error("inside representation needs 0 < |x| < 1");
    double lam_min = static_cast<double>(lambda[lambda.length() - 1]);
    ContourSpec s = spec.value_or(ContourSpec{lam_min - 0.5});
    if (!(s.edge < lam_min))
        throw std::invalid_argument("contour edge must lie strictly left of lambda_N");
    return contour_common(lambda, theta, x, s, cfg, false);
}

ContourResult contour_outside(const Signature& lambda, double theta, Complex x,
                              std::optional<ContourSpec> spec, const QuadratureConfig& cfg) {
    if (theta <= 0.0) throw std::invalid_argument("theta must be positive");
    if (!(std::abs(x) > 1.0)) throw std::domain_error("outside representation needs |x| > 1");
    double top = static_cast<double>(lambda[0]) + theta * static_cast<double>(lambda.length());
    ContourSpec s = spec.value_or(ContourSpec{top + 0.5});
    if (!(s.edge > top - 1.0))
        throw std::invalid_argument("contour edge must lie strictly right of lambda_1 + theta N - 1");
    return contour_common(lambda, theta, x, s, cfg, true);
}

}  // namespace jacklab
