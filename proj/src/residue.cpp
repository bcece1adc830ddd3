#include "jacklab/residue.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace jacklab {

std::vector<long> residue_poles(const Signature& lambda, long theta) {
    if (theta < 1) throw std::invalid_argument("residue representation needs integer theta >= 1");
    const long n = static_cast<long>(lambda.length());
    std::vector<long> poles;
    poles.reserve(static_cast<std::size_t>(theta * n));
    for (long i = 1; i <= n; ++i)
        for (long j = 0; j < theta; ++j) poles.push_back(lambda[i - 1] + theta * (n - i) + j);
    return poles;
}

std::vector<Rational> residue_weights(const std::vector<long>& poles) {
    const long k = static_cast<long>(poles.size());
    BigInt fact = 1;
    for (long i = 2; i <= k - 1; ++i) fact *= i;  // (theta N - 1)!
    std::vector<Rational> out;
    out.reserve(poles.size());
    for (long i = 0; i < k; ++i) {
        BigInt denom = 1;
        for (long j = 0; j < k; ++j) {
            if (j == i) continue;
            long d = poles[i] - poles[j];
            if (d == 0) throw std::logic_error("residue poles must be distinct");
            denom *= d;
        }
        out.push_back(Rational(fact) / Rational(denom));
    }
    return out;
}

namespace {

template <class CT>
bool tier_value(const std::vector<long>& poles, const std::vector<Rational>& weights, Complex x,
                Complex& out) {
    using RT = typename complex_traits<CT>::real_type;
    CT xc(RT(x.real()), RT(x.imag()));
    CT v = residue_sum(poles, weights, xc);
    out = Complex(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return std::isfinite(out.real()) && std::isfinite(out.imag());
}

template <>
bool tier_value<Complex>(const std::vector<long>& poles, const std::vector<Rational>& weights,
                         Complex x, Complex& out) {
    out = residue_sum(poles, weights, x);
    return std::isfinite(out.real()) && std::isfinite(out.imag());
}

}  // namespace

Rational residue_eval_exact(const Signature& lambda, long theta, const Rational& x) {
    if (x == 0 || x == 1)
        throw std::domain_error("residue evaluation undefined at x = 0 and x = 1");
    auto poles = residue_poles(lambda, theta);
    auto weights = residue_weights(poles);
    return residue_sum(poles, weights, x);
}

ResidueResult residue_eval(const Signature& lambda, long theta, Complex x) {
    if (x == Complex(0.0) || x == Complex(1.0))
        throw std::domain_error("residue evaluation undefined at x = 0 and x = 1");
    auto poles = residue_poles(lambda, theta);
    auto weights = residue_weights(poles);

    using Eval = std::function<bool(Complex&)>;
    struct Tier {
        int digits;
        Eval eval;
    };
    using namespace boost::multiprecision;
    const Tier tiers[] = {
        {16, [&](Complex& o) { return tier_value<Complex>(poles, weights, x, o); }},
        {50, [&](Complex& o) { return tier_value<cpp_complex_50>(poles, weights, x, o); }},
        {100, [&](Complex& o) { return tier_value<cpp_complex_100>(poles, weights, x, o); }},
        {200, [&](Complex& o) { return tier_value<cpp_complex<200>>(poles, weights, x, o); }},
        {400, [&](Complex& o) { return tier_value<cpp_complex<400>>(poles, weights, x, o); }},
        {800, [&](Complex& o) { return tier_value<cpp_complex<800>>(poles, weights, x, o); }},
    };

    auto rel_gap = [](Complex a, Complex b) {
        return std::abs(a - b) / std::max(std::abs(b), 1.0);
    };

    Complex prev{};
    bool prev_ok = tiers[0].eval(prev);
    double gap = -1.0;
    for (std::size_t t = 1; t < std::size(tiers); ++t) {
        Complex cur;
        bool cur_ok = tiers[t].eval(cur);
        gap = (cur_ok && prev_ok) ? rel_gap(prev, cur) : -1.0;
        if (cur_ok && prev_ok && gap < 1e-12) return ResidueResult{cur, tiers[t].digits, gap};
        prev = cur;
        prev_ok = cur_ok;
        if (t + 1 == std::size(tiers)) return ResidueResult{cur, tiers[t].digits, gap};
    }
    return ResidueResult{prev, 800, gap};  // unreachable
}

}  // namespace jacklab
