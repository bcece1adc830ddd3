#pragma once

#include <complex>
#include <limits>
#include <numbers>

namespace jacklab {

/// log Gamma(z) for complex z, Lanczos approximation (g = 7) with reflection
/// for Re z < 1/2. Accurate to ~1e-13 relative away from the poles. The
/// imaginary part is only defined up to 2 pi k across the reflection branch;
/// callers exponentiate differences, where that ambiguity cancels.
inline std::complex<double> log_gamma(std::complex<double> z) {
    using namespace std::complex_literals;
    constexpr double pi = std::numbers::pi;
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,       -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,     9.9843695780195716e-6, 1.5056327351493116e-7};

    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(pi) - std::log(std::sin(pi * z)) - log_gamma(1.0 - z);
    }
    z -= 1.0;
    std::complex<double> x = c[0];
    for (int i = 1; i < 9; ++i) x += c[i] / (z + static_cast<double>(i));
    std::complex<double> t = z + g + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

/// Gamma(a)/Gamma(b) computed through the log difference; safe when both
/// arguments are away from the nonpositive integers.
inline std::complex<double> gamma_ratio(std::complex<double> a, std::complex<double> b) {
    return std::exp(log_gamma(a) - log_gamma(b));
}

/// log Gamma(z) for a multiprecision complex type: reflection for Re z < 1/2,
/// recurrence shift to Re z >= 40, then the Stirling series through the
/// B_34 term (series remainder < 1e-46 there). Same 2 pi k caveat on the
/// imaginary part as above.
template <class CT>
CT log_gamma_stirling(const CT& z) {
    using RT = typename CT::value_type;
    using std::log;
    using std::sin;
    // pi to working precision via Machin's arctangent formula
    static const RT pi_v = [] {
        auto arccot = [](long q) {
            RT inv = RT(1) / q, term = inv, sum = inv;
            RT q2 = RT(q) * q;
            for (long k = 3; term != RT(0); k += 2) {
                term /= q2;
                sum += (k % 4 == 1 ? term : -term) / k;
                if (term / k < std::numeric_limits<RT>::epsilon()) break;
            }
            return sum;
        };
        return 16 * arccot(5) - 4 * arccot(239);
    }();

    if (z.real() < RT(1) / 2) return log(pi_v / sin(pi_v * z)) - log_gamma_stirling(CT(RT(1)) - z);

    CT w = z;
    CT shift(0);
    while (w.real() < RT(40)) {
        shift += log(w);
        w += RT(1);
    }
    CT res = (w - RT(1) / 2) * log(w) - w + log(2 * pi_v) / 2 - shift;
    // c_k = B_{2k} / (2k (2k-1))
    static const long long num[] = {1,      -1,         1,          -1,           1,
                                    -691,   1,          -3617,      43867,        -174611,
                                    854513, -236364091, 8553103,    -23749461029, 8615841276005,
                                    -7709321041217, 2577687858367};
    static const long long den[] = {12,      360,     1260,    1680,   1188,
                                    360360,  156,     122400,  244188, 125400,
                                    63756,   1506960, 3900,    657720, 12460140,
                                    505920,  6732};
    CT p = CT(RT(1)) / w, iw2 = CT(RT(1)) / (w * w);
    for (int k = 0; k < 17; ++k) {
        res += RT(num[k]) / RT(den[k]) * p;
        p *= iw2;
    }
    return res;
}

}  // namespace jacklab
