#pragma once

#include "jacklab/jack.hpp"
#include "jacklab/partitions.hpp"
#include "jacklab/scalar.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <vector>

namespace jacklab {

/// Pole positions lambda_i + theta (N - i) + j, i = 1..N, j = 0..theta-1.
/// Pairwise distinct for every signature because consecutive blocks are
/// separated by at least one unit.
std::vector<long> residue_poles(const Signature& lambda, long theta);

/// Exact residue weights (theta N - 1)! / prod_{q != p} (p - q), one per pole.
std::vector<Rational> residue_weights(const std::vector<long>& poles);

template <class CT>
struct complex_traits {
    using real_type = typename CT::value_type;
    static CT from_rational(const Rational& r) { return CT(real_type(r)); }
    static double abs_double(const CT& z) { return static_cast<double>(abs(z)); }
};

template <>
struct complex_traits<Complex> {
    using real_type = double;
    static Complex from_rational(const Rational& r) { return Complex(static_cast<double>(r)); }
    static double abs_double(const Complex& z) { return std::abs(z); }
};

template <>
struct complex_traits<Rational> {
    using real_type = Rational;
    static Rational from_rational(const Rational& r) { return r; }
    static double abs_double(const Rational& r) { return std::abs(static_cast<double>(r)); }
};

/// Evaluate the normalized character of an integer-theta signature at x by
/// summing residues in the chosen complex type. x must avoid 0 and 1.
template <class CT>
CT residue_sum(const std::vector<long>& poles, const std::vector<Rational>& weights, const CT& x) {
    const long k = static_cast<long>(poles.size());  // k = theta N
    CT acc(0);
    for (long i = 0; i < k; ++i)
        acc += complex_traits<CT>::from_rational(weights[i]) * ipow(x, poles[i]);
    return acc / ipow(x - CT(1), k - 1);
}

struct ResidueResult {
    Complex value;
    int digits_used;        // working precision of the accepted tier
    double tier_agreement;  // relative gap between the last two tiers
};

/// Residue evaluation with automatic precision escalation: tiers of 16, 50,
/// 100, 200 and 400 decimal digits, accepted once two successive tiers agree
/// to 1e-12 relative. Escalation absorbs the catastrophic cancellation in the
/// residue sum at large theta N.
ResidueResult residue_eval(const Signature& lambda, long theta, Complex x);

/// Exact rational path: with rational x, the poles are integers and the
/// residue sum is a rational number.
Rational residue_eval_exact(const Signature& lambda, long theta, const Rational& x);

}  // namespace jacklab
