#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>
#include <variant>

namespace jacklab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Tagged scalar used at the CLI boundary. Core evaluation code is templated
/// and works directly on Rational / double / Complex; promotion from rational
/// to float is always explicit.
using ScalarValue = std::variant<Rational, double, Complex>;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

std::string rational_to_string(const Rational& r);

/// Accepts "p/q", plain integers and decimal literals ("0.25" -> 1/4).
Rational parse_rational(const std::string& text);

std::string scalar_to_string(const ScalarValue& v);

/// Scalar-type traits used by the templated evaluators.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    using real_type = Rational;
    static bool is_exact() { return true; }
};

template <>
struct scalar_traits<double> {
    using real_type = double;
    static bool is_exact() { return false; }
};

template <>
struct scalar_traits<Complex> {
    using real_type = double;
    static bool is_exact() { return false; }
};

}  // namespace jacklab
