#include "jacklab/scalar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace jacklab {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1)
        os << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

Rational parse_rational(const std::string& text) {
    std::string t = text;
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    while (!t.empty() && t.back() == ' ') t.pop_back();
    if (t.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = t.find('/');
    if (slash != std::string::npos) {
        BigInt num(t.substr(0, slash));
        BigInt den(t.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    }
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        std::string head = t.substr(0, dot), tail = t.substr(dot + 1);
        bool neg = !head.empty() && head[0] == '-';
        if (neg) head.erase(head.begin());
        if (head.empty()) head = "0";
        BigInt ip(head);
        BigInt fp = tail.empty() ? BigInt(0) : BigInt(tail);
        BigInt den = 1;
        for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
        Rational r = Rational(ip) + Rational(fp, den);
        return neg ? -r : r;
    }
    return Rational(BigInt(t));
}

std::string scalar_to_string(const ScalarValue& v) {
    std::ostringstream os;
    os.precision(17);
    if (std::holds_alternative<Rational>(v)) return rational_to_string(std::get<Rational>(v));
    if (std::holds_alternative<double>(v)) {
        os << std::get<double>(v);
        return os.str();
    }
    Complex z = std::get<Complex>(v);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

}  // namespace jacklab
