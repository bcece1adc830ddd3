#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklab/contour.hpp"
#include "jacklab/jack.hpp"
#include "jacklab/loggamma.hpp"
#include "jacklab/residue.hpp"

#include <cmath>
#include <numbers>

using namespace jacklab;

namespace {

Complex char1(const Signature& sig, Complex x, double theta) {
    return jack_character(sig, std::vector<Complex>{x}, static_cast<long>(sig.length()), theta);
}

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("complex log gamma") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(std::abs(log_gamma({5.0, 0.0}) - std::log(24.0)) < 1e-13);
    CHECK(std::abs(log_gamma({0.5, 0.0}) - 0.5 * std::log(std::numbers::pi)) < 1e-13);
    // recurrence Gamma(z+1) = z Gamma(z) across the plane, incl. Re z < 1/2
    for (Complex z : {Complex(0.3, 0.7), Complex(-2.4, 0.5), Complex(-6.1, -1.3),
                      Complex(4.0, -9.0), Complex(0.01, 0.02)}) {
        Complex lhs = std::exp(log_gamma(z + 1.0));
        Complex rhs = z * std::exp(log_gamma(z));
        CHECK(std::abs(lhs - rhs) <= 1e-13 * std::abs(rhs));
    }
}

TEST_CASE("residue representation, closed forms") {
    for (long k : {0L, 1L, 3L, -2L})
        for (Complex x : {Complex(0.4, 0.0), Complex(1.7, 0.6)}) {
            auto r = residue_eval(Signature({k}), 1, x);
            CHECK(std::abs(r.value - ipow(x, k)) < 1e-12);
        }
    Complex x(0.35, -0.2);
    auto r = residue_eval(Signature({1, 0}), 1, x);
    CHECK(std::abs(r.value - (x + 1.0) / 2.0) < 1e-12);
    auto z = residue_eval(Signature({0, 0}), 2, Complex(2.0, 0.0));
    CHECK(std::abs(z.value - 1.0) < 1e-12);
}

TEST_CASE("residue representation, exact rational path") {
    Rational x(3, 10);
    for (long theta : {1L, 2L}) {
        Signature sig({2, 1, 0, -1});
        Rational expect =
            jack_character(sig, std::vector<Rational>{x}, 4, Rational(theta));
        CHECK(residue_eval_exact(sig, theta, x) ==
              expect * ipow(x - Rational(1), 4 * theta - 1) / ipow(x - Rational(1), 4 * theta - 1));
        CHECK(residue_eval_exact(sig, theta, x) == expect);
    }
    CHECK_THROWS_AS(residue_eval_exact(Signature({1, 0}), 1, Rational(1)), std::domain_error);
}

TEST_CASE("residue agrees with branching on mixed signatures") {
    std::vector<Signature> sigs{Signature({2, 1, 0}), Signature({4, 0, -3}),
                                Signature({3, 2, 2, -1})};
    std::vector<Complex> grid{{0.3, 0.0}, {-0.4, 0.0}, {0.5, 0.5}, {1.5, 0.0}, {2.0, 1.0}};
    for (const auto& sig : sigs)
        for (long theta : {1L, 2L, 3L})
            for (Complex x : grid) {
                auto r = residue_eval(sig, theta, x);
                CHECK(rel(r.value, char1(sig, x, static_cast<double>(theta))) < 1e-9);
            }
}

TEST_CASE("contour representation inside the disk") {
    auto zero3 = Signature({0, 0, 0});
    CHECK(rel(contour_inside(zero3, 0.5, Complex(0.4, 0.0)).value, Complex(1.0)) < 1e-8);
    CHECK(rel(contour_inside(Signature({1, 0}), 0.5, Complex(0.5, 0.0)).value, Complex(0.75)) <
          1e-8);
    Signature laur({2, 0, -1});
    CHECK(rel(contour_inside(laur, 2.0, Complex(0.3, 0.0)).value, char1(laur, {0.3, 0.0}, 2.0)) <
          1e-8);
    CHECK_THROWS_AS(contour_inside(zero3, 1.0, Complex(1.5, 0.0)), std::domain_error);
}

TEST_CASE("contour representation outside the disk") {
    CHECK(rel(contour_outside(Signature({0, 0}), 1.0, Complex(1.5, 0.0)).value, Complex(1.0)) <
          1e-8);
    CHECK(rel(contour_outside(Signature({1, 0, 0}), 1.0, Complex(2.0, 0.0)).value,
              Complex(4.0 / 3.0)) < 1e-8);
    Signature sig({3, 1, 0, 0});
    Complex x = 1.2 * std::polar(1.0, std::numbers::pi / 5.0);
    CHECK(rel(contour_outside(sig, 0.5, x).value, char1(sig, x, 0.5)) < 1e-6);
    CHECK_THROWS_AS(contour_outside(sig, 1.0, Complex(0.5, 0.0)), std::domain_error);
}

TEST_CASE("cross-representation agreement for integer theta") {
    Signature sig({2, 1, -1});
    Complex x(0.45, 0.3);
    auto a = residue_eval(sig, 2, x);
    auto b = contour_inside(sig, 2.0, x);
    CHECK(rel(a.value, b.value) < 1e-6);
}

TEST_CASE("contour independence under edge and height changes") {
    Signature sig({2, 0, -1});
    double theta = 2.75;
    Complex x(0.6, 0.2);
    auto base = contour_inside(sig, theta, x);
    auto taller = contour_inside(sig, theta, x, ContourSpec{-1.5, 1.0});
    auto shifted = contour_inside(sig, theta, x, ContourSpec{-1.75, 0.5});
    CHECK(rel(taller.value, base.value) < 1e-8);
    CHECK(rel(shifted.value, base.value) < 1e-8);

    Complex xo(1.4, 0.0);
    auto obase = contour_outside(sig, theta, xo);
    auto otall = contour_outside(sig, theta, xo, ContourSpec{2.0 + 3 * 2.75 + 0.5, 1.0});
    auto oshift = contour_outside(sig, theta, xo, ContourSpec{2.0 + 3 * 2.75 + 0.75, 0.5});
    CHECK(rel(otall.value, obase.value) < 1e-8);
    CHECK(rel(oshift.value, obase.value) < 1e-8);
}

TEST_CASE("negative real x uses the upper-edge branch") {
    // residue and contour agree there, which pins the x^z branch choice
    Signature sig({1, 0, 0});
    Complex x(-0.5, 0.0);
    auto r = residue_eval(sig, 1, x);
    auto c = contour_inside(sig, 1.0, x);
    CHECK(rel(c.value, r.value) < 1e-6);
    CHECK(rel(r.value, char1(sig, x, 1.0)) < 1e-10);
}
