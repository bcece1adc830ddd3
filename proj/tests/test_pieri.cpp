#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklab/jack.hpp"
#include "jacklab/pieri.hpp"

#include <cmath>
#include <random>

using namespace jacklab;

namespace {

Signature padded(std::vector<long> parts, std::size_t n) {
    parts.resize(n, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Signature(std::move(parts));
}

}  // namespace

TEST_CASE("admissible configurations") {
    CHECK(pieri_admissible({0.5}, 0.8));
    CHECK(pieri_admissible({0.6, 0.8}, 0.9));      // 0.9 > 0.6/0.8
    CHECK(pieri_admissible({0.35, 0.7}, 0.85));    // 0.85 > 0.5
    CHECK_FALSE(pieri_admissible({0.5, 0.6}, 0.7));  // 0.7 < 0.5/0.6
    CHECK_FALSE(pieri_admissible({0.8, 0.6}, 0.9));  // unsorted
    CHECK_FALSE(pieri_admissible({0.5}, 0.4));
    CHECK_FALSE(pieri_admissible({0.5}, 1.0));
    CHECK_FALSE(pieri_admissible({}, 0.5));
}

TEST_CASE("integration domain membership") {
    CHECK(in_domain({1.0, 1.0, 1.0}, 0.7));
    CHECK(in_domain({0.3, 1.0, 1.0}, 0.3));  // boundary: product = x
    CHECK_FALSE(in_domain({0.5, 0.5}, 0.3));
    CHECK_FALSE(in_domain({1.2}, 0.3));
}

TEST_CASE("F kernel values") {
    CHECK(kernel_F({0.2, 0.5}, 0.7, {1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(kernel_F({0.5}, 0.8, {0.8}) == doctest::Approx(0.0).epsilon(1e-14));  // w1 = x
    double f = kernel_F({0.5}, 0.8, {0.9});
    CHECK(f == doctest::Approx(0.55 * (1.0 - 0.8 / 0.9) / (0.2 * 0.5)).epsilon(1e-13));
}

TEST_CASE("F is nondecreasing in each coordinate") {
    std::mt19937 rng(8842);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> xs{0.35, 0.7};
    double x = 0.85, h = 1e-6;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> w{x + (1.0 - x) * u(rng), x + (1.0 - x) * u(rng)};
        if (!in_domain({w[0], w[1]}, x) || w[0] > 1.0 - 2 * h || w[1] > 1.0 - 2 * h) continue;
        double base = kernel_F(xs, x, w);
        for (int i = 0; i < 2; ++i) {
            auto wp = w;
            wp[i] += h;
            CHECK(kernel_F(xs, x, wp) >= base - 1e-12);
        }
    }
}

TEST_CASE("G kernel at theta = 1 collapses to the rational form") {
    std::vector<double> xs{0.6, 0.8};
    double x = 0.9;
    std::vector<double> w{0.97, 0.98};
    double wl = x / (w[0] * w[1]);
    double expect = 1.0 / (std::pow(w[0], 2.0) * w[1]);
    expect /= 1.0 - xs[0] / xs[1];
    expect *= 1.0 - (xs[0] * w[0]) / (xs[1] * w[1]);
    expect *= 1.0 - (xs[0] * w[0]) / wl;
    expect *= 1.0 - (xs[1] * w[1]) / wl;
    CHECK(kernel_G(xs, x, w, 1.0) == doctest::Approx(expect).epsilon(1e-13));
}

TEST_CASE("G kernel rejects invalid points") {
    // w1 w2 < x puts the last argument above 1 and a base goes nonpositive
    CHECK_THROWS_AS(kernel_G({0.6, 0.8}, 0.9, {0.7, 0.7}, 0.5), std::domain_error);
}

TEST_CASE("single-variable kernel equals its closed-form restatement") {
    // The m = 1 specialization of the general kernel, assembled from the
    // public pieces, must coincide pointwise with the one-dimensional
    // product formula J(x1)J(x) = pref * int_x^1 J(x1 w, x/w)
    //   (1 - x1 w^2/x)(1 - x1 w/x)^{t-1}(1/w - 1)^{t-1} F^{t(N-1)-1} dw/w^2.
    const long n = 4;
    const double x1 = 0.45, x = 0.75;
    for (double theta : {0.5, 1.0, 2.5}) {
        Signature nu = padded({2, 1}, n);
        const double p = theta * (n - 1);
        for (int k = 0; k < 20; ++k) {
            double w = x + (1.0 - x) * (k + 0.5) / 20.0;
            double jack = jack_character(nu, std::vector<double>{x1 * w, x / w}, n, theta);

            double general = kernel_G({x1}, x, {w}, theta) *
                             std::pow(kernel_F({x1}, x, {w}), p - 1.0) *
                             std::pow(1.0 - w, theta - 1.0) / w * jack;

            double bracket = (1.0 - x1 * w) * (1.0 - x / w) / ((1.0 - x1) * (1.0 - x));
            double closed = jack * (1.0 - x1 * w * w / x) *
                            std::pow(1.0 - x1 * w / x, theta - 1.0) *
                            std::pow(1.0 / w - 1.0, theta - 1.0) * std::pow(bracket, p - 1.0) /
                            (w * w);
            CHECK(std::abs(general - closed) <= 1e-12 * std::abs(closed));
        }
    }
}

TEST_CASE("kernel mass is one") {
    CHECK(pieri_mass(3, {0.5}, 0.8, 1.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(pieri_mass(4, {0.5}, 0.8, 2.0) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(pieri_mass(4, {0.6, 0.8}, 0.9, 1.0) == doctest::Approx(1.0).epsilon(1e-7));
    CHECK(pieri_mass(5, {0.35, 0.7}, 0.85, 0.5) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("product formula instances") {
    // m=1, theta=1, nu=(1,0): both characters are (x+1)/2, so lhs = 0.675
    auto r = pieri_check(Signature({1, 0}), {0.5}, 0.8, 1.0);
    CHECK(r.lhs == doctest::Approx(0.675).epsilon(1e-12));
    CHECK(r.rel_error < 1e-8);

    auto r2 = pieri_check(padded({2, 1}, 4), {0.6, 0.8}, 0.9, 2.0);
    CHECK(r2.rel_error < 1e-6);

    auto r3 = pieri_check(Signature({2, 0, -1}), {0.3}, 0.6, 0.5);
    CHECK(r3.rel_error < 1e-4);
}

TEST_CASE("rhs rejects bad inputs") {
    CHECK_THROWS_AS(pieri_rhs(Signature({1, 0}), {0.8}, 0.5, 1.0), std::domain_error);
    // N = m: no room for the extra variable
    CHECK_THROWS_AS(pieri_rhs(Signature({1, 0}), {0.3, 0.5}, 0.9, 1.0), std::invalid_argument);
    // dimension cap
    CHECK_THROWS_AS(pieri_rhs(padded({1}, 6), {0.3, 0.5, 0.7, 0.8}, 0.95, 1.0),
                    std::invalid_argument);
}

TEST_CASE("tail mass is small and positive") {
    double total = pieri_mass(8, {0.05}, 0.4, 4.0);
    double tail = pieri_tail_mass(8, {0.05}, 0.4, 4.0, std::pow(8.0, -0.6));
    CHECK(tail > 0.0);
    CHECK(tail < total);
    double tail16 = pieri_tail_mass(16, {0.05}, 0.4, 4.0, std::pow(16.0, -0.6));
    CHECK(tail16 < tail);
}
