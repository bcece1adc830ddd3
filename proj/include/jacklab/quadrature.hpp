#pragma once

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace jacklab {

/// Gauss-Legendre nodes and weights on [-1, 1], Newton iteration on the
/// Legendre recurrence in the requested real type. Nodes are interior, which
/// lets integrands with endpoint singularities be sampled safely.
template <class Real>
struct BasicGaussLegendre {
    std::vector<Real> nodes;
    std::vector<Real> weights;

    explicit BasicGaussLegendre(int n) {
        if (n < 1) throw std::invalid_argument("quadrature order must be >= 1");
        using std::abs;
        const Real tol = std::numeric_limits<Real>::epsilon() * 4;
        nodes.resize(n);
        weights.resize(n);
        for (int k = 0; k < (n + 1) / 2; ++k) {
            // Chebyshev-angle initial guess, then Newton on P_n.
            Real x(std::cos(3.14159265358979323846 * (k + 0.75) / (n + 0.5)));
            Real dp(0);
            for (int it = 0; it < 200; ++it) {
                Real p0(1), p1 = x;
                for (int j = 2; j <= n; ++j) {
                    Real p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (x * p1 - p0) / (x * x - 1);
                Real dx = p1 / dp;
                x -= dx;
                if (abs(dx) < tol) break;
            }
            nodes[k] = -x;
            nodes[n - 1 - k] = x;
            Real w = 2 / ((1 - x * x) * dp * dp);
            weights[k] = w;
            weights[n - 1 - k] = w;
        }
    }

    /// Integrate f over [a, b].
    template <class F>
    auto integrate(const F& f, Real a, Real b) const {
        const Real mid = (a + b) / 2, half = (b - a) / 2;
        auto acc = f(mid + half * nodes[0]) * (half * weights[0]);
        for (std::size_t k = 1; k < nodes.size(); ++k)
            acc += f(mid + half * nodes[k]) * (half * weights[k]);
        return acc;
    }
};

using GaussLegendre = BasicGaussLegendre<double>;

/// Shared, lazily built rule table per real type (rules are immutable once
/// constructed).
template <class Real>
const BasicGaussLegendre<Real>& gauss_legendre_t(int n) {
    static std::mutex mu;
    static std::map<int, BasicGaussLegendre<Real>> table;
    std::lock_guard lock(mu);
    auto it = table.find(n);
    if (it == table.end()) it = table.emplace(n, BasicGaussLegendre<Real>(n)).first;
    return it->second;
}

const GaussLegendre& gauss_legendre(int n);

}  // namespace jacklab
