#pragma once

#include "jacklab/memo.hpp"
#include "jacklab/partitions.hpp"
#include "jacklab/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace jacklab {

/// Rising factorial x (x+1) ... (x+n-1); explicit product, exact in rational
/// mode and pole-free for any real base in float mode.
template <class R>
R pochhammer(R x, long n) {
    if (n < 0) throw std::invalid_argument("pochhammer length must be nonnegative");
    R out(1);
    for (long k = 0; k < n; ++k) {
        out *= x;
        x += R(1);
    }
    return out;
}

template <class V>
V ipow(const V& base, long e) {
    if (e < 0) return V(1) / ipow(base, -e);
    V out(1), b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

namespace detail {

inline long vec_sum(const std::vector<long>& v) {
    return std::accumulate(v.begin(), v.end(), 0L);
}

/// Visit every mu with lambda_{i+1} <= mu_i <= lambda_i (lambda given as a
/// weakly decreasing vector of length n+1; mu of length n).
template <class F>
void for_each_interlacing(const std::vector<long>& lambda, F&& visit) {
    const std::size_t n = lambda.size() - 1;
    std::vector<long> mu(n);
    for (std::size_t i = 0; i < n; ++i) mu[i] = lambda[i];
    while (true) {
        visit(const_cast<const std::vector<long>&>(mu));
        std::size_t i = n;
        while (i-- > 0) {
            if (mu[i] > lambda[i + 1]) {
                --mu[i];
                for (std::size_t j = i + 1; j < n; ++j) mu[j] = std::min(lambda[j], mu[j - 1]);
                break;
            }
            if (i == 0) return;
        }
        if (n == 0) return;
    }
}

}  // namespace detail

/// Branching coefficient psi_{lambda/mu}(theta) for nonnegative signatures,
/// length(lambda) = length(mu) + 1. Returns 0 when mu does not interlace.
template <class R>
R psi_branching_vec(const std::vector<long>& lambda, const std::vector<long>& mu, const R& theta) {
    const std::size_t n = mu.size();
    if (lambda.size() != n + 1) throw std::domain_error("psi_branching: length mismatch");
    for (std::size_t i = 0; i < n; ++i)
        if (!(lambda[i + 1] <= mu[i] && mu[i] <= lambda[i])) return R(0);
    R out(1);
    for (std::size_t j = 0; j < n; ++j) {
        const long len = mu[j] - lambda[j + 1];
        if (len == 0) continue;
        for (std::size_t i = 0; i <= j; ++i) {
            R gap = theta * R(static_cast<long>(j - i));
            R a = R(mu[i] - mu[j]) + gap;
            R b = R(lambda[i] - mu[j]) + gap;
            out *= pochhammer<R>(a + theta, len) * pochhammer<R>(b + R(1), len) /
                   (pochhammer<R>(a + R(1), len) * pochhammer<R>(b + theta, len));
        }
    }
    return out;
}

template <class R>
R psi_branching(const Signature& lambda, const Signature& mu, const R& theta) {
    return psi_branching_vec(lambda.parts(), mu.parts(), theta);
}

/// J_lambda(1^N; theta) via the closed-form evaluation identity.
template <class R>
R jack_eval_ones(const Partition& lambda, long n, const R& theta) {
    if (static_cast<long>(lambda.length()) > n)
        throw std::invalid_argument("jack_eval_ones: partition longer than N");
    R out(1);
    for (long i = 1; i < n; ++i) {
        for (long j = i + 1; j <= n; ++j) {
            long len = lambda.part(i - 1) - lambda.part(j - 1);
            if (len == 0) continue;
            out *= pochhammer<R>(theta * R(j - i + 1), len) / pochhammer<R>(theta * R(j - i), len);
        }
    }
    return out;
}

/// Coefficient map after peeling `count` unit arguments off J_lambda, i.e.
/// J_lambda(x_1..x_m, 1^count) = sum_mu coeff[mu] J_mu(x_1..x_m).
/// lambda must be a nonnegative vector. Memoized per (lambda, count, theta),
/// bounded LRU.
template <class R>
std::map<std::vector<long>, R> ones_collapse(const std::vector<long>& lambda, long count,
                                             const R& theta) {
    using Map = std::map<std::vector<long>, R>;
    using Key = std::tuple<std::vector<long>, long, R>;
    static LruCache<Key, Map> cache(2048);

    Key key{lambda, count, theta};
    if (auto hit = cache.get(key)) return *hit;

    Map cur;
    cur.emplace(lambda, R(1));
    for (long step = 0; step < count; ++step) {
        Map next;
        for (const auto& [sig, c] : cur) {
            detail::for_each_interlacing(sig, [&](const std::vector<long>& mu) {
                R w = c * psi_branching_vec(sig, mu, theta);
                auto [it, fresh] = next.emplace(mu, w);
                if (!fresh) it->second += w;
            });
        }
        cur = std::move(next);
    }
    cache.put(key, cur);
    return cur;
}

/// Jack polynomial of a nonnegative signature at explicit arguments, by
/// iterated branching. V is the value type, R the coefficient type.
template <class R, class V>
V jack_eval_nonneg(const std::vector<long>& lambda, const std::vector<V>& xs, const R& theta) {
    const std::size_t n = xs.size();
    if (lambda.size() != n) throw std::invalid_argument("jack_eval: variable count mismatch");
    std::map<std::vector<long>, V> cur;
    cur.emplace(lambda, V(1));
    for (std::size_t k = n; k >= 2; --k) {
        std::map<std::vector<long>, V> next;
        for (const auto& [sig, c] : cur) {
            const long sz = detail::vec_sum(sig);
            detail::for_each_interlacing(sig, [&](const std::vector<long>& mu) {
                V w = c * V(psi_branching_vec(sig, mu, theta)) *
                      ipow(xs[k - 1], sz - detail::vec_sum(mu));
                auto [it, fresh] = next.emplace(mu, w);
                if (!fresh) it->second += w;
            });
        }
        cur = std::move(next);
    }
    V out(0);
    for (const auto& [sig, c] : cur) out += c * ipow(xs[0], sig[0]);
    return out;
}

/// Jack Laurent polynomial J_lambda(xs; theta); negative parts are reduced
/// through the index-stability shift. Exact when all inputs are rational.
template <class R, class V>
V jack_eval(const Signature& lambda, const std::vector<V>& xs, const R& theta) {
    if (lambda.length() != xs.size())
        throw std::invalid_argument("jack_eval: variable count mismatch");
    long shift = std::min(0L, lambda[lambda.length() - 1]);
    if (shift == 0) return jack_eval_nonneg(lambda.parts(), xs, theta);
    for (const V& x : xs)
        if (x == V(0)) throw std::domain_error("jack_eval: zero argument with negative parts");
    V prod(1);
    for (const V& x : xs) prod *= x;
    return ipow(prod, shift) * jack_eval_nonneg(lambda.shifted(-shift).parts(), xs, theta);
}

template <class R>
struct ThetaParam {
    R value;
    explicit ThetaParam(R v) : value(std::move(v)) {
        if (!(value > R(0))) throw std::invalid_argument("theta must be positive");
    }
};

/// Normalized Jack character J_lambda(x_1..x_m; N, theta): the 1^{N-m} block
/// is collapsed once per (lambda, N-m, theta) and cached; the m-variable part
/// is evaluated per call.
template <class R, class V>
V jack_character(const Signature& lambda, const std::vector<V>& xs, long n, const R& theta) {
    const long m = static_cast<long>(xs.size());
    if (m < 1 || m > n) throw std::invalid_argument("jack_character: need 1 <= m <= N");
    if (static_cast<long>(lambda.length()) != n)
        throw std::invalid_argument("jack_character: length(lambda) != N");

    long shift = std::min(0L, lambda[lambda.length() - 1]);
    V laurent_factor(1);
    if (shift != 0) {
        for (const V& x : xs)
            if (x == V(0)) throw std::domain_error("jack_character: zero argument with negative parts");
        V prod(1);
        for (const V& x : xs) prod *= x;
        laurent_factor = ipow(prod, shift);
    }
    std::vector<long> shifted = lambda.shifted(-shift).parts();

    auto coeffs = ones_collapse(shifted, n - m, theta);
    V numer(0);
    for (const auto& [mu, c] : coeffs) numer += V(c) * jack_eval_nonneg(mu, xs, theta);
    R denom = jack_eval_ones(Partition(shifted), n, theta);
    return laurent_factor * numer / V(denom);
}

}  // namespace jacklab
