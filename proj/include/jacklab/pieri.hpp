#pragma once

#include "jacklab/partitions.hpp"

#include <vector>

namespace jacklab {

struct PieriConfig {
    double tolerance = 1e-9;  // per-dimension quadrature tolerance
    int max_refinements = 12;
};

/// The kernel identity needs 0 < x_1 < ... < x_m < x < 1 and
/// x > x_i / x_{i+1} for consecutive pairs: then every fractional-power base
/// in the kernel stays strictly positive on the integration domain.
bool pieri_admissible(const std::vector<double>& xs, double x);

/// w in [0,1]^m with w_1...w_m >= x.
bool in_domain(const std::vector<double>& w, double x);

/// F = (1-x)^{-1} prod_j (1-x_j)^{-1} prod_{i=1}^{m+1} (1 - x_i w_i), with
/// x_{m+1} = 1 and w_{m+1} = x/(w_1...w_m). In (0, 1] on the domain interior,
/// nondecreasing in each w_i, and vanishing on the product boundary.
double kernel_F(const std::vector<double>& xs, double x, const std::vector<double>& w);

/// The weight G exactly as displayed in the identity (principal fractional
/// powers of positive bases).
double kernel_G(const std::vector<double>& xs, double x, const std::vector<double>& w,
                double theta);

/// Product-side value: J_nu(x_1..x_m; N, theta) J_nu(x; N, theta).
double pieri_lhs(const Signature& nu, const std::vector<double>& xs, double x, double theta);

/// Integral-side value: the m-fold kernel integral over
/// { w in [0,1]^m : w_1...w_m >= x } against the (m+1)-variable character at
/// (x_1 w_1, ..., x_m w_m, x / (w_1...w_m)). Nested tanh-sinh quadrature;
/// the endpoint singularities (exponents theta - 1 at w_i = 1 and
/// theta (N - m) - 1 where the last argument reaches 1) are absorbed by the
/// node clustering. m <= 3.
double pieri_rhs(const Signature& nu, const std::vector<double>& xs, double x, double theta,
                 const PieriConfig& cfg = {});

/// Total kernel mass: the integral side with the character replaced by 1.
/// Equals 1 for nu = 0.
double pieri_mass(long n, const std::vector<double>& xs, double x, double theta,
                  const PieriConfig& cfg = {});

/// Kernel mass of the region where some w_i < 1 - delta. Computed as total
/// mass minus the mass of the corner box [1-delta, 1]^m, both smooth
/// integrals.
double pieri_tail_mass(long n, const std::vector<double>& xs, double x, double theta, double delta,
                       const PieriConfig& cfg = {});

struct PieriCheckResult {
    double lhs;
    double rhs;
    double abs_error;
    double rel_error;
};

PieriCheckResult pieri_check(const Signature& nu, const std::vector<double>& xs, double x,
                             double theta, const PieriConfig& cfg = {});

}  // namespace jacklab
