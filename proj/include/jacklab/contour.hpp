#pragma once

#include "jacklab/partitions.hpp"
#include "jacklab/scalar.hpp"

#include <optional>

namespace jacklab {

/// Rectangle-with-rays contour: a vertical edge at Re z = edge of half-height
/// half_height, plus two horizontal rays at Im z = +-half_height running
/// toward the pole-free direction (to +infinity for the inside representation,
/// to -infinity for the outside one).
struct ContourSpec {
    double edge;
    double half_height = 0.5;
};

struct QuadratureConfig {
    int nodes = 24;          // Gauss-Legendre nodes per unit panel
    double panel = 1.0;      // panel width along the rays
    double trunc_eps = 1e-16;  // relative tail cutoff for ray truncation
    double max_length = 4000.0;
};

struct ContourResult {
    Complex value;
    double error_estimate;  // gap against a refined-node re-evaluation
    double ray_length;      // truncation length actually used
};

/// Character via the contour representation valid for |x| < 1, any theta > 0.
/// The contour must keep all integrand poles (at lambda_i + theta (N - i) + k,
/// k >= 0) strictly to its right: edge < lambda_N. Default edge lambda_N - 1/2.
ContourResult contour_inside(const Signature& lambda, double theta, Complex x,
                             std::optional<ContourSpec> spec = std::nullopt,
                             const QuadratureConfig& cfg = {});

/// Character via the contour representation valid for |x| > 1; poles sit at
/// lambda_i + theta (N - i + 1) - 1 - k, k >= 0, so the edge must satisfy
/// edge > lambda_1 + theta N - 1. Default edge lambda_1 + theta N + 1/2.
ContourResult contour_outside(const Signature& lambda, double theta, Complex x,
                              std::optional<ContourSpec> spec = std::nullopt,
                              const QuadratureConfig& cfg = {});

}  // namespace jacklab
