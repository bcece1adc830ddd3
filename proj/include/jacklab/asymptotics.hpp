#pragma once

#include "jacklab/partitions.hpp"
#include "jacklab/scalar.hpp"

#include <string>
#include <vector>

namespace jacklab {

/// Boundary data (alpha+-, beta+-, gamma+-): alpha and beta lists weakly
/// decreasing and nonnegative, beta entries in [0,1] with
/// beta_1^+ + beta_1^- <= 1, gammas >= 0. Also serves as the recipe for
/// building signature sequences realizing this point.
struct BoundaryPoint {
    std::vector<double> alpha_plus, beta_plus;
    std::vector<double> alpha_minus, beta_minus;
    double gamma_plus = 0.0, gamma_minus = 0.0;

    void validate() const;  // throws std::invalid_argument

    std::string to_json() const;
    static BoundaryPoint from_json(const std::string& text);
};

/// Multiplicative limit function Psi(z): the limit of normalized characters
/// in a single variable. Entire in z away from z = 0 and the alpha poles.
Complex psi_limit(Complex z, const BoundaryPoint& omega, double theta);

/// The same function after the change of variable z -> theta / (1 - 1/z'),
/// i.e. psi_tilde(theta / (1 - e^{-y})) = psi_limit(e^y).
Complex psi_tilde(Complex z, const BoundaryPoint& omega, double theta);

/// Finite-N gamma-ratio product with Stirling-type normalization whose
/// N -> infinity limit is sqrt((z - theta) / z) * psi_tilde(z). Defined for z
/// with Re(N z + 1) to the right of all poles; takes N = length(lambda).
Complex psi_prelimit(Complex z, const Signature& lambda, double theta);

/// Signature of length n realizing the boundary point at scale n: one row
/// floor(alpha_i n) per alpha, conjugated columns floor(beta_j n) per beta,
/// and a near-square block of total area floor(gamma n) (rows of width
/// round(sqrt(area)) plus a remainder row). Throws when the parts do not fit
/// in n rows.
Signature vk_sequence(const BoundaryPoint& omega, long n);

enum class CharEngine { branching, residue };

struct ConvergenceRow {
    long n;
    double sup_error;
};

/// sup over the grid of |J_{lambda(n)}(z_1..z_m; n, theta) - prod psi(z_i)|
/// for each n. The residue engine needs m = 1 and integer theta.
std::vector<ConvergenceRow> convergence_experiment(const BoundaryPoint& omega, double theta,
                                                   const std::vector<std::vector<Complex>>& grid,
                                                   const std::vector<long>& ns, CharEngine engine);

/// |psi_prelimit(z; lambda(n)) - sqrt((z-theta)/z) psi_tilde(z)| per n.
std::vector<ConvergenceRow> prelimit_convergence_check(const BoundaryPoint& omega, double theta,
                                                       Complex z, const std::vector<long>& ns);

struct MomentRow {
    long n;
    double a_plus_err, b_plus_err;  // |sum (a_i/n)^k - sum alpha_i^k| etc.
    double a_minus_err, b_minus_err;
    double sup() const;
};

/// k-th power sums of the scaled Frobenius coordinates of lambda(n) against
/// the boundary data, per n. k >= 2.
std::vector<MomentRow> moment_convergence_check(const BoundaryPoint& omega, long k,
                                                const std::vector<long>& ns);

}  // namespace jacklab
