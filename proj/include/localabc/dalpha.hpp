#pragma once

#include <string>
#include <vector>

#include "localabc/blaschke.hpp"
#include "localabc/quadrature.hpp"

namespace localabc {

struct SeriesOptions {
    /// Stop once the certified tail is below rel_tol times the partial sum.
    double rel_tol = 1e-10;
    /// Accept a tail up to this size when max_terms is reached.
    double fail_tol = 1e-8;
    long max_terms = 1L << 26;
};

struct SeriesNorm {
    double value = 0.0;
    double tail_bound = 0.0;
    long terms = 0;
};

/// sum_{k>=1} k^alpha |c_k|^2 for the Taylor coefficients c_k of f * theta,
/// theta a Blaschke product on the unit disk.
///
/// Coefficients are streamed through one first-order recurrence per zero. The
/// H^2 and Dirichlet totals of f theta are known in closed form (theta is
/// inner), so the remainder is bounded by Hoelder's inequality as
/// T_1^alpha T_0^(1-alpha). Throws NumericalFailure when that bound is still
/// above fail_tol relative after max_terms coefficients, and InputError for a
/// theta off the unit disk or alpha outside (0, 1].
SeriesNorm dalpha_norm_product(const PolyC& f, const BlaschkeProduct& theta, double alpha,
                               const SeriesOptions& options = {});

/// ||theta||^2 in D_alpha.
SeriesNorm dalpha_norm_blaschke(const BlaschkeProduct& theta, double alpha, const SeriesOptions& options = {});

/// ||f theta||^2 - ||f||^2 in D_alpha, alpha in (0, 1).
double r_alpha(const PolyC& f, const BlaschkeProduct& theta, double alpha, const SeriesOptions& options = {});

/// \iint_D |f|^2 (1 - |theta|^2) / (1 - |z|^2)^{1+alpha} dA (Lebesgue measure),
/// with (1 - |z|)^{-alpha} absorbed into a Gauss-Jacobi radial rule.
double r_alpha_area(const PolyC& f, const BlaschkeProduct& theta, double alpha, const QuadratureConfig& cfg = {});

/// ||f theta|| >= ||f|| - 1e-9 in D_alpha.
bool division_monotonicity_check(const PolyC& f, const BlaschkeProduct& theta, double alpha,
                                 const SeriesOptions& options = {});

struct DalphaReport {
    double alpha = 0.0;
    int n = 0;
    double norm_B_lcm_sq = 0.0;
    double norm_B_rad_sq = 0.0;
    double lambda_alpha = 0.0;
    double mu = 1.0;
    /// norm_B_lcm_sq / (lambda_alpha^2 + n mu^2 norm_B_rad_sq); 0 if the
    /// denominator vanishes.
    double ratio = 0.0;
};

/// lambda_alpha = ||W||_{D_alpha} / min|W| and mu on the unit circle, with the
/// D_alpha norms of B_lcm and B_rad from their Taylor series.
DalphaReport verify_theorem_41(const std::vector<PolyC>& fs, double alpha, const QuadratureConfig& cfg = {},
                               const SeriesOptions& options = {});

/// Zero sequences for truncated infinite products, all of multiplicity one:
///   "geometric": a_k = 1 - 2^{-k}
///   "origin":    a_k = 0
///   "power":     a_k = 1 - 1/(k+1)^2
struct TruncationSchedule {
    std::string zero_rule = "geometric";
    std::vector<int> truncation_levels;
};

/// a_1 .. a_K of the named rule. Throws InputError for an unknown rule.
std::vector<Complex> truncation_zeros(const std::string& rule, int count);

struct TruncationRow {
    int K = 0;
    /// sum_{k<=K} m_k (1 - |a_k|)^{1-alpha}
    double criterion_sum = 0.0;
    /// sum_{k<=K} m_k (1 - |a_k|)
    double blaschke_sum = 0.0;
    double norm_sq = 0.0;
    double tail_bound = 0.0;
    long terms = 0;
};

std::vector<TruncationRow> truncation_study(const TruncationSchedule& schedule, double alpha,
                                            const SeriesOptions& options = {});

}  // namespace localabc
