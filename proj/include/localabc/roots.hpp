#pragma once

#include <cstddef>
#include <vector>

#include "localabc/polynomial.hpp"

namespace localabc {

/// Default distance under which two root locations are treated as one.
inline constexpr double kClusterTol = 1e-6;

struct Zero {
    Complex location;
    int multiplicity = 1;

    friend bool operator==(const Zero&, const Zero&) = default;
};

/// Distinct zero locations with multiplicities.
///
/// Construction merges entries closer than the clustering tolerance (summing
/// their multiplicities, keeping the multiplicity-weighted centroid), so the
/// stored locations are pairwise separated.
class ZeroList {
  public:
    ZeroList() = default;
    explicit ZeroList(std::vector<Zero> zeros, double cluster_tol = kClusterTol);

    const std::vector<Zero>& entries() const noexcept { return entries_; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    /// Sum of multiplicities.
    int total_multiplicity() const noexcept;

    /// Multiplicity at the entry within `tol` of z, or 0.
    int multiplicity_at(Complex z, double tol = kClusterTol) const;

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

  private:
    std::vector<Zero> entries_;
};

struct RootOptions {
    double cluster_tol = kClusterTol;
    int max_iterations = 500;
    int max_degree = 30;
};

/// Eigenvalues of the companion matrix of p (deg p >= 1), unpolished.
std::vector<Complex> companion_roots(const PolyC& p);

/// Aberth-Ehrlich simultaneous iteration. Throws NumericalFailure carrying the
/// final residuals if it has not converged after `max_iterations`.
std::vector<Complex> aberth_roots(const PolyC& p, int max_iterations = 500);

/// All roots of p grouped into distinct locations with multiplicities summing
/// to deg p.
///
/// Roots come from the companion matrix (Aberth-Ehrlich as fallback). A group
/// of k nearby approximations is accepted as one k-fold root when it lies
/// within `cluster_tol`, or when p and its first k-1 derivatives all vanish at
/// the group's centre to within rounding level. The centre is then polished by
/// Newton's method on p^(k-1). Exact zero roots (vanishing low coefficients)
/// are split off before any floating-point work.
///
/// Throws InputError for the zero polynomial and NumericalFailure when the
/// degree exceeds `max_degree` or residuals stay large.
ZeroList roots_with_multiplicity(const PolyC& p, const RootOptions& options = {});

/// Convenience overload with only the clustering tolerance.
ZeroList roots_with_multiplicity(const PolyC& p, double cluster_tol);

/// Monic polynomial with the given zeros.
PolyC from_roots(const ZeroList& zeros);

/// sum_i |p_i| |z|^i, the magnitude scale for judging |p(z)|.
double evaluation_scale(const PolyC& p, Complex z);

/// Largest k such that p vanishes to order k at z, judged by repeated
/// synthetic division with the remainder compared against `rel_tol` times the
/// evaluation scale of the current quotient. Stops at `cap`.
int vanishing_order(const PolyC& p, Complex z, int cap, double rel_tol = 1e-6);

}  // namespace localabc
