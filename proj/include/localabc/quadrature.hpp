#pragma once

#include <functional>
#include <vector>

#include "localabc/blaschke.hpp"
#include "localabc/polynomial.hpp"

namespace localabc {

struct QuadratureConfig {
    /// Trapezoid points on the circle; a power of two, at least 64.
    int boundary_samples = 1024;
    /// Gauss nodes in the radial direction for area integrals.
    int radial_nodes = 128;
    /// Maximum number of sample doublings for boundary integrals.
    int refinement_limit = 4;
    double rel_tol = 1e-9;

    /// Throws InputError when a field is out of range.
    void validate() const;
};

/// Nodes and weights on [-1, 1].
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Jacobi rule for the weight (1-x)^a (1+x)^b, a, b > -1 (Golub-Welsch).
QuadratureRule gauss_jacobi(int n, double a, double b);

inline QuadratureRule gauss_legendre(int n) { return gauss_jacobi(n, 0.0, 0.0); }

using BoundaryFunction = std::function<double(Complex)>;
using AreaFunction = std::function<double(Complex)>;

/// (1/2pi) \oint g ds over the boundary circle (so R times the mean of g).
/// Trapezoidal rule, doubling the sample count until successive estimates
/// agree to rel_tol. Throws NumericalFailure with the last two estimates when
/// refinement_limit doublings do not suffice.
double boundary_integral(const BoundaryFunction& g, const DiskDomain& domain, const QuadratureConfig& cfg = {});

struct BoundaryExtrema {
    double sup = 0.0;
    double inf = 0.0;
};

/// max and min of |f| on the boundary from a shared sample set, each polished
/// by golden-section search around the discrete extremum. sup >= inf always.
BoundaryExtrema boundary_extrema(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg = {});

double sup_boundary(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg = {});

/// min |f| on the boundary. Throws HypothesisFailure when it is below
/// 1e-12 times the boundary maximum (f vanishes on the boundary).
double inf_boundary(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg = {});

/// (1/pi) \iint g dA, Gauss-Legendre radially times trapezoid in angle.
double area_integral(const AreaFunction& g, const DiskDomain& domain, const QuadratureConfig& cfg = {});

/// Squared Dirichlet seminorm (1/pi) \iint |f'|^2 dA.
double dirichlet_norm_area(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg = {});

/// Squared Dirichlet seminorm of a Blaschke product, B' from the factored form.
double dirichlet_norm_area(const BlaschkeProduct& b, const QuadratureConfig& cfg = {});

/// Squared Dirichlet seminorm of a function given by its derivative.
double dirichlet_norm_area(const std::function<Complex(Complex)>& derivative, const DiskDomain& domain,
                           const QuadratureConfig& cfg = {});

/// sum_{k>=1} k^alpha |f_k|^2 from Taylor coefficients at 0 (squared norm).
/// Throws InputError unless alpha is in (0, 1].
double dalpha_norm_coeff(const PolyC& f, double alpha);

/// (1/pi) \iint_D |f'|^2 (1-|z|)^{1-alpha} dA. The boundary weight is absorbed
/// into a Gauss-Jacobi radial rule, so polynomial integrands are integrated
/// exactly. Throws InputError unless alpha is in (0, 1].
double dalpha_norm_area(const PolyC& f, double alpha, const QuadratureConfig& cfg = {});

/// Throws InputError unless alpha is in (0, 1] (or (0, 1) when `open`).
void require_alpha(double alpha, bool open = false);

}  // namespace localabc
