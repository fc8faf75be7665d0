#pragma once

#include <span>
#include <vector>

#include "localabc/polynomial.hpp"
#include "localabc/roots.hpp"

namespace localabc {

/// Open disk {|z - center| < radius} with the conformal map
/// phi(z) = (z - center) / radius onto the unit disk.
class DiskDomain {
  public:
    DiskDomain() = default;
    /// Throws InputError unless radius is positive and finite.
    DiskDomain(Complex center, double radius);

    static DiskDomain unit() { return {}; }

    Complex center() const noexcept { return center_; }
    double radius() const noexcept { return radius_; }

    Complex to_unit(Complex z) const noexcept { return (z - center_) / radius_; }
    Complex from_unit(Complex w) const noexcept { return center_ + radius_ * w; }

    /// Point center + radius * e^{it}.
    Complex boundary_point(double t) const noexcept;

    /// Signed distance from z to the boundary circle (positive inside).
    double distance_to_boundary(Complex z) const noexcept { return radius_ - std::abs(z - center_); }

    friend bool operator==(const DiskDomain&, const DiskDomain&) = default;

  private:
    Complex center_{0.0, 0.0};
    double radius_ = 1.0;
};

/// Finite Blaschke product on a disk,
///   B(z) = prod_k ((phi(z) - phi(a_k)) / (1 - conj(phi(a_k)) phi(z)))^{m_k},
/// stored as its distinct zeros with multiplicities.
class BlaschkeProduct {
  public:
    /// The constant 1 on the unit disk.
    BlaschkeProduct() = default;

    /// Throws DomainViolation if some zero has |phi(a)| >= 1 - 1e-12.
    static BlaschkeProduct from_zeros(const DiskDomain& domain, const ZeroList& zeros);

    /// Zeros of p strictly inside the domain. Throws HypothesisFailure when p
    /// has a zero within `boundary_gap` of the boundary circle.
    static BlaschkeProduct from_polynomial(const DiskDomain& domain, const PolyC& p, double boundary_gap = 1e-6,
                                           const RootOptions& options = {});

    const DiskDomain& domain() const noexcept { return domain_; }
    const ZeroList& zeros() const noexcept { return zeros_; }

    Complex operator()(Complex z) const;

    /// B'(z), from the factored form.
    Complex derivative(Complex z) const;

    /// |B'(zeta)| for zeta on the boundary via the Poisson-kernel sum
    ///   (1/R) sum_k m_k (1 - |b_k|^2) / |1 - conj(b_k) phi(zeta)|^2.
    double boundary_derivative_modulus(Complex zeta) const;

    /// (1 - |B(z)|^2) / (1 - |phi(z)|^2) for interior z, evaluated without
    /// cancellation. Bounded on the closed disk.
    double defect_ratio(Complex z) const;

    /// N: zeros counted with multiplicity.
    int count_zeros() const noexcept { return zeros_.total_multiplicity(); }
    /// Number of distinct zeros.
    int count_distinct() const noexcept { return static_cast<int>(zeros_.size()); }

    bool is_constant() const noexcept { return zeros_.empty(); }

  private:
    BlaschkeProduct(DiskDomain domain, ZeroList zeros) : domain_(domain), zeros_(std::move(zeros)) {}

    DiskDomain domain_;
    ZeroList zeros_;
};

/// Union of zero sets, multiplicity = max over the inputs. Throws InputError
/// on mismatched domains; an empty list yields the constant 1 on the unit disk.
BlaschkeProduct lcm(std::span<const BlaschkeProduct> products);

/// Same zero set, every multiplicity 1.
BlaschkeProduct radical(const BlaschkeProduct& b);

/// Multiplicities add. Throws InputError on mismatched domains.
BlaschkeProduct product(std::span<const BlaschkeProduct> products);

/// B^k.
BlaschkeProduct power(const BlaschkeProduct& b, int k);

/// Number of zeros of f inside the domain from the argument principle,
/// (1/2 pi i) \oint f'/f dz by the trapezoidal rule with n_samples points.
/// Throws NumericalFailure if the estimate is farther than 0.1 from an integer.
int count_zeros_argument_principle(const PolyC& f, const DiskDomain& domain, int n_samples = 1024);

}  // namespace localabc
