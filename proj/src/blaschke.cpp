#include "localabc/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "localabc/errors.hpp"

namespace localabc {

namespace {

constexpr double kInteriorMargin = 1e-12;

void require_same_domain(std::span<const BlaschkeProduct> products) {
    for (const auto& b : products)
        if (!(b.domain() == products.front().domain()))
            throw InputError("Blaschke products live on different domains");
}

}  // namespace

DiskDomain::DiskDomain(Complex center, double radius) : center_(center), radius_(radius) {
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InputError("disk radius must be positive and finite");
    if (!std::isfinite(center.real()) || !std::isfinite(center.imag()))
        throw InputError("disk center must be finite");
}

Complex DiskDomain::boundary_point(double t) const noexcept { return center_ + std::polar(radius_, t); }

BlaschkeProduct BlaschkeProduct::from_zeros(const DiskDomain& domain, const ZeroList& zeros) {
    for (const auto& z : zeros) {
        if (std::abs(domain.to_unit(z.location)) >= 1.0 - kInteriorMargin) {
            std::ostringstream msg;
            msg << "Blaschke zero " << z.location << " is not strictly inside the disk";
            throw DomainViolation(msg.str());
        }
    }
    return {domain, zeros};
}

BlaschkeProduct BlaschkeProduct::from_polynomial(const DiskDomain& domain, const PolyC& p, double boundary_gap,
                                                 const RootOptions& options) {
    std::vector<Zero> inside;
    for (const auto& z : roots_with_multiplicity(p, options)) {
        const double gap = domain.distance_to_boundary(z.location);
        if (std::abs(gap) <= boundary_gap) {
            std::ostringstream msg;
            msg << "zero " << z.location << " lies within " << boundary_gap << " of the boundary";
            throw HypothesisFailure(msg.str());
        }
        if (gap > 0.0) inside.push_back(z);
    }
    return from_zeros(domain, ZeroList(std::move(inside), options.cluster_tol));
}

Complex BlaschkeProduct::operator()(Complex z) const {
    const Complex w = domain_.to_unit(z);
    Complex value{1.0, 0.0};
    for (const auto& zero : zeros_) {
        const Complex b = domain_.to_unit(zero.location);
        const Complex factor = (w - b) / (1.0 - std::conj(b) * w);
        for (int k = 0; k < zero.multiplicity; ++k) value *= factor;
    }
    return value;
}

Complex BlaschkeProduct::derivative(Complex z) const {
    const Complex w = domain_.to_unit(z);
    const auto& entries = zeros_.entries();
    std::vector<Complex> factors;
    std::vector<Complex> bs;
    for (const auto& zero : entries) {
        const Complex b = domain_.to_unit(zero.location);
        bs.push_back(b);
        factors.push_back((w - b) / (1.0 - std::conj(b) * w));
    }
    Complex sum{};
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const Complex denom = 1.0 - std::conj(bs[k]) * w;
        Complex term = static_cast<double>(entries[k].multiplicity) * (1.0 - std::norm(bs[k])) / (denom * denom);
        for (std::size_t j = 0; j < entries.size(); ++j) {
            const int power = entries[j].multiplicity - (j == k ? 1 : 0);
            for (int i = 0; i < power; ++i) term *= factors[j];
        }
        sum += term;
    }
    return sum / domain_.radius();
}

double BlaschkeProduct::boundary_derivative_modulus(Complex zeta) const {
    const Complex w = domain_.to_unit(zeta);
    double sum = 0.0;
    for (const auto& zero : zeros_) {
        const Complex b = domain_.to_unit(zero.location);
        sum += zero.multiplicity * (1.0 - std::norm(b)) / std::norm(1.0 - std::conj(b) * w);
    }
    return sum / domain_.radius();
}

double BlaschkeProduct::defect_ratio(Complex z) const {
    if (zeros_.empty()) return 0.0;
    const Complex w = domain_.to_unit(z);
    const double gap = 1.0 - std::norm(w);
    // Per factor, 1 - |F_k(w)|^2 = gap * kernel_k.
    double log_modulus_sq = 0.0;
    double kernel_sum = 0.0;
    for (const auto& zero : zeros_) {
        const Complex b = domain_.to_unit(zero.location);
        const double kernel = (1.0 - std::norm(b)) / std::norm(1.0 - std::conj(b) * w);
        kernel_sum += zero.multiplicity * kernel;
        log_modulus_sq += zero.multiplicity * std::log1p(-std::min(gap * kernel, 1.0));
    }
    if (gap <= 0.0) return kernel_sum;
    return -std::expm1(log_modulus_sq) / gap;
}

BlaschkeProduct lcm(std::span<const BlaschkeProduct> products) {
    if (products.empty()) return {};
    require_same_domain(products);
    std::vector<Zero> merged;
    for (const auto& b : products) {
        for (const auto& z : b.zeros()) {
            auto it = std::find_if(merged.begin(), merged.end(), [&](const Zero& e) {
                return std::abs(e.location - z.location) <= kClusterTol;
            });
            if (it == merged.end())
                merged.push_back(z);
            else
                it->multiplicity = std::max(it->multiplicity, z.multiplicity);
        }
    }
    return BlaschkeProduct::from_zeros(products.front().domain(), ZeroList(std::move(merged)));
}

BlaschkeProduct radical(const BlaschkeProduct& b) {
    std::vector<Zero> simple;
    for (const auto& z : b.zeros()) simple.push_back({z.location, 1});
    return BlaschkeProduct::from_zeros(b.domain(), ZeroList(std::move(simple)));
}

BlaschkeProduct product(std::span<const BlaschkeProduct> products) {
    if (products.empty()) return {};
    require_same_domain(products);
    std::vector<Zero> all;
    for (const auto& b : products) all.insert(all.end(), b.zeros().begin(), b.zeros().end());
    return BlaschkeProduct::from_zeros(products.front().domain(), ZeroList(std::move(all)));
}

BlaschkeProduct power(const BlaschkeProduct& b, int k) {
    if (k < 0) throw InputError("negative power of a Blaschke product");
    std::vector<Zero> zeros;
    if (k > 0)
        for (const auto& z : b.zeros()) zeros.push_back({z.location, z.multiplicity * k});
    return BlaschkeProduct::from_zeros(b.domain(), ZeroList(std::move(zeros)));
}

int count_zeros_argument_principle(const PolyC& f, const DiskDomain& domain, int n_samples) {
    if (f.is_zero()) throw InputError("argument principle for the zero polynomial");
    if (n_samples < 8) throw InputError("argument principle needs at least 8 samples");
    const PolyC df = localabc::derivative(f);
    Complex sum{};
    for (int k = 0; k < n_samples; ++k) {
        const double t = 2 * std::numbers::pi * k / n_samples;
        const Complex z = domain.boundary_point(t);
        const Complex v = f(z);
        if (v == Complex{}) throw NumericalFailure("f vanishes at a boundary sample", {t});
        // dz = i R e^{it} dt, so f'/f dz / (2 pi i) = f'/f R e^{it} dt / 2pi.
        sum += df(z) / v * (z - domain.center());
    }
    const double estimate = sum.real() / n_samples;
    const double nearest = std::round(estimate);
    if (std::abs(estimate - nearest) > 0.1 || !std::isfinite(estimate))
        throw NumericalFailure("argument-principle integral is not close to an integer", {estimate, sum.imag() / n_samples});
    return static_cast<int>(nearest);
}

}  // namespace localabc
