#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "localabc/gaussian_rational.hpp"

namespace localabc {

using Complex = std::complex<double>;

/// Dense univariate polynomial, coefficients in ascending power order.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial is
/// the empty coefficient vector and has no degree (`degree()` is nullopt).
template <class Coeff>
class Polynomial {
  public:
    using coeff_type = Coeff;

    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }

    static Polynomial monomial(Coeff c, std::size_t power) {
        std::vector<Coeff> v(power + 1, Coeff{});
        v[power] = std::move(c);
        return Polynomial(std::move(v));
    }

    /// The polynomial z.
    static Polynomial identity() { return monomial(Coeff{1}, 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    std::optional<int> degree() const noexcept {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<int>(coeffs_.size()) - 1;
    }

    /// Number of stored coefficients (degree + 1, or 0 for the zero polynomial).
    std::size_t size() const noexcept { return coeffs_.size(); }

    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of z^k; zero beyond the degree.
    Coeff coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Coeff{}; }

    const Coeff& leading() const { return coeffs_.back(); }

    bool is_constant() const noexcept { return coeffs_.size() <= 1; }

    /// Horner evaluation.
    template <class Point>
    Point operator()(const Point& z) const {
        Point acc{};
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Point(*it);
        return acc;
    }

    Polynomial& operator+=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff{});
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
        normalize();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& rhs) {
        if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Coeff{});
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
        normalize();
        return *this;
    }

    Polynomial& operator*=(const Polynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

    friend Polynomial operator-(Polynomial p) {
        for (auto& c : p.coeffs_) c = -c;
        return p;
    }

    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
        if (lhs.is_zero() || rhs.is_zero()) return {};
        std::vector<Coeff> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Coeff{});
        for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(Polynomial p, const Coeff& s) {
        for (auto& c : p.coeffs_) c *= s;
        p.normalize();
        return p;
    }

    friend Polynomial operator*(const Coeff& s, Polynomial p) { return std::move(p) * s; }

    friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        if (p.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
            if (is_zero_coeff(p.coeffs_[k])) continue;
            if (!first) os << " + ";
            first = false;
            os << p.coeffs_[k];
            if (k == 1) os << "*z";
            if (k > 1) os << "*z^" << k;
        }
        return os;
    }

  private:
    void normalize() {
        while (!coeffs_.empty() && is_zero_coeff(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<Coeff> coeffs_;
};

using PolyC = Polynomial<Complex>;
using PolyQ = Polynomial<GaussRational>;

/// k-th derivative (k = 0 returns p unchanged).
template <class Coeff>
Polynomial<Coeff> derivative(const Polynomial<Coeff>& p, std::size_t order = 1) {
    const auto c = p.coeffs();
    if (order == 0) return p;
    if (c.size() <= order) return {};
    std::vector<Coeff> out(c.size() - order);
    for (std::size_t k = order; k < c.size(); ++k) {
        long factor = 1;
        for (std::size_t j = 0; j < order; ++j) factor *= static_cast<long>(k - j);
        out[k - order] = c[k] * Coeff(factor);
    }
    return Polynomial<Coeff>(std::move(out));
}

/// Sum of |coefficients| (an upper bound for |p| on the closed unit disk).
double l1_norm(const PolyC& p);

/// max_k |p_k|
double max_abs_coeff(const PolyC& p);

/// Exact-to-floating conversion, rounding each rational part to nearest double.
PolyC to_complex(const PolyQ& p);

/// p(z0 + scale*w) as a polynomial in w.
PolyC compose_affine(const PolyC& p, Complex z0, Complex scale);

}  // namespace localabc
