#pragma once

#include <complex>
#include <ostream>

#include <gmpxx.h>

namespace localabc {

/// Exact element of Q(i): re + im*i with arbitrary-precision rational parts.
class GaussRational {
  public:
    GaussRational() = default;
    GaussRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    GaussRational(mpq_class re, mpq_class im = 0);

    static GaussRational from_fraction(long num, long den);

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    GaussRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

    GaussRational& operator+=(const GaussRational& rhs);
    GaussRational& operator-=(const GaussRational& rhs);
    GaussRational& operator*=(const GaussRational& rhs);
    /// Throws InputError on division by zero.
    GaussRational& operator/=(const GaussRational& rhs);

    friend GaussRational operator+(GaussRational lhs, const GaussRational& rhs) { return lhs += rhs; }
    friend GaussRational operator-(GaussRational lhs, const GaussRational& rhs) { return lhs -= rhs; }
    friend GaussRational operator*(GaussRational lhs, const GaussRational& rhs) { return lhs *= rhs; }
    friend GaussRational operator/(GaussRational lhs, const GaussRational& rhs) { return lhs /= rhs; }
    friend GaussRational operator-(const GaussRational& x) { return {-x.re_, -x.im_}; }
    friend bool operator==(const GaussRational& lhs, const GaussRational& rhs) {
        return lhs.re_ == rhs.re_ && lhs.im_ == rhs.im_;
    }

    friend std::ostream& operator<<(std::ostream& os, const GaussRational& x);

  private:
    mpq_class re_{0};
    mpq_class im_{0};
};

inline bool is_zero_coeff(const GaussRational& c) { return c.is_zero(); }

inline bool is_zero_coeff(const std::complex<double>& c) { return c == std::complex<double>{}; }

}  // namespace localabc
