#include "localabc/gaussian_rational.hpp"

#include <utility>

#include "localabc/errors.hpp"

namespace localabc {

GaussRational::GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussRational GaussRational::from_fraction(long num, long den) {
    if (den == 0) throw InputError("zero denominator in rational coefficient");
    return GaussRational(mpq_class(num, den));
}

GaussRational& GaussRational::operator+=(const GaussRational& rhs) {
    re_ += rhs.re_;
    im_ += rhs.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& rhs) {
    re_ -= rhs.re_;
    im_ -= rhs.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& rhs) {
    mpq_class re = re_ * rhs.re_ - im_ * rhs.im_;
    mpq_class im = re_ * rhs.im_ + im_ * rhs.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& rhs) {
    if (rhs.is_zero()) throw InputError("division by zero in Q(i)");
    const mpq_class n = rhs.norm();
    mpq_class re = (re_ * rhs.re_ + im_ * rhs.im_) / n;
    mpq_class im = (im_ * rhs.re_ - re_ * rhs.im_) / n;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) {
    if (sgn(x.im_) == 0) return os << x.re_;
    return os << "(" << x.re_ << (sgn(x.im_) < 0 ? " - " : " + ") << abs(x.im_) << "i)";
}

}  // namespace localabc
