#include "localabc/polynomial.hpp"

#include <cmath>

namespace localabc {

double l1_norm(const PolyC& p) {
    double s = 0.0;
    for (const auto& c : p.coeffs()) s += std::abs(c);
    return s;
}

double max_abs_coeff(const PolyC& p) {
    double m = 0.0;
    for (const auto& c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

PolyC to_complex(const PolyQ& p) {
    std::vector<Complex> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(c.to_complex());
    return PolyC(std::move(out));
}

PolyC compose_affine(const PolyC& p, Complex z0, Complex scale) {
    const PolyC inner{z0, scale};
    PolyC acc;
    const auto c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + PolyC::constant(*it);
    return acc;
}

}  // namespace localabc
