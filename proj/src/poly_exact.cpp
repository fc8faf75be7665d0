#include "localabc/poly_exact.hpp"

#include <vector>

#include "localabc/errors.hpp"

namespace localabc {

std::pair<PolyQ, PolyQ> divmod(const PolyQ& dividend, const PolyQ& divisor) {
    if (divisor.is_zero()) throw InputError("polynomial division by zero");
    const auto d = dividend.coeffs();
    const auto v = divisor.coeffs();
    if (d.size() < v.size()) return {PolyQ{}, dividend};

    std::vector<GaussRational> rem(d.begin(), d.end());
    std::vector<GaussRational> quot(d.size() - v.size() + 1);
    const GaussRational inv_lead = GaussRational(1) / divisor.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        GaussRational factor = rem[k + v.size() - 1] * inv_lead;
        if (factor.is_zero()) continue;
        for (std::size_t j = 0; j < v.size(); ++j) rem[k + j] -= factor * v[j];
        quot[k] = std::move(factor);
    }
    rem.resize(v.size() - 1);
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ make_monic(const PolyQ& p) {
    if (p.is_zero()) return p;
    return p * (GaussRational(1) / p.leading());
}

PolyQ gcd_exact(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() && q.is_zero()) throw InputError("gcd of two zero polynomials");
    PolyQ a = make_monic(p);
    PolyQ b = make_monic(q);
    while (!b.is_zero()) {
        PolyQ r = make_monic(divmod(a, b).second);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

PolyQ squarefree_part(const PolyQ& p) {
    if (p.is_zero()) throw InputError("squarefree part of the zero polynomial");
    if (p.is_constant()) return PolyQ::constant(GaussRational(1));
    const PolyQ g = gcd_exact(p, derivative(p));
    return make_monic(divmod(p, g).first);
}

int distinct_zero_count(const PolyQ& p) { return *squarefree_part(p).degree(); }

}  // namespace localabc
