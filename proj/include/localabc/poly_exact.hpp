#pragma once

#include <utility>

#include "localabc/polynomial.hpp"

namespace localabc {

/// Division with remainder over Q(i). Throws InputError if `divisor` is zero.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& dividend, const PolyQ& divisor);

/// p divided by its leading coefficient; the zero polynomial is returned as is.
PolyQ make_monic(const PolyQ& p);

/// Monic gcd by the Euclidean algorithm. Throws InputError if both are zero.
PolyQ gcd_exact(const PolyQ& p, const PolyQ& q);

/// p / gcd(p, p'), monic. Its degree is the number of distinct complex zeros
/// of p. Throws InputError for the zero polynomial.
PolyQ squarefree_part(const PolyQ& p);

/// Number of distinct complex zeros of a nonzero polynomial.
int distinct_zero_count(const PolyQ& p);

}  // namespace localabc
