#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "localabc/errors.hpp"
#include "localabc/polynomial.hpp"

namespace localabc {

namespace detail {

/// det[ fs[j]^(orders[i]) ]_{i,j} by Laplace expansion along successive rows,
/// memoised over the set of remaining columns. Every entry is a polynomial, so
/// the result is exact whenever the coefficient ring is.
template <class Coeff>
Polynomial<Coeff> derivative_determinant(std::span<const Polynomial<Coeff>> fs, std::span<const std::size_t> orders) {
    using Poly = Polynomial<Coeff>;
    const std::size_t size = fs.size();
    if (size == 0) throw InputError("Wronskian of an empty list");
    if (orders.size() != size) throw InputError("derivative_determinant: matrix is not square");
    if (size > 20) throw InputError("Wronskian of more than 20 functions is not supported");

    std::vector<std::vector<Poly>> entry(size, std::vector<Poly>(size));
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) entry[i][j] = derivative(fs[j], orders[i]);

    const std::uint32_t full = (std::uint32_t{1} << size) - 1;
    std::vector<Poly> minor(std::size_t{1} << size);
    minor[0] = Poly::constant(Coeff{1});

    // minor[cols] uses the last popcount(cols) rows. Subsets of `cols` are
    // numerically smaller, so they are already filled.
    for (std::uint32_t cols = 1; cols <= full; ++cols) {
        const auto count = static_cast<std::size_t>(std::popcount(cols));
        const std::size_t row = size - count;
        Poly acc;
        int position = 0;
        for (std::size_t j = 0; j < size; ++j) {
            const std::uint32_t bit = std::uint32_t{1} << j;
            if ((cols & bit) == 0) continue;
            const Poly& rest = minor[cols & ~bit];
            if (!entry[row][j].is_zero() && !rest.is_zero()) {
                Poly term = entry[row][j] * rest;
                if (position % 2 == 0)
                    acc += term;
                else
                    acc -= term;
            }
            ++position;
        }
        minor[cols] = std::move(acc);
    }
    return minor[full];
}

}  // namespace detail

/// W(f_0, ..., f_n): determinant of the matrix whose i-th row holds the i-th
/// derivatives. The zero polynomial signals linear dependence.
template <class Coeff>
Polynomial<Coeff> wronskian(std::span<const Polynomial<Coeff>> fs) {
    std::vector<std::size_t> orders(fs.size());
    for (std::size_t i = 0; i < orders.size(); ++i) orders[i] = i;
    return detail::derivative_determinant(fs, std::span<const std::size_t>(orders));
}

template <class Coeff>
Polynomial<Coeff> wronskian(const std::vector<Polynomial<Coeff>>& fs) {
    return wronskian(std::span<const Polynomial<Coeff>>(fs));
}

/// W' computed directly as the Wronskian-like determinant whose last row holds
/// (n+1)-st derivatives instead of n-th ones.
template <class Coeff>
Polynomial<Coeff> wronskian_derivative(std::span<const Polynomial<Coeff>> fs) {
    std::vector<std::size_t> orders(fs.size());
    for (std::size_t i = 0; i < orders.size(); ++i) orders[i] = i;
    if (!orders.empty()) orders.back() += 1;
    return detail::derivative_determinant(fs, std::span<const std::size_t>(orders));
}

template <class Coeff>
Polynomial<Coeff> wronskian_derivative(const std::vector<Polynomial<Coeff>>& fs) {
    return wronskian_derivative(std::span<const Polynomial<Coeff>>(fs));
}

}  // namespace localabc
