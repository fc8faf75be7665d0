#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "localabc/abc_verifier.hpp"
#include "localabc/dalpha.hpp"
#include "localabc/errors.hpp"
#include "support/testing.hpp"

using namespace localabc;

namespace {

BlaschkeProduct on_unit(std::vector<Zero> zeros) {
    return BlaschkeProduct::from_zeros(DiskDomain::unit(), ZeroList(std::move(zeros)));
}

// Taylor coefficients of f * theta from samples on the unit circle (naive DFT).
// Aliasing decays like max|a|^N, negligible for the moduli used below.
double dft_norm(const PolyC& f, const BlaschkeProduct& theta, double alpha, int n = 1024) {
    std::vector<Complex> samples(n);
    for (int j = 0; j < n; ++j) {
        const Complex z = std::polar(1.0, 2 * std::numbers::pi * j / n);
        samples[j] = f(z) * theta(z);
    }
    double sum = 0.0;
    for (int k = 1; k < n / 2; ++k) {
        Complex c{};
        for (int j = 0; j < n; ++j) c += samples[j] * std::polar(1.0, -2 * std::numbers::pi * double(k) * j / n);
        sum += std::pow(k, alpha) * std::norm(c / double(n));
    }
    return sum;
}

}  // namespace

TEST_CASE("r_alpha: examples") {
    CHECK(std::abs(r_alpha(PolyC{1.0}, on_unit({{0.0, 1}}), 0.5) - 1.0) < 1e-12);
    CHECK(std::abs(r_alpha(PolyC{1.0}, on_unit({{0.0, 2}}), 0.5) - std::sqrt(2.0)) < 1e-12);
    CHECK(std::abs(r_alpha(PolyC{0.0, 1.0}, on_unit({}), 0.5)) < 1e-14);
    CHECK(r_alpha(PolyC{}, on_unit({{0.3, 2}}), 0.5) == 0.0);
    CHECK_THROWS_AS(r_alpha(PolyC{1.0}, on_unit({}), 1.0), InputError);
    CHECK_THROWS_AS(r_alpha(PolyC{1.0}, BlaschkeProduct::from_zeros(DiskDomain(0.0, 2.0), ZeroList{}), 0.5), InputError);
}

TEST_CASE("r_alpha_area: examples") {
    CHECK(r_alpha_area(PolyC{1.0}, on_unit({}), 0.5) == 0.0);
    CHECK(r_alpha_area(PolyC{}, on_unit({{0.2, 1}}), 0.5) == 0.0);
    // theta = z: integrand is (1 - r^2)^{-alpha}; dA integral = pi / (1 - alpha).
    CHECK(std::abs(r_alpha_area(PolyC{1.0}, on_unit({{0.0, 1}}), 0.5) - 2 * std::numbers::pi) < 1e-8);
    CHECK(std::abs(r_alpha_area(PolyC{1.0}, on_unit({{0.0, 1}}), 0.25) - std::numbers::pi / 0.75) < 1e-8);
}

TEST_CASE("series norms agree with a DFT oracle") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 12; ++trial) {
        const PolyC f = testing_support::random_polyc(rng, 4);
        const BlaschkeProduct theta = testing_support::random_blaschke(rng, DiskDomain::unit(), 4, 0.7, 2);
        const double alpha = 0.25 + 0.25 * (trial % 3);
        const SeriesNorm s = dalpha_norm_product(f, theta, alpha);
        const double oracle = dft_norm(f, theta, alpha);
        CHECK(std::abs(s.value - oracle) <= 1e-9 * std::max(1.0, oracle));
        CHECK(s.tail_bound <= 1e-10 * std::max(1.0, s.value) + 1e-300);
        CHECK(std::abs(dalpha_norm_blaschke(theta, alpha).value - dft_norm(PolyC{1.0}, theta, alpha)) <= 1e-9);
    }
    for (int m = 1; m <= 20; ++m)
        CHECK(std::abs(dalpha_norm_blaschke(on_unit({{0.0, m}}), 0.5).value - std::sqrt(double(m))) < 1e-12);
}

TEST_CASE("series norms stay accurate for zeros near the circle") {
    const BlaschkeProduct theta = on_unit({{0.97, 1}, {Complex(0.0, -0.95), 2}});
    const SeriesNorm s = dalpha_norm_blaschke(theta, 0.5);
    CHECK(s.tail_bound <= 1e-10 * s.value);
    CHECK(std::abs(s.value - dft_norm(PolyC{1.0}, theta, 0.5, 4096)) <= 1e-8 * s.value);
}

TEST_CASE("division monotonicity and nonnegativity") {
    CHECK(division_monotonicity_check(PolyC{1.0, 1.0}, on_unit({{0.0, 1}}), 0.5));
    CHECK(dalpha_norm_product(PolyC{1.0, 1.0}, on_unit({{0.0, 1}}), 0.5).value ==
          doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
    CHECK(division_monotonicity_check(PolyC{3.0}, on_unit({{0.4, 3}}), 0.3));

    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> alpha(0.05, 0.95);
    for (int trial = 0; trial < 60; ++trial) {
        const PolyC f = testing_support::random_polyc(rng, 5);
        const BlaschkeProduct theta = testing_support::random_blaschke(rng, DiskDomain::unit(), 5, 0.9, 2);
        const double a = alpha(rng);
        CHECK(division_monotonicity_check(f, theta, a));
        CHECK(r_alpha(f, theta, a) >= -1e-9);
    }
}

TEST_CASE("verify_theorem_41: reference ratios") {
    const DalphaReport e1 = verify_theorem_41(equality_example_constant(2, 0.1), 0.5);
    CHECK(e1.n == 2);
    CHECK(e1.lambda_alpha == 0.0);
    CHECK(std::abs(e1.mu - 1.0) < 1e-9);
    CHECK(std::abs(e1.ratio - std::sqrt(2.0) / 2.0) < 1e-4);

    const DalphaReport e2 = verify_theorem_41(equality_example_monomial(2, 5, 0.1), 0.5);
    CHECK(std::abs(e2.lambda_alpha * e2.lambda_alpha - std::sqrt(3.0)) < 1e-9);
    CHECK(std::abs(e2.ratio - std::sqrt(5.0) / (std::sqrt(3.0) + 2.0)) < 1e-4);

    CHECK_THROWS_AS(verify_theorem_41(equality_example_constant(2, 0.1), 1.0), InputError);
}

TEST_CASE("truncation_study") {
    CHECK_THROWS_AS(truncation_zeros("spiral", 3), InputError);
    CHECK(truncation_study({"geometric", {}}, 0.5).empty());

    const auto origin = truncation_study({"origin", {1, 3, 7}}, 0.5);
    REQUIRE(origin.size() == 3);
    for (const auto& row : origin) CHECK(std::abs(row.norm_sq - std::pow(row.K, 0.5)) < 1e-12);

    const auto rows = truncation_study({"geometric", {4, 8, 16}}, 0.5);
    REQUIRE(rows.size() == 3);
    double closed = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        closed = 0.0;
        for (int k = 1; k <= rows[i].K; ++k) closed += std::pow(2.0, -k / 2.0);
        CHECK(std::abs(rows[i].criterion_sum - closed) < 1e-12);
        if (i > 0) CHECK(rows[i].norm_sq > rows[i - 1].norm_sq);
    }
    CHECK(closed < 1.0 / (std::sqrt(2.0) - 1.0));
}
