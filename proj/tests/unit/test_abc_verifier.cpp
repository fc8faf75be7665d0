#include <doctest.h>

#include <cmath>
#include <random>

#include "localabc/abc_verifier.hpp"
#include "localabc/errors.hpp"
#include "localabc/wronskian.hpp"
#include "support/testing.hpp"

using namespace localabc;

TEST_CASE("build_system: constant Wronskian equality family") {
    const AbcSystem s = build_system(equality_example_constant(2, 0.1), DiskDomain::unit());
    CHECK(s.n() == 2);
    CHECK(s.b_lcm.count_zeros() == 2);
    CHECK(s.b_lcm.zeros().multiplicity_at(0.0) == 2);
    CHECK(s.b_rad.count_zeros() == 1);
    REQUIRE(s.wronskian.is_constant());
    CHECK(std::abs(s.wronskian.coeff(0) - 0.01) < 1e-15);
    CHECK(s.parts.size() == 4);
    CHECK(s.parts.front().is_constant());
    CHECK(s.parts.back().is_constant());
}

TEST_CASE("build_system: monomial equality family") {
    const AbcSystem s = build_system(equality_example_monomial(2, 5, 0.1), DiskDomain::unit());
    CHECK(s.b_lcm.count_zeros() == 5);
    CHECK(s.b_lcm.count_distinct() == 1);
    CHECK(s.b_rad.count_zeros() == 1);
    REQUIRE(s.wronskian.degree() == 3);
    for (int k = 0; k < 3; ++k) CHECK(s.wronskian.coeff(k) == Complex{});
    CHECK(std::abs(s.wronskian.coeff(3) - 0.01 / 6.0) < 1e-15);
}

TEST_CASE("build_system: (1, z) needs a smaller disk") {
    const std::vector<PolyC> fs{PolyC{1.0}, PolyC{0.0, 1.0}};
    CHECK_THROWS_AS(build_system(fs, DiskDomain::unit()), HypothesisFailure);
    const AbcSystem s = build_system(fs, DiskDomain(0.0, 0.9));
    CHECK(s.f_sum == PolyC{1.0, 1.0});
    CHECK(s.b_lcm.count_zeros() == 1);
    CHECK(s.b_lcm.zeros().multiplicity_at(0.0) == 1);
    CHECK(s.b_rad.count_zeros() == 1);
    CHECK(s.wronskian == PolyC{1.0});
}

TEST_CASE("build_system: input and dependence errors") {
    CHECK_THROWS_AS(build_system({PolyC{1.0}}, DiskDomain::unit()), InputError);
    CHECK_THROWS_AS(build_system({PolyC{1.0}, PolyC{}}, DiskDomain::unit()), LinearDependence);
    CHECK_THROWS_AS(build_system({PolyC{1.0, 2.0}, PolyC{2.0, 4.0}}, DiskDomain(5.0, 1.0)), LinearDependence);
    CHECK_THROWS_AS(build_system({PolyC{1.0, 2.0}, PolyC{-1.0, -2.0}}, DiskDomain(5.0, 1.0)), LinearDependence);
}

TEST_CASE("lambda_mu_kappa: examples") {
    const NormQuotients c = lambda_mu_kappa(PolyC{0.01}, DiskDomain::unit());
    CHECK(c.lambda == 0.0);
    CHECK(c.mu == 1.0);
    CHECK(c.kappa == 0.0);

    const NormQuotients m = lambda_mu_kappa(PolyC::monomial(0.01 / 6.0, 3), DiskDomain::unit());
    CHECK(std::abs(m.lambda - std::sqrt(3.0)) < 1e-9);
    CHECK(std::abs(m.mu - 1.0) < 1e-12);
    CHECK(std::abs(m.kappa - 3.0) < 1e-9);

    const NormQuotients l = lambda_mu_kappa(PolyC{3.0, 1.0}, DiskDomain::unit());
    CHECK(std::abs(l.lambda - 0.5) < 1e-9);
    CHECK(std::abs(l.mu - 2.0) < 1e-9);
    CHECK(std::abs(l.kappa - 0.5) < 1e-9);

    CHECK_THROWS_AS(lambda_mu_kappa(PolyC{0.0, 1.0, 0.0, 1.0}, DiskDomain::unit()), HypothesisFailure);
}

TEST_CASE("verify: equality examples") {
    for (int n = 1; n <= 3; ++n) {
        const AbcCertificate c = verify(build_system(equality_example_constant(n, 0.1), DiskDomain::unit()));
        CHECK(c.hypothesis_ok);
        CHECK(c.lhs == n);
        CHECK(c.n_rad == 1);
        CHECK(std::abs(c.slack_21) < 1e-6);
        CHECK(std::abs(c.slack_22) < 1e-6);
        CHECK(c.pass_21);
        CHECK(c.pass_22);
        CHECK(c.divisibility_ok);
    }
    const AbcCertificate c = verify(build_system(equality_example_monomial(2, 5, 0.1), DiskDomain::unit()));
    CHECK(c.lhs == 5);
    CHECK(std::abs(c.rhs_21 - 5.0) < 1e-6);
    CHECK(std::abs(c.rhs_22 - 5.0) < 1e-6);
    CHECK(c.divisibility_ok);
}

TEST_CASE("check_divisibility: negative control") {
    AbcSystem s = build_system(equality_example_monomial(2, 5, 0.1), DiskDomain::unit());
    CHECK(check_divisibility(s));
    s.b_lcm = BlaschkeProduct::from_zeros(s.domain, ZeroList({{0.0, 6}}));
    CHECK_FALSE(check_divisibility(s));

    AbcSystem e1 = build_system(equality_example_constant(2, 0.1), DiskDomain::unit());
    CHECK(check_divisibility(e1));
    e1.b_lcm = BlaschkeProduct::from_zeros(e1.domain, ZeroList({{0.0, 3}}));
    CHECK_FALSE(check_divisibility(e1));
}

TEST_CASE("verify: hypothesis failure is reported, not thrown") {
    // W(1, z + z^3/3) = 1 + z^2 vanishes at +-i on the circle; no f_j does.
    const std::vector<PolyC> fs{PolyC{1.0}, PolyC{0.0, 1.0, 0.0, 1.0 / 3.0}};
    const AbcSystem s = build_system(fs, DiskDomain::unit());
    const AbcCertificate c = verify(s);
    CHECK_FALSE(c.hypothesis_ok);
    CHECK_FALSE(c.pass_21);
    CHECK_FALSE(c.pass_22);
    CHECK_FALSE(c.hypothesis_note.empty());
}

TEST_CASE("random admissible systems: inequalities, invariants, scale invariance") {
    std::mt19937_64 rng(41);
    const DiskDomain disk({0.5, -0.25}, 1.5);
    for (int trial = 0; trial < 25; ++trial) {
        const AbcSystem s = random_admissible_system(rng, trial % 2 ? disk : DiskDomain::unit());
        PolyC sum;
        for (const auto& f : s.fs) sum += f;
        CHECK(sum == s.f_sum);
        const AbcCertificate c = verify(s);
        REQUIRE(c.hypothesis_ok);
        CHECK(c.pass_21);
        CHECK(c.pass_22);
        CHECK(c.divisibility_ok);
        CHECK(c.mu >= 1.0);
        CHECK(c.lambda >= 0.0);
        CHECK(c.kappa >= 0.0);
        CHECK(std::abs(c.rhs_21 - (c.lambda * c.lambda + c.n * c.mu * c.mu * c.n_rad)) <= 1e-12 * c.rhs_21);

        const Complex scale(0.7, -1.9);
        std::vector<PolyC> scaled;
        for (const auto& f : s.fs) scaled.push_back(f * scale);
        const AbcCertificate d = verify(build_system(scaled, s.domain));
        CHECK(d.lhs == c.lhs);
        CHECK(d.n_rad == c.n_rad);
        CHECK(std::abs(d.lambda - c.lambda) <= 1e-9 * std::max(1.0, c.lambda));
        CHECK(std::abs(d.mu - c.mu) <= 1e-9 * c.mu);
        CHECK(std::abs(d.kappa - c.kappa) <= 1e-9 * std::max(1.0, c.kappa));
    }
}

TEST_CASE("column replacement by the sum leaves W unchanged up to sign") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<PolyQ> fs;
        for (int j = 0; j < 3; ++j) fs.push_back(testing_support::random_polyq(rng, 0, 4));
        PolyQ sum;
        for (const auto& f : fs) sum += f;
        const PolyQ w = wronskian(fs);
        for (std::size_t j = 0; j < fs.size(); ++j) {
            auto replaced = fs;
            replaced[j] = sum;
            const PolyQ v = wronskian(replaced);
            CHECK((v == w || v == -w));
        }
    }
}

TEST_CASE("disjoint zero sets: LCM is the product") {
    // f0 = (z - 0.3)^2, f1 = z + 0.4: f0 + f1 = z^2 + 0.4 z + 0.49 has zeros of modulus 0.7.
    const std::vector<PolyC> fs{PolyC{0.09, -0.6, 1.0}, PolyC{0.4, 1.0}};
    const AbcSystem s = build_system(fs, DiskDomain::unit());
    int total = 0, distinct = 0;
    for (const auto& b : s.parts) {
        total += b.count_zeros();
        distinct += b.count_distinct();
    }
    CHECK(s.b_lcm.count_zeros() == total);
    CHECK(s.b_rad.count_zeros() == distinct);
    CHECK(total == 5);
}
