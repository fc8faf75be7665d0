#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "localabc/abc_verifier.hpp"
#include "localabc/mason_stothers.hpp"
#include "localabc/poly_exact.hpp"
#include "localabc/roots.hpp"
#include "localabc/wronskian.hpp"
#include "support/testing.hpp"

using namespace localabc;
using testing_support::q_poly;
using testing_support::random_polyq;

namespace {

MasonHypothesisError::Kind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const MasonHypothesisError& e) {
        return e.kind();
    }
    FAIL("expected a hypothesis failure");
    return MasonHypothesisError::Kind::SumMismatch;
}

}  // namespace

TEST_CASE("Mason-Stothers: examples") {
    const MasonReport r = verify_theorem_A(q_poly({0, 0, 1}), q_poly({1, 0, -1}), q_poly({1}));
    CHECK(r.max_degree == 2);
    CHECK(r.n_distinct == 3);
    CHECK(r.bound == 2);
    CHECK(r.holds);

    const PolyQ a = q_poly({1, 0, -2, 0, 1});
    const PolyQ b = q_poly({0, 0, 4});
    const PolyQ c = q_poly({1, 0, 2, 0, 1});
    const MasonReport p = verify_theorem_A(a, b, c);
    CHECK(p.max_degree == 4);
    CHECK(p.n_distinct == 5);
    CHECK(p.holds);
    CHECK(p.n_distinct - p.max_degree == 1);

    using Kind = MasonHypothesisError::Kind;
    CHECK(kind_of([] { verify_theorem_A(q_poly({0, 1}), q_poly({0, 1}), q_poly({0, 2})); }) == Kind::NotCoprime);
    CHECK(kind_of([] { verify_theorem_A(q_poly({1}), q_poly({2}), q_poly({3})); }) == Kind::AllConstant);
    CHECK(kind_of([] { verify_theorem_A(q_poly({0, 1}), q_poly({1}), q_poly({0, 2})); }) == Kind::SumMismatch);
}

TEST_CASE("Mason-Stothers: random coprime triples") {
    std::mt19937_64 rng(51);
    int done = 0;
    while (done < 60) {
        const PolyQ a = random_polyq(rng, 1, 5);
        const PolyQ c = random_polyq(rng, 1, 5);
        if (!gcd_exact(a, c).is_constant()) continue;
        const MasonReport r = verify_theorem_A(a, c - a, c);
        CHECK(r.holds);
        CHECK(r.max_degree < r.n_distinct);
        ++done;
    }
}

TEST_CASE("generalized Mason-Stothers: examples") {
    const MasonReport r = verify_theorem_B({q_poly({0, 0, 1}), q_poly({1, 0, -1})});
    CHECK(r.n == 1);
    CHECK(r.holds);
    CHECK(r.n_distinct == 3);

    const MasonReport s = verify_theorem_B({q_poly({1}), q_poly({0, 1}), q_poly({1, -2, 1})});
    CHECK(s.n == 2);
    CHECK(s.degrees == std::vector<int>{0, 1, 2, 2});
    CHECK(s.max_degree == 2);
    CHECK(s.n_distinct == 4);
    CHECK(s.bound == 5);
    CHECK(s.holds);

    CHECK(kind_of([] { verify_theorem_B({q_poly({1}), q_poly({0, 1}), q_poly({0, 1})}); }) ==
          MasonHypothesisError::Kind::LinearlyDependent);
    // z and z^2 share the zero 0.
    CHECK(kind_of([] { verify_theorem_B({q_poly({0, 1}), q_poly({0, 0, 1})}); }) ==
          MasonHypothesisError::Kind::ZeroSetsIntersect);
}

TEST_CASE("generalized Mason-Stothers: relaxed mode") {
    const std::vector<PolyQ> disjoint{q_poly({1}), q_poly({0, 1}), q_poly({1, -2, 1})};
    const MasonReport strict = verify_theorem_B(disjoint);
    const MasonReport relaxed = verify_theorem_B(disjoint, true);
    CHECK(relaxed.relaxed);
    CHECK(relaxed.n_distinct == strict.n_distinct);

    // z and z(z - 1) share 0, but 1 + z does not vanish there: relaxed only.
    const std::vector<PolyQ> shared{q_poly({0, 1}), q_poly({0, -1, 1}), q_poly({1, 1})};
    CHECK_THROWS_AS(verify_theorem_B(shared), MasonHypothesisError);
    const MasonReport r = verify_theorem_B(shared, true);
    CHECK(r.holds);
    CHECK_FALSE(r.disjointness_ok);
    int sum = 0;
    PolyQ total;
    for (const auto& p : shared) {
        sum += distinct_zero_count(p);
        total += p;
    }
    sum += distinct_zero_count(total);
    CHECK(r.n_distinct == sum);
}

TEST_CASE("generalized Mason-Stothers: random admissible tuples and the degree bound") {
    std::mt19937_64 rng(52);
    int done = 0;
    while (done < 40) {
        const int n = 1 + done % 3;
        std::vector<PolyQ> ps;
        for (int j = 0; j <= n; ++j) ps.push_back(random_polyq(rng, 0, 4, 3));
        MasonReport r;
        try {
            r = verify_theorem_B(ps);
        } catch (const MasonHypothesisError&) {
            continue;
        }
        CHECK(r.holds);
        CHECK(wronskian_degree_bound_check(ps));
        ++done;
    }
}

TEST_CASE("wronskian_degree_bound_check: examples") {
    CHECK(wronskian_degree_bound_check({q_poly({1}), q_poly({0, 1}), q_poly({0, 0, 1})}));
    CHECK(wronskian(std::vector<PolyQ>{q_poly({1}), q_poly({0, 1}), q_poly({0, 0, 1})}) == q_poly({2}));
    CHECK(wronskian_degree_bound_check({q_poly({0, 1}), q_poly({0, 0, 1})}));
    CHECK_THROWS_AS(wronskian_degree_bound_check({q_poly({0, 1}), q_poly({0, 2})}), MasonHypothesisError);
}

TEST_CASE("limit_R_study: examples") {
    const PolyC w{0.0, 1.0, 0.0, 1.0};
    const LimitStudy far = limit_R_study(w, std::vector<double>{1000.0});
    REQUIRE(far.radii.size() == 1);
    CHECK(std::abs(far.kappa_values[0] - 3.0) < 0.01);
    CHECK(std::abs(far.mu_values[0] - 1.0) < 0.01);
    CHECK(far.kappa_limit_expected == 3);

    const LimitStudy constant = limit_R_study(PolyC{5.0}, std::vector<double>{2.0, 7.0});
    CHECK(constant.kappa_values == std::vector<double>{0.0, 0.0});
    CHECK(constant.mu_values == std::vector<double>{1.0, 1.0});

    const LimitStudy mono = limit_R_study(PolyC{0.0, 1.0}, std::vector<double>{10.0, 100.0});
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(std::abs(mono.kappa_values[i] - 1.0) < 1e-12);
        CHECK(std::abs(mono.mu_values[i] - 1.0) < 1e-12);
    }

    CHECK_THROWS_AS(limit_R_study(w, std::vector<double>{10.0, 5.0}), InputError);
    CHECK_THROWS_AS(limit_R_study(w, std::vector<double>{0.5, 5.0}), InputError);

    const LimitStudy skipped = limit_R_study(PolyC{-9.99999999, 1.0}, std::vector<double>{10.0, 20.0});
    CHECK(skipped.skipped_radii == std::vector<double>{10.0});
    CHECK(skipped.radii == std::vector<double>{20.0});

    const LimitStudy defaults = limit_R_study(w);
    REQUIRE(defaults.radii.size() == 4);
    CHECK(std::abs(defaults.radii[0] - 8.0) < 1e-9);
}

TEST_CASE("limit_R_study: convergence is monotone on a doubling schedule") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<PolyQ> ps{random_polyq(rng, 0, 3, 3, false), random_polyq(rng, 1, 4, 3, false)};
        const PolyQ wq = wronskian(ps);
        if (wq.is_zero() || wq.is_constant()) continue;
        double largest = 0.0;
        for (const auto& z : roots_with_multiplicity(to_complex(wq))) largest = std::max(largest, std::abs(z.location));
        for (const auto& p : ps)
            if (!p.is_constant())
                for (const auto& z : roots_with_multiplicity(to_complex(p)))
                    largest = std::max(largest, std::abs(z.location));
        std::vector<double> radii;
        for (double r = 10.0 * std::max(largest, 1.0); radii.size() < 6; r *= 2.0) radii.push_back(r);
        const LimitStudy s = limit_R_study(ps, radii);
        REQUIRE(s.radii.size() == radii.size());
        for (std::size_t i = 1; i < s.radii.size(); ++i) {
            CHECK(std::abs(s.kappa_values[i] - s.kappa_limit_expected) <
                  std::abs(s.kappa_values[i - 1] - s.kappa_limit_expected));
            CHECK(std::abs(s.mu_values[i] - 1.0) < std::abs(s.mu_values[i - 1] - 1.0));
        }
    }
}

TEST_CASE("certificates on large disks count every zero") {
    const std::vector<PolyC> fs{PolyC{1.0}, PolyC{0.0, 1.0}, PolyC{1.0, -2.0, 1.0}};
    const AbcCertificate c = verify(build_system(fs, DiskDomain(0.0, 10.0)));
    CHECK(c.lhs == 0 + 1 + 2 + 2);
    CHECK(c.pass_21);
    CHECK(c.pass_22);
}
