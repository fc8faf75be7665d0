#include "localabc/mason_stothers.hpp"

#include <algorithm>
#include <cmath>

#include "localabc/blaschke.hpp"
#include "localabc/poly_exact.hpp"
#include "localabc/roots.hpp"
#include "localabc/wronskian.hpp"

namespace localabc {

namespace {

using Kind = MasonHypothesisError::Kind;

template <class Coeff>
int degree_of(const Polynomial<Coeff>& p) {
    return p.degree().value_or(0);
}

bool coprime(const PolyQ& p, const PolyQ& q) {
    if (p.is_zero() && q.is_zero()) return false;
    return gcd_exact(p, q).is_constant();
}

PolyQ product_of(const std::vector<PolyQ>& ps) {
    PolyQ out = PolyQ::constant(GaussRational(1));
    for (const auto& p : ps) out *= p;
    return out;
}

double max_root_modulus(const PolyC& p) {
    double out = 0.0;
    if (p.is_constant()) return out;
    for (const auto& z : roots_with_multiplicity(p)) out = std::max(out, std::abs(z.location));
    return out;
}

LimitStudy run_study(const PolyC& w, double zero_modulus, std::optional<std::vector<double>> radii,
                     const QuadratureConfig& cfg) {
    if (w.is_zero()) throw MasonHypothesisError(Kind::LinearlyDependent, "the Wronskian vanishes identically");
    std::vector<double> schedule;
    if (radii) {
        schedule = *radii;
    } else {
        const double rho = 1.0 + zero_modulus;
        schedule = {4 * rho, 16 * rho, 64 * rho, 256 * rho};
    }
    if (schedule.empty()) throw InputError("radius schedule is empty");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (!(schedule[i] > 0.0) || !std::isfinite(schedule[i])) throw InputError("radii must be positive and finite");
        if (i > 0 && !(schedule[i] > schedule[i - 1])) throw InputError("radii must be strictly increasing");
    }
    if (!(zero_modulus < schedule.front()))
        throw InputError("every zero must lie inside the smallest circle");

    LimitStudy study;
    study.kappa_limit_expected = degree_of(w);
    const ZeroList w_zeros = w.is_constant() ? ZeroList{} : roots_with_multiplicity(w);
    const PolyC dw = derivative(w);
    for (const double r : schedule) {
        const bool near_circle = std::any_of(w_zeros.begin(), w_zeros.end(), [&](const Zero& z) {
            return std::abs(std::abs(z.location) - r) <= 1e-6 * r;
        });
        if (near_circle) {
            study.skipped_radii.push_back(r);
            continue;
        }
        double kappa = 0.0, mu = 1.0;
        if (!w.is_constant()) {
            const DiskDomain disk({0.0, 0.0}, r);
            const auto extrema = boundary_extrema(w, disk, cfg);
            kappa = boundary_integral([&](Complex z) { return std::abs(dw(z)); }, disk, cfg) / extrema.inf;
            mu = extrema.sup / extrema.inf;
        }
        study.radii.push_back(r);
        study.kappa_values.push_back(kappa);
        study.mu_values.push_back(mu);
    }
    return study;
}

}  // namespace

const char* to_string(MasonHypothesisError::Kind kind) {
    switch (kind) {
        case Kind::SumMismatch: return "sum mismatch";
        case Kind::AllConstant: return "all constant";
        case Kind::NotCoprime: return "not coprime";
        case Kind::LinearlyDependent: return "linearly dependent";
        case Kind::ZeroSetsIntersect: return "zero sets intersect";
    }
    return "unknown";
}

MasonReport verify_theorem_A(const PolyQ& a, const PolyQ& b, const PolyQ& c) {
    if (!(a + b == c)) throw MasonHypothesisError(Kind::SumMismatch, "a + b != c");
    if (a.is_constant() && b.is_constant() && c.is_constant())
        throw MasonHypothesisError(Kind::AllConstant, "a, b, c are all constant");
    if (!coprime(a, b) || !coprime(a, c) || !coprime(b, c))
        throw MasonHypothesisError(Kind::NotCoprime, "a, b, c are not coprime");

    MasonReport report;
    report.n = 1;
    report.degrees = {degree_of(a), degree_of(b), degree_of(c)};
    report.max_degree = *std::max_element(report.degrees.begin(), report.degrees.end());
    report.n_distinct = distinct_zero_count(a * b * c);
    report.bound = report.n_distinct - 1;
    report.holds = report.max_degree <= report.bound;
    report.coprimality_ok = true;
    report.disjointness_ok = true;
    report.independence_ok = true;
    return report;
}

MasonReport verify_theorem_B(const std::vector<PolyQ>& ps, bool relaxed) {
    if (ps.size() < 2) throw InputError("generalized Mason-Stothers needs at least two polynomials");
    const int n = static_cast<int>(ps.size()) - 1;
    if (wronskian(ps).is_zero())
        throw MasonHypothesisError(Kind::LinearlyDependent, "the polynomials are linearly dependent (W = 0)");

    std::vector<PolyQ> all = ps;
    PolyQ sum;
    for (const auto& p : ps) sum += p;
    all.push_back(sum);

    MasonReport report;
    report.n = n;
    report.relaxed = relaxed;
    report.independence_ok = true;

    bool pairwise = true;
    for (std::size_t j = 0; j < all.size() && pairwise; ++j)
        for (std::size_t k = j + 1; k < all.size() && pairwise; ++k) pairwise = coprime(all[j], all[k]);
    PolyQ common = all.front();
    for (std::size_t j = 1; j < all.size(); ++j) common = gcd_exact(common, all[j]);
    const bool common_empty = common.is_constant();

    report.coprimality_ok = common_empty;
    report.disjointness_ok = pairwise;
    if (relaxed ? !common_empty : !pairwise)
        throw MasonHypothesisError(Kind::ZeroSetsIntersect,
                                   relaxed ? "the zero sets have a common point" : "two zero sets intersect");

    for (const auto& p : all) report.degrees.push_back(degree_of(p));
    report.max_degree = *std::max_element(report.degrees.begin(), report.degrees.end());
    if (relaxed) {
        for (const auto& p : all) report.n_distinct += distinct_zero_count(p);
    } else {
        report.n_distinct = distinct_zero_count(product_of(all));
    }
    report.bound = n * report.n_distinct - n * (n + 1) / 2;
    report.holds = report.max_degree <= report.bound;
    return report;
}

bool wronskian_degree_bound_check(const std::vector<PolyQ>& ps) {
    if (ps.empty()) throw InputError("need at least one polynomial");
    const PolyQ w = wronskian(ps);
    if (w.is_zero()) throw MasonHypothesisError(Kind::LinearlyDependent, "the Wronskian vanishes identically");
    const int n = static_cast<int>(ps.size()) - 1;
    int total = 0;
    for (const auto& p : ps) total += degree_of(p);
    return degree_of(w) <= total - n * (n + 1) / 2;
}

LimitStudy limit_R_study(const PolyC& w, std::optional<std::vector<double>> radii, const QuadratureConfig& cfg) {
    return run_study(w, max_root_modulus(w), std::move(radii), cfg);
}

LimitStudy limit_R_study(const std::vector<PolyQ>& ps, std::optional<std::vector<double>> radii,
                         const QuadratureConfig& cfg) {
    if (ps.empty()) throw InputError("need at least one polynomial");
    const PolyC w = to_complex(wronskian(ps));
    double modulus = max_root_modulus(w);
    for (const auto& p : ps)
        if (!p.is_zero()) modulus = std::max(modulus, max_root_modulus(to_complex(p)));
    return run_study(w, modulus, std::move(radii), cfg);
}

}  // namespace localabc
