#include "localabc/abc_verifier.hpp"

#include <cmath>
#include <numbers>

#include "localabc/errors.hpp"
#include "localabc/wronskian.hpp"

namespace localabc {

namespace {

// Upper bound on the l1 norm of every term in the Laplace expansion of W.
double wronskian_magnitude(const std::vector<PolyC>& fs) {
    const std::size_t size = fs.size();
    double bound = 1.0;
    for (std::size_t k = 2; k <= size; ++k) bound *= static_cast<double>(k);
    for (const auto& f : fs) {
        double column = 0.0;
        PolyC d = f;
        for (std::size_t i = 0; i < size; ++i) {
            column = std::max(column, l1_norm(d));
            d = derivative(d);
        }
        bound *= column;
    }
    return bound;
}

PolyC random_polynomial(std::mt19937_64& rng, const DiskDomain& domain, const FamilyOptions& options) {
    std::uniform_int_distribution<int> degree_dist(0, options.max_degree);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const int degree = degree_dist(rng);
    const Complex lead = std::polar(0.5 + 1.5 * unit(rng), 2 * std::numbers::pi * unit(rng));
    PolyC p = PolyC::constant(lead);
    Complex previous{};
    for (int k = 0; k < degree; ++k) {
        Complex root;
        if (k > 0 && unit(rng) < options.repeat_probability) {
            root = previous;
        } else {
            const double r = options.root_radius_fraction * domain.radius() * std::sqrt(unit(rng));
            root = domain.center() + std::polar(r, 2 * std::numbers::pi * unit(rng));
        }
        p *= PolyC{-root, 1.0};
        previous = root;
    }
    return p;
}

}  // namespace

AbcSystem build_system(const std::vector<PolyC>& fs, const DiskDomain& domain, const BuildOptions& options) {
    if (fs.size() < 2) throw InputError("need at least two functions f_0, f_1");
    for (const auto& f : fs)
        if (f.is_zero()) throw LinearDependence("one of the functions is identically zero");

    AbcSystem system;
    system.domain = domain;
    system.fs = fs;
    for (const auto& f : fs) system.f_sum += f;
    if (system.f_sum.is_zero()) throw LinearDependence("f_0 + ... + f_n vanishes identically");

    system.wronskian = wronskian(fs);
    if (max_abs_coeff(system.wronskian) <= 1e-12 * wronskian_magnitude(fs))
        throw LinearDependence("the Wronskian vanishes identically (linearly dependent functions)");

    for (const auto& f : fs)
        system.parts.push_back(BlaschkeProduct::from_polynomial(domain, f, options.boundary_gap, options.roots));
    system.parts.push_back(BlaschkeProduct::from_polynomial(domain, system.f_sum, options.boundary_gap, options.roots));

    system.b_lcm = lcm(system.parts);
    system.b_rad = radical(product(system.parts));
    return system;
}

NormQuotients lambda_mu_kappa(const PolyC& w, const DiskDomain& domain, const QuadratureConfig& cfg) {
    if (w.is_zero()) throw HypothesisFailure("the Wronskian vanishes identically");
    if (w.is_constant()) return {0.0, 1.0, 0.0};
    const auto extrema = boundary_extrema(w, domain, cfg);
    if (!(extrema.inf >= 1e-12 * extrema.sup))
        throw HypothesisFailure("the Wronskian vanishes on the boundary (min |W| = " + std::to_string(extrema.inf) + ")");
    const PolyC dw = derivative(w);
    NormQuotients q;
    q.lambda = std::sqrt(dirichlet_norm_area(w, domain, cfg)) / extrema.inf;
    q.mu = extrema.sup / extrema.inf;
    q.kappa = boundary_integral([&](Complex z) { return std::abs(dw(z)); }, domain, cfg) / extrema.inf;
    return q;
}

bool check_divisibility(const AbcSystem& system) {
    const int n = system.n();
    for (const auto& zero : system.b_lcm.zeros()) {
        const int k = zero.multiplicity;
        const int rad_order = system.b_rad.zeros().multiplicity_at(zero.location) > 0 ? 1 : 0;
        const int w_order = vanishing_order(system.wronskian, zero.location, k);
        if (w_order + n * rad_order < k) return false;
    }
    return true;
}

AbcCertificate verify(const AbcSystem& system, const QuadratureConfig& cfg) {
    AbcCertificate cert;
    cert.n = system.n();
    cert.n_lcm = system.b_lcm.count_zeros();
    cert.n_rad = system.b_rad.count_zeros();
    cert.lhs = cert.n_lcm;
    cert.divisibility_ok = check_divisibility(system);

    NormQuotients q;
    try {
        q = lambda_mu_kappa(system.wronskian, system.domain, cfg);
    } catch (const HypothesisFailure& e) {
        cert.hypothesis_ok = false;
        cert.hypothesis_note = e.what();
        return cert;
    }
    cert.hypothesis_ok = true;
    cert.lambda = q.lambda;
    cert.mu = q.mu;
    cert.kappa = q.kappa;
    cert.rhs_21 = q.lambda * q.lambda + cert.n * q.mu * q.mu * cert.n_rad;
    cert.rhs_22 = q.kappa + cert.n * q.mu * cert.n_rad;
    cert.slack_21 = cert.rhs_21 - cert.lhs;
    cert.slack_22 = cert.rhs_22 - cert.lhs;
    cert.pass_21 = cert.lhs <= cert.rhs_21 + kPassTolerance;
    cert.pass_22 = cert.lhs <= cert.rhs_22 + kPassTolerance;
    return cert;
}

AbcSystem random_admissible_system(std::mt19937_64& rng, const DiskDomain& domain, const FamilyOptions& options,
                                   const QuadratureConfig& cfg) {
    if (options.max_n < 1 || options.max_degree < 0) throw InputError("invalid random family options");
    std::uniform_int_distribution<int> n_dist(1, options.max_n);
    std::string last_reason = "no attempt made";
    for (int attempt = 0; attempt < options.max_tries; ++attempt) {
        const int n = n_dist(rng);
        std::vector<PolyC> fs;
        for (int j = 0; j <= n; ++j) fs.push_back(random_polynomial(rng, domain, options));
        try {
            AbcSystem system = build_system(fs, domain);
            inf_boundary(system.wronskian, domain, cfg);
            return system;
        } catch (const HypothesisFailure& e) {
            last_reason = e.what();
        }
    }
    throw HypothesisFailure("no admissible system after " + std::to_string(options.max_tries) +
                            " draws; last reason: " + last_reason);
}

std::vector<PolyC> equality_example_constant(int n, double eps) {
    if (n < 1) throw InputError("equality example needs n >= 1");
    std::vector<PolyC> fs{PolyC::constant(1.0)};
    double factorial = 1.0;
    for (int j = 1; j <= n; ++j) {
        factorial *= j;
        fs.push_back(PolyC::monomial(eps / factorial, j));
    }
    return fs;
}

std::vector<PolyC> equality_example_monomial(int n, int m, double eps) {
    if (n < 1 || m <= n) throw InputError("equality example needs n >= 1 and m > n");
    std::vector<PolyC> fs = equality_example_constant(n, eps);
    double factorial = 1.0;
    for (int j = 2; j <= m; ++j) factorial *= j;
    fs.back() = PolyC::monomial(eps / factorial, m);
    return fs;
}

}  // namespace localabc
