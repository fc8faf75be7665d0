#include "localabc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "localabc/errors.hpp"

namespace localabc {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kInvPhi = 0.6180339887498949;

// Golden-section search for the maximum of h (or minimum, when sign = -1) on
// [lo, hi]; returns the best value seen, including `start`.
double golden_polish(const std::function<double(double)>& h, double lo, double hi, double start, double sign) {
    double best = sign * h(start);
    double x1 = hi - kInvPhi * (hi - lo);
    double x2 = lo + kInvPhi * (hi - lo);
    double f1 = sign * h(x1);
    double f2 = sign * h(x2);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvPhi * (hi - lo);
            f1 = sign * h(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvPhi * (hi - lo);
            f2 = sign * h(x2);
        }
        best = std::max({best, f1, f2});
    }
    return sign * best;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

void QuadratureConfig::validate() const {
    if (boundary_samples < 64 || !is_power_of_two(boundary_samples))
        throw InputError("boundary_samples must be a power of two >= 64");
    if (radial_nodes < 2) throw InputError("radial_nodes must be >= 2");
    if (refinement_limit < 0) throw InputError("refinement_limit must be >= 0");
    if (!(rel_tol > 0.0)) throw InputError("rel_tol must be positive");
}

void require_alpha(double alpha, bool open) {
    const bool ok = open ? (alpha > 0.0 && alpha < 1.0) : (alpha > 0.0 && alpha <= 1.0);
    if (!ok) throw InputError(open ? "alpha must lie in (0, 1)" : "alpha must lie in (0, 1]");
}

QuadratureRule gauss_jacobi(int n, double a, double b) {
    if (n < 1) throw InputError("Gauss-Jacobi rule needs at least one node");
    if (!(a > -1.0) || !(b > -1.0)) throw InputError("Jacobi exponents must exceed -1");
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(std::max(n - 1, 1));
    const double ab = a + b;
    diag(0) = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        const double s = 2.0 * k + ab;
        diag(k) = (b * b - a * a) / (s * (s + 2.0));
        const double beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        sub(k - 1) = std::sqrt(beta);
    }
    QuadratureRule rule;
    const double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                                std::lgamma(ab + 2.0));
    if (n == 1) {
        rule.nodes = {diag(0)};
        rule.weights = {mu0};
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw NumericalFailure("Golub-Welsch eigenproblem failed");
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = solver.eigenvalues()(i);
        const double v = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    return rule;
}

double boundary_integral(const BoundaryFunction& g, const DiskDomain& domain, const QuadratureConfig& cfg) {
    cfg.validate();
    int n = cfg.boundary_samples;
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double v = g(domain.boundary_point(kTwoPi * k / n));
        sum += v;
        abs_sum += std::abs(v);
    }
    double estimate = domain.radius() * sum / n;
    if (cfg.refinement_limit == 0) {
        if (!std::isfinite(estimate)) throw NumericalFailure("non-finite boundary integrand", {estimate});
        return estimate;
    }
    double previous = estimate;
    for (int level = 0; level < cfg.refinement_limit; ++level) {
        // The doubled rule reuses the existing samples; only midpoints are new.
        for (int k = 0; k < n; ++k) {
            const double v = g(domain.boundary_point(kTwoPi * (k + 0.5) / n));
            sum += v;
            abs_sum += std::abs(v);
        }
        n *= 2;
        const double refined = domain.radius() * sum / n;
        if (!std::isfinite(refined)) throw NumericalFailure("non-finite boundary integrand", {estimate, refined});
        const double scale = domain.radius() * abs_sum / n;
        if (std::abs(refined - estimate) <= cfg.rel_tol * scale) return refined;
        previous = estimate;
        estimate = refined;
    }
    throw NumericalFailure("boundary integral did not converge", {previous, estimate});
}

BoundaryExtrema boundary_extrema(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg) {
    cfg.validate();
    if (f.is_constant()) {
        const double v = std::abs(f.coeff(0));
        return {v, v};
    }
    auto modulus = [&](double t) { return std::abs(f(domain.boundary_point(t))); };

    int n = cfg.boundary_samples;
    double sup = -1.0, inf = std::numeric_limits<double>::infinity();
    double t_sup = 0.0, t_inf = 0.0;
    auto scan = [&](int count, double offset) {
        for (int k = 0; k < count; ++k) {
            const double t = kTwoPi * (k + offset) / count;
            const double v = modulus(t);
            if (v > sup) {
                sup = v;
                t_sup = t;
            }
            if (v < inf) {
                inf = v;
                t_inf = t;
            }
        }
    };
    scan(n, 0.0);
    for (int level = 0; level < cfg.refinement_limit; ++level) {
        const double old_sup = sup, old_inf = inf;
        scan(n, 0.5);
        n *= 2;
        if (sup - old_sup <= cfg.rel_tol * sup && old_inf - inf <= cfg.rel_tol * sup) break;
    }
    const double h = kTwoPi / n;
    BoundaryExtrema out;
    out.sup = golden_polish(modulus, t_sup - h, t_sup + h, t_sup, 1.0);
    out.inf = golden_polish(modulus, t_inf - h, t_inf + h, t_inf, -1.0);
    return out;
}

double sup_boundary(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg) {
    return boundary_extrema(f, domain, cfg).sup;
}

double inf_boundary(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg) {
    const auto e = boundary_extrema(f, domain, cfg);
    if (!(e.inf >= 1e-12 * e.sup) || e.sup == 0.0)
        throw HypothesisFailure("function vanishes on the boundary (min |f| = " + std::to_string(e.inf) + ")");
    return e.inf;
}

double area_integral(const AreaFunction& g, const DiskDomain& domain, const QuadratureConfig& cfg) {
    cfg.validate();
    const auto rule = gauss_legendre(cfg.radial_nodes);
    const int n = cfg.boundary_samples;
    const double radius = domain.radius();
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double rho = 0.5 * radius * (rule.nodes[i] + 1.0);
        double ring = 0.0;
        for (int k = 0; k < n; ++k) ring += g(domain.center() + std::polar(rho, kTwoPi * k / n));
        // dA = rho drho dt; drho = (R/2) dx; (1/pi) * (2pi/n) = 2/n.
        total += rule.weights[i] * 0.5 * radius * rho * ring * 2.0 / n;
    }
    if (!std::isfinite(total)) throw NumericalFailure("non-finite area integral");
    return total;
}

double dirichlet_norm_area(const std::function<Complex(Complex)>& derivative, const DiskDomain& domain,
                           const QuadratureConfig& cfg) {
    return area_integral([&](Complex z) { return std::norm(derivative(z)); }, domain, cfg);
}

double dirichlet_norm_area(const PolyC& f, const DiskDomain& domain, const QuadratureConfig& cfg) {
    if (f.is_constant()) return 0.0;
    const PolyC df = derivative(f);
    return dirichlet_norm_area([&](Complex z) { return df(z); }, domain, cfg);
}

double dirichlet_norm_area(const BlaschkeProduct& b, const QuadratureConfig& cfg) {
    if (b.is_constant()) return 0.0;
    return dirichlet_norm_area([&](Complex z) { return b.derivative(z); }, b.domain(), cfg);
}

double dalpha_norm_coeff(const PolyC& f, double alpha) {
    require_alpha(alpha);
    const auto c = f.coeffs();
    double sum = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) sum += std::pow(static_cast<double>(k), alpha) * std::norm(c[k]);
    return sum;
}

double dalpha_norm_area(const PolyC& f, double alpha, const QuadratureConfig& cfg) {
    require_alpha(alpha);
    cfg.validate();
    if (f.is_constant()) return 0.0;
    const PolyC df = derivative(f);
    const double exponent = 1.0 - alpha;
    // r = (1 + x)/2 so that (1 - r)^{1-alpha} = 2^{-(1-alpha)} (1 - x)^{1-alpha}.
    const auto rule = gauss_jacobi(cfg.radial_nodes, exponent, 0.0);
    const int n = cfg.boundary_samples;
    const double jacobian = 0.5 * std::pow(2.0, -exponent);
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = 0.5 * (rule.nodes[i] + 1.0);
        double ring = 0.0;
        for (int k = 0; k < n; ++k) ring += std::norm(df(std::polar(r, kTwoPi * k / n)));
        total += rule.weights[i] * jacobian * r * ring * 2.0 / n;
    }
    if (!std::isfinite(total)) throw NumericalFailure("non-finite weighted area integral");
    return total;
}

}  // namespace localabc
