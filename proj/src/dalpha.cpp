#include "localabc/dalpha.hpp"

#include <cmath>
#include <numbers>

#include "localabc/abc_verifier.hpp"
#include "localabc/errors.hpp"

namespace localabc {

namespace {

// Neumaier compensated sum.
class Accumulator {
  public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Poisson extension of |f|^2 from the circle, evaluated at b.
double poisson_of_modulus_squared(const PolyC& f, Complex b) {
    const auto c = f.coeffs();
    Accumulator out;
    for (const auto& x : c) out.add(std::norm(x));
    Complex power = 1.0;
    for (std::size_t d = 1; d < c.size(); ++d) {
        power *= b;
        Complex inner = 0.0;
        for (std::size_t k = 0; k + d < c.size(); ++k) inner += c[k + d] * std::conj(c[k]);
        out.add(2.0 * (power * inner).real());
    }
    return out.value();
}

void require_unit(const BlaschkeProduct& theta) {
    if (!(theta.domain() == DiskDomain::unit())) throw InputError("D_alpha norms need a product on the unit disk");
}

}  // namespace

SeriesNorm dalpha_norm_product(const PolyC& f, const BlaschkeProduct& theta, double alpha,
                               const SeriesOptions& options) {
    require_alpha(alpha);
    require_unit(theta);
    if (f.is_zero()) return {};

    std::vector<Complex> stages;
    Accumulator h0, h1;
    const auto fc = f.coeffs();
    for (std::size_t k = 0; k < fc.size(); ++k) {
        h0.add(std::norm(fc[k]));
        h1.add(static_cast<double>(k) * std::norm(fc[k]));
    }
    for (const auto& z : theta.zeros()) {
        stages.insert(stages.end(), static_cast<std::size_t>(z.multiplicity), z.location);
        h1.add(z.multiplicity * poisson_of_modulus_squared(f, z.location));
    }
    const double total0 = h0.value();
    const double total1 = h1.value();

    std::vector<Complex> prev_x(stages.size()), prev_y(stages.size());
    Accumulator s0, s1, sa;
    SeriesNorm out;
    for (long n = 0; n < options.max_terms; ++n) {
        Complex x = static_cast<std::size_t>(n) < fc.size() ? fc[n] : Complex{};
        for (std::size_t s = 0; s < stages.size(); ++s) {
            // (z - b)/(1 - conj(b) z): y_n = x_{n-1} - b x_n + conj(b) y_{n-1}
            const Complex y = prev_x[s] - stages[s] * x + std::conj(stages[s]) * prev_y[s];
            prev_x[s] = x;
            prev_y[s] = y;
            x = y;
        }
        const double m = std::norm(x);
        const double k = static_cast<double>(n);
        s0.add(m);
        s1.add(k * m);
        if (n > 0) sa.add(std::pow(k, alpha) * m);

        const double t0 = std::max(0.0, total0 - s0.value());
        const double t1 = std::max(0.0, total1 - s1.value());
        out.value = sa.value();
        out.tail_bound = std::pow(t1, alpha) * std::pow(t0, 1.0 - alpha);
        out.terms = n + 1;
        if (out.tail_bound <= options.rel_tol * out.value) return out;
    }
    if (out.tail_bound > options.fail_tol * out.value)
        throw NumericalFailure("D_alpha series did not converge within max_terms", {out.tail_bound, out.value});
    return out;
}

SeriesNorm dalpha_norm_blaschke(const BlaschkeProduct& theta, double alpha, const SeriesOptions& options) {
    return dalpha_norm_product(PolyC::constant(1.0), theta, alpha, options);
}

double r_alpha(const PolyC& f, const BlaschkeProduct& theta, double alpha, const SeriesOptions& options) {
    require_alpha(alpha, true);
    return dalpha_norm_product(f, theta, alpha, options).value - dalpha_norm_coeff(f, alpha);
}

double r_alpha_area(const PolyC& f, const BlaschkeProduct& theta, double alpha, const QuadratureConfig& cfg) {
    require_alpha(alpha, true);
    require_unit(theta);
    cfg.validate();
    if (f.is_zero() || theta.is_constant()) return 0.0;
    // r = (1 + x)/2: (1 - r^2)^{-alpha} = 2^alpha (1 - x)^{-alpha} (1 + r)^{-alpha}, dr = dx/2.
    const auto rule = gauss_jacobi(cfg.radial_nodes, -alpha, 0.0);
    const int n = cfg.boundary_samples;
    const double two_pi = 2 * std::numbers::pi;
    double total = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double r = 0.5 * (rule.nodes[i] + 1.0);
        double ring = 0.0;
        for (int k = 0; k < n; ++k) {
            const Complex z = std::polar(r, two_pi * k / n);
            ring += std::norm(f(z)) * theta.defect_ratio(z);
        }
        total += rule.weights[i] * std::pow(2.0, alpha) * 0.5 * std::pow(1.0 + r, -alpha) * r * ring * two_pi / n;
    }
    if (!std::isfinite(total)) throw NumericalFailure("non-finite weighted area integral");
    return total;
}

bool division_monotonicity_check(const PolyC& f, const BlaschkeProduct& theta, double alpha,
                                 const SeriesOptions& options) {
    const double with = std::sqrt(dalpha_norm_product(f, theta, alpha, options).value);
    const double without = std::sqrt(dalpha_norm_coeff(f, alpha));
    return with >= without - 1e-9;
}

DalphaReport verify_theorem_41(const std::vector<PolyC>& fs, double alpha, const QuadratureConfig& cfg,
                               const SeriesOptions& options) {
    require_alpha(alpha, true);
    const AbcSystem system = build_system(fs, DiskDomain::unit());
    DalphaReport report;
    report.alpha = alpha;
    report.n = system.n();
    report.norm_B_lcm_sq = dalpha_norm_blaschke(system.b_lcm, alpha, options).value;
    report.norm_B_rad_sq = dalpha_norm_blaschke(system.b_rad, alpha, options).value;
    const PolyC& w = system.wronskian;
    if (!w.is_constant()) {
        const double inf = inf_boundary(w, system.domain, cfg);
        report.lambda_alpha = std::sqrt(dalpha_norm_coeff(w, alpha)) / inf;
        report.mu = sup_boundary(w, system.domain, cfg) / inf;
    }
    const double denominator =
        report.lambda_alpha * report.lambda_alpha + report.n * report.mu * report.mu * report.norm_B_rad_sq;
    report.ratio = denominator > 0.0 ? report.norm_B_lcm_sq / denominator : 0.0;
    return report;
}

std::vector<Complex> truncation_zeros(const std::string& rule, int count) {
    if (rule != "geometric" && rule != "origin" && rule != "power")
        throw InputError("unknown zero rule '" + rule + "'");
    if (count < 0) throw InputError("truncation level must be nonnegative");
    std::vector<Complex> out;
    for (int k = 1; k <= count; ++k) {
        if (rule == "geometric")
            out.emplace_back(1.0 - std::ldexp(1.0, -k));
        else if (rule == "origin")
            out.emplace_back(0.0);
        else
            out.emplace_back(1.0 - 1.0 / ((k + 1.0) * (k + 1.0)));
    }
    return out;
}

std::vector<TruncationRow> truncation_study(const TruncationSchedule& schedule, double alpha,
                                            const SeriesOptions& options) {
    require_alpha(alpha, true);
    truncation_zeros(schedule.zero_rule, 0);
    std::vector<TruncationRow> rows;
    for (const int level : schedule.truncation_levels) {
        const auto points = truncation_zeros(schedule.zero_rule, level);
        std::vector<Zero> zeros;
        TruncationRow row;
        row.K = level;
        for (const auto& a : points) {
            zeros.push_back({a, 1});
            const double gap = 1.0 - std::abs(a);
            row.criterion_sum += std::pow(gap, 1.0 - alpha);
            row.blaschke_sum += gap;
        }
        const auto theta = BlaschkeProduct::from_zeros(DiskDomain::unit(), ZeroList(std::move(zeros), 0.0));
        const auto norm = dalpha_norm_blaschke(theta, alpha, options);
        row.norm_sq = norm.value;
        row.tail_bound = norm.tail_bound;
        row.terms = norm.terms;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace localabc
