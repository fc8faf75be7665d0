#include "localabc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>

#include "localabc/errors.hpp"

namespace localabc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// p and every derivative must fall below this fraction of their evaluation
// scale for a group of approximations to count as one multiple root.
constexpr double kMultipleRootTol = 1e-10;

// Residual gate on the final locations, relative to evaluation_scale.
constexpr double kResidualTol = 1e-8;

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Scale for p^(j)(z)/j!: sum_i |p_i| C(i,j) |z|^(i-j).
double taylor_scale(const PolyC& p, Complex z, int j) {
    const auto c = p.coeffs();
    const double r = std::abs(z);
    double s = 0.0;
    for (int i = static_cast<int>(c.size()) - 1; i >= j; --i) s = s * r + std::abs(c[i]) * binomial(i, j);
    return s;
}

Complex newton_polish(const PolyC& g, const PolyC& dg, Complex start, int max_iterations) {
    Complex z = start;
    double best = std::abs(g(z));
    Complex best_z = z;
    for (int it = 0; it < max_iterations && best > 0.0; ++it) {
        const Complex d = dg(z);
        if (d == Complex{}) break;
        const Complex step = g(z) / d;
        z -= step;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
        const double v = std::abs(g(z));
        if (v < best) {
            best = v;
            best_z = z;
        }
        if (std::abs(step) <= 4 * kEps * std::max(1.0, std::abs(z))) break;
    }
    return best_z;
}

// Parlett-Reinsch balancing with radix 2, in place.
void balance(Eigen::MatrixXcd& a) {
    const Eigen::Index n = a.rows();
    constexpr double radix = 2.0;
    constexpr double sqrdx = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double r = 0.0, c = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i).real()) + std::abs(a(j, i).imag());
                r += std::abs(a(i, j).real()) + std::abs(a(i, j).imag());
            }
            if (c == 0.0 || r == 0.0) continue;
            double g = r / radix;
            double f = 1.0;
            const double s = c + r;
            while (c < g) {
                f *= radix;
                c *= sqrdx;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sqrdx;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) /= f;
                a.col(i) *= f;
            }
        }
    }
}

bool residuals_ok(const PolyC& p, const std::vector<Complex>& roots, double tol) {
    for (const auto& z : roots) {
        const double scale = evaluation_scale(p, z);
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        if (std::abs(p(z)) > tol * scale) return false;
    }
    return true;
}

bool is_multiple_root(const std::vector<PolyC>& derivs, Complex c, int k) {
    double factorial = 1.0;
    for (int j = 0; j < k; ++j) {
        if (j > 0) factorial *= j;
        const double value = std::abs(derivs[j](c)) / factorial;
        if (value > kMultipleRootTol * taylor_scale(derivs[0], c, j)) return false;
    }
    return true;
}

// Groups approximate roots of q (q(0) != 0) into multiple roots.
std::vector<Zero> cluster(const PolyC& q, const std::vector<Complex>& raw, const RootOptions& options) {
    const int d = static_cast<int>(raw.size());
    std::vector<PolyC> derivs(d + 1);
    derivs[0] = q;
    for (int j = 1; j <= d; ++j) derivs[j] = derivative(derivs[j - 1]);

    std::vector<bool> used(raw.size(), false);
    std::vector<Zero> out;
    for (std::size_t seed = 0; seed < raw.size(); ++seed) {
        if (used[seed]) continue;
        std::vector<std::size_t> near;
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (!used[i]) near.push_back(i);
        std::stable_sort(near.begin(), near.end(), [&](std::size_t a, std::size_t b) {
            return std::abs(raw[a] - raw[seed]) < std::abs(raw[b] - raw[seed]);
        });

        int accepted = 1;
        Complex centre = newton_polish(derivs[0], derivs[1], raw[seed], options.max_iterations);
        for (int k = static_cast<int>(near.size()); k >= 2; --k) {
            Complex mean{};
            for (int i = 0; i < k; ++i) mean += raw[near[i]];
            mean /= static_cast<double>(k);
            double spread = 0.0;
            for (int i = 0; i < k; ++i) spread = std::max(spread, std::abs(raw[near[i]] - mean));
            if (spread > 0.1 * std::max(1.0, std::abs(mean))) continue;

            const Complex polished = newton_polish(derivs[k - 1], derivs[k], mean, options.max_iterations);
            const Complex c = std::abs(polished - mean) <= 2 * spread + options.cluster_tol ? polished : mean;
            // The group must be the k raw roots nearest its centre.
            double inner = 0.0, outer = INFINITY;
            for (std::size_t i = 0; i < near.size(); ++i) {
                const double dist = std::abs(raw[near[i]] - c);
                if (static_cast<int>(i) < k)
                    inner = std::max(inner, dist);
                else
                    outer = std::min(outer, dist);
            }
            if (inner >= outer) continue;
            if (spread <= options.cluster_tol || is_multiple_root(derivs, c, k)) {
                accepted = k;
                centre = c;
                break;
            }
        }
        for (int i = 0; i < accepted; ++i) used[near[i]] = true;
        out.push_back({centre, accepted});
    }
    return out;
}

}  // namespace

ZeroList::ZeroList(std::vector<Zero> zeros, double cluster_tol) {
    for (const auto& z : zeros) {
        if (z.multiplicity < 1) throw InputError("zero multiplicity must be positive");
        if (!std::isfinite(z.location.real()) || !std::isfinite(z.location.imag()))
            throw InputError("zero location must be finite");
    }
    // Repeat until no two entries are within tolerance; merging can bring a
    // centroid close to a third entry.
    bool merged = true;
    while (merged) {
        merged = false;
        std::vector<Zero> next;
        for (const auto& z : zeros) {
            auto it = std::find_if(next.begin(), next.end(),
                                   [&](const Zero& e) { return std::abs(e.location - z.location) <= cluster_tol; });
            if (it == next.end()) {
                next.push_back(z);
                continue;
            }
            const int m = it->multiplicity + z.multiplicity;
            it->location = (it->location * static_cast<double>(it->multiplicity) +
                            z.location * static_cast<double>(z.multiplicity)) /
                           static_cast<double>(m);
            it->multiplicity = m;
            merged = true;
        }
        zeros = std::move(next);
    }
    entries_ = std::move(zeros);
}

int ZeroList::total_multiplicity() const noexcept {
    int n = 0;
    for (const auto& z : entries_) n += z.multiplicity;
    return n;
}

int ZeroList::multiplicity_at(Complex z, double tol) const {
    for (const auto& e : entries_)
        if (std::abs(e.location - z) <= tol) return e.multiplicity;
    return 0;
}

double evaluation_scale(const PolyC& p, Complex z) {
    const auto c = p.coeffs();
    const double r = std::abs(z);
    double s = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * r + std::abs(*it);
    return s;
}

std::vector<Complex> companion_roots(const PolyC& p) {
    const auto deg = p.degree();
    if (!deg || *deg < 1) throw InputError("companion_roots needs a polynomial of degree >= 1");
    const int d = *deg;
    const auto c = p.coeffs();
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) m(i, d - 1) = -c[i] / p.leading();
    balance(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) throw NumericalFailure("companion matrix eigenvalue iteration failed");
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<Complex> aberth_roots(const PolyC& p, int max_iterations) {
    const auto deg = p.degree();
    if (!deg || *deg < 1) throw InputError("aberth_roots needs a polynomial of degree >= 1");
    const int d = *deg;
    const auto c = p.coeffs();
    const PolyC dp = derivative(p);

    double radius = 0.0;
    for (int k = 0; k < d; ++k)
        radius = std::max(radius, std::pow(std::abs(c[k] / p.leading()), 1.0 / (d - k)));
    radius = radius > 0.0 ? radius : 1.0;
    std::vector<Complex> z(d);
    for (int k = 0; k < d; ++k)
        z[k] = std::polar(radius, 2 * std::numbers::pi * k / d + 0.4);

    for (int it = 0; it < max_iterations; ++it) {
        double largest_step = 0.0;
        for (int k = 0; k < d; ++k) {
            const Complex v = p(z[k]);
            if (v == Complex{}) continue;
            const Complex ratio = v / dp(z[k]);
            Complex repulsion{};
            for (int j = 0; j < d; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const Complex step = ratio / (1.0 - ratio * repulsion);
            if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
                z[k] -= step;
                largest_step = std::max(largest_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
            }
        }
        if (largest_step <= 16 * kEps) return z;
    }
    std::vector<double> residuals;
    for (const auto& r : z) residuals.push_back(std::abs(p(r)) / evaluation_scale(p, r));
    if (residuals_ok(p, z, kResidualTol)) return z;
    throw NumericalFailure("Aberth-Ehrlich iteration did not converge", std::move(residuals));
}

ZeroList roots_with_multiplicity(const PolyC& p, const RootOptions& options) {
    if (p.is_zero()) throw InputError("roots of the zero polynomial are undefined");
    const int d = *p.degree();
    if (d == 0) return {};
    if (d > options.max_degree)
        throw NumericalFailure("degree " + std::to_string(d) + " exceeds the root-finding cap of " +
                               std::to_string(options.max_degree));

    const auto c = p.coeffs();
    std::size_t zero_order = 0;
    while (is_zero_coeff(c[zero_order])) ++zero_order;
    const PolyC q(std::vector<Complex>(c.begin() + static_cast<std::ptrdiff_t>(zero_order), c.end()));

    std::vector<Zero> zeros;
    if (zero_order > 0) zeros.push_back({Complex{}, static_cast<int>(zero_order)});
    if (*q.degree() > 0) {
        std::vector<Complex> raw;
        bool from_companion = true;
        try {
            raw = companion_roots(q);
        } catch (const NumericalFailure&) {
            from_companion = false;
        }
        // Companion eigenvalues of multiple roots are only accurate to
        // eps^(1/k); the loose gate here just rejects garbage.
        if (!from_companion || !residuals_ok(q, raw, 1e-4)) raw = aberth_roots(q, options.max_iterations);
        for (const auto& z : cluster(q, raw, options)) zeros.push_back(z);
    }

    ZeroList result(std::move(zeros), options.cluster_tol);
    std::vector<double> residuals;
    bool bad = false;
    for (const auto& z : result) {
        const double value = std::abs(p(z.location));
        const double r = value == 0.0 ? 0.0 : value / evaluation_scale(p, z.location);
        residuals.push_back(r);
        bad = bad || !(r <= kResidualTol);
    }
    if (bad) throw NumericalFailure("root refinement left large residuals", std::move(residuals));
    return result;
}

ZeroList roots_with_multiplicity(const PolyC& p, double cluster_tol) {
    RootOptions options;
    options.cluster_tol = cluster_tol;
    return roots_with_multiplicity(p, options);
}

PolyC from_roots(const ZeroList& zeros) {
    PolyC out = PolyC::constant(1.0);
    for (const auto& z : zeros)
        for (int k = 0; k < z.multiplicity; ++k) out *= PolyC{-z.location, 1.0};
    return out;
}

int vanishing_order(const PolyC& p, Complex z, int cap, double rel_tol) {
    if (p.is_zero()) return cap;
    std::vector<Complex> q(p.coeffs().begin(), p.coeffs().end());
    int order = 0;
    while (order < cap && q.size() > 1) {
        // Synthetic division by (x - z): quotient in q[1..], remainder q[0].
        std::vector<Complex> quotient(q.size() - 1);
        Complex acc{};
        for (std::size_t k = q.size(); k-- > 1;) {
            acc = acc * z + q[k];
            quotient[k - 1] = acc;
        }
        const Complex remainder = acc * z + q[0];
        const double scale = evaluation_scale(PolyC(q), z);
        if (std::abs(remainder) > rel_tol * scale) break;
        q = std::move(quotient);
        ++order;
    }
    return order;
}

}  // namespace localabc
