#pragma once

#include <optional>
#include <vector>

#include "localabc/errors.hpp"
#include "localabc/polynomial.hpp"
#include "localabc/quadrature.hpp"

namespace localabc {

struct MasonReport {
    std::vector<int> degrees;
    int max_degree = 0;
    /// Distinct zeros of the product, or the sum of per-factor counts in
    /// relaxed mode.
    int n_distinct = 0;
    int bound = 0;
    bool holds = false;
    bool coprimality_ok = false;
    bool disjointness_ok = false;
    bool independence_ok = false;
    int n = 1;
    bool relaxed = false;
};

class MasonHypothesisError : public HypothesisFailure {
  public:
    enum class Kind { SumMismatch, AllConstant, NotCoprime, LinearlyDependent, ZeroSetsIntersect };

    MasonHypothesisError(Kind kind, const std::string& what) : HypothesisFailure(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

const char* to_string(MasonHypothesisError::Kind kind);

/// max deg < distinct zeros of abc, for relatively prime a + b = c, not all
/// constant. Bound is Ñ(abc) - 1 and `holds` means max deg <= bound.
MasonReport verify_theorem_A(const PolyQ& a, const PolyQ& b, const PolyQ& c);

/// max deg p_j <= n Ñ(p_0 ... p_{n+1}) - n(n+1)/2 with p_{n+1} the sum of the
/// n+1 inputs. `relaxed` only requires the n+2 zero sets to have empty common
/// intersection and replaces Ñ(product) by the sum of Ñ(p_j).
MasonReport verify_theorem_B(const std::vector<PolyQ>& ps, bool relaxed = false);

/// deg W <= d_0 + ... + d_n - n(n+1)/2. Throws MasonHypothesisError when W = 0.
bool wronskian_degree_bound_check(const std::vector<PolyQ>& ps);

struct LimitStudy {
    std::vector<double> radii;
    std::vector<double> kappa_values;
    std::vector<double> mu_values;
    /// Radii dropped because W has a zero within 1e-6 R of the circle.
    std::vector<double> skipped_radii;
    int kappa_limit_expected = 0;
    double mu_limit_expected = 1.0;
};

/// kappa and mu of W on the circles |z| = R, with kappa using the
/// length-normalised boundary integral (1/2pi) \oint |W'| |dz|.
///
/// Without radii the schedule is {4, 16, 64, 256} * (1 + largest zero modulus).
/// Throws InputError for non-increasing radii or a zero of W outside the
/// smallest circle.
LimitStudy limit_R_study(const PolyC& w, std::optional<std::vector<double>> radii = std::nullopt,
                         const QuadratureConfig& cfg = {});

/// Same, with W the exact Wronskian of `ps`; zeros of every p_j must also lie
/// inside the smallest circle.
LimitStudy limit_R_study(const std::vector<PolyQ>& ps, std::optional<std::vector<double>> radii = std::nullopt,
                         const QuadratureConfig& cfg = {});

}  // namespace localabc
