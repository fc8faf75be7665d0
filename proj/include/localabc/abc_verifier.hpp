#pragma once

#include <random>
#include <string>
#include <vector>

#include "localabc/blaschke.hpp"
#include "localabc/quadrature.hpp"

namespace localabc {

/// Absolute slack allowed on the right-hand sides before a pass flag drops.
inline constexpr double kPassTolerance = 1e-6;

/// f_0..f_n on a disk together with everything derived from them.
struct AbcSystem {
    DiskDomain domain;
    std::vector<PolyC> fs;              // f_0 .. f_n
    PolyC f_sum;                        // f_{n+1} = f_0 + ... + f_n
    std::vector<BlaschkeProduct> parts; // B_0 .. B_{n+1}
    BlaschkeProduct b_lcm;              // LCM(B_0, ..., B_{n+1})
    BlaschkeProduct b_rad;              // rad(B_0 B_1 ... B_{n+1})
    PolyC wronskian;                    // W(f_0, ..., f_n)

    int n() const noexcept { return static_cast<int>(fs.size()) - 1; }
};

struct AbcCertificate {
    int n = 0;
    int n_lcm = 0;  // N(B_lcm), also the left-hand side
    int n_rad = 0;  // N(B_rad)
    double lambda = 0.0;
    double mu = 1.0;
    double kappa = 0.0;
    int lhs = 0;
    double rhs_21 = 0.0;  // lambda^2 + n mu^2 N(B_rad)
    double rhs_22 = 0.0;  // kappa + n mu N(B_rad)
    double slack_21 = 0.0;
    double slack_22 = 0.0;
    bool pass_21 = false;
    bool pass_22 = false;
    bool hypothesis_ok = false;
    bool divisibility_ok = false;
    std::string hypothesis_note;
};

struct BuildOptions {
    /// Zeros of any f_j closer than this to the boundary are rejected.
    double boundary_gap = 1e-6;
    RootOptions roots;
};

/// Assembles f_{n+1}, the Blaschke products B_j, their LCM and radical and the
/// Wronskian.
///
/// Throws InputError when fewer than two functions are given, LinearDependence
/// when the Wronskian vanishes identically, and HypothesisFailure when some
/// f_j has a zero within `boundary_gap` of the boundary.
AbcSystem build_system(const std::vector<PolyC>& fs, const DiskDomain& domain, const BuildOptions& options = {});

struct NormQuotients {
    double lambda = 0.0;
    double mu = 1.0;
    double kappa = 0.0;
};

/// lambda = ||W'||_{L^2(Omega)} / min|W|, mu = max|W| / min|W| and
/// kappa = ||W'||_{L^1(boundary)} / min|W|, extrema over the boundary. A constant
/// W gives exactly (0, 1, 0) without quadrature. Throws HypothesisFailure
/// when W vanishes somewhere on the boundary.
NormQuotients lambda_mu_kappa(const PolyC& w, const DiskDomain& domain, const QuadratureConfig& cfg = {});

/// True iff at every zero of B_lcm with multiplicity k,
/// ord(W) + n * ord(B_rad) >= k, i.e. B_lcm divides W B_rad^n.
bool check_divisibility(const AbcSystem& system);

/// Evaluates both inequalities. A hypothesis failure (W vanishing on the
/// boundary) is reported through `hypothesis_ok = false`, never thrown.
AbcCertificate verify(const AbcSystem& system, const QuadratureConfig& cfg = {});

struct FamilyOptions {
    int max_n = 3;
    int max_degree = 4;
    /// Roots are drawn uniformly from the concentric disk of this relative radius.
    double root_radius_fraction = 0.8;
    /// Chance that a drawn root is repeated, producing multiple zeros.
    double repeat_probability = 0.3;
    int max_tries = 100;
};

/// Random f_0..f_n built from their roots, redrawn until build_system succeeds
/// and W does not vanish on the boundary. Throws HypothesisFailure after
/// `max_tries` unsuccessful draws.
AbcSystem random_admissible_system(std::mt19937_64& rng, const DiskDomain& domain, const FamilyOptions& options = {},
                                   const QuadratureConfig& cfg = {});

/// f_0 = 1, f_j = eps z^j / j! (j = 1..n): equality case with constant W.
std::vector<PolyC> equality_example_constant(int n, double eps);

/// As above for j < n, with f_n = eps z^m / m! (m > n): W = c z^{m-n}.
std::vector<PolyC> equality_example_monomial(int n, int m, double eps);

}  // namespace localabc
