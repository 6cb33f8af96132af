#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symcheb/freegroup.hpp"
#include "symcheb/laurent.hpp"
#include "symcheb/rational.hpp"

namespace symcheb {

/// p(l) = [x^l] R_n(c; x) / R_n(c; 1, ..., 1) on Z^k.
struct LatticeDistribution {
  std::size_t arity = 1;
  unsigned n = 0;
  std::map<ExponentVector, Rational> probabilities;
};

/// Throws DomainError with the witness exponent if R_n(c; .) has a negative
/// coefficient; UsageError for n = 0 or k = 0.
LatticeDistribution distribution(unsigned n, const Rational& c, std::size_t k);

/// Normalized homology count table (the free-group analogue of distribution()).
LatticeDistribution distribution(const HomologyCountTable& table);

struct MomentReport {
  unsigned n = 0;
  std::vector<Rational> mean;
  std::vector<std::vector<Rational>> covariance;  // E[l_i l_j]; the mean is zero
  std::vector<Rational> fourth_moment_diag;       // E[l_i^4]
  std::vector<double> m2_over_n;
  std::vector<double> kurtosis;  // E[l_i^4] / E[l_i^2]^2
};

MomentReport moments(const LatticeDistribution& dist);

/// T_n((c/k) sum_j cos theta_j) / T_n(c).
double char_fn(unsigned n, double c, std::size_t k, std::span<const double> theta);

/// Limit variance as printed with the CLT statement: (c/k)(1 + sqrt((c+1)/(c-1))).
double sigma2_paper(double c, std::size_t k);

/// Limit variance from expanding the characteristic function: c / (k sqrt(c^2-1)).
double sigma2_rederived(double c, std::size_t k);

/// Exact comparison of x against scale * c / (k sqrt(c^2 - 1)) for c > 1,
/// scale > 0 (squares both sides, no rounding).
std::strong_ordering compare_to_rederived(const Rational& x, const Rational& c, std::size_t k,
                                          const Rational& scale = 1);

enum class ConvergenceMode { Exact, FloatNormalized };

struct ConvergenceOptions {
  // Exact rows grow linearly in bit length; above these n the float mode is
  // required.
  unsigned exact_cap_k1 = 128;
  unsigned exact_cap_k2 = 32;
  unsigned exact_cap_higher = 16;
};

struct ConvergenceRow {
  unsigned n = 0;
  double m2_over_n = 0;
  double kurtosis = 0;
  double max_offdiag = 0;
  double dist_paper = 0;      // |m2/n - target_paper| / (m2/n)
  double dist_rederived = 0;  // |m2/n - target_rederived| / (m2/n)
  std::optional<Rational> exact_m2_over_n;
  std::optional<Rational> exact_max_offdiag;
  std::optional<Rational> exact_mean_abs_max;
};

/// Moments of the R_n(c; .) distributions at every n of an increasing list.
/// Exact mode uses integer-scaled dense rows for k <= 2 and sparse Laurent
/// arithmetic above that; float mode (k <= 2) renormalizes each row.
std::vector<ConvergenceRow> convergence_report(const Rational& c, std::size_t k,
                                               std::span<const unsigned> n_list,
                                               ConvergenceMode mode,
                                               const ConvergenceOptions& options = {});

/// Same report for the homology count tables of F_r; the rederived target is
/// 1/(r-1) and the paper target uses c = r/sqrt(2r-1), k = r.
std::vector<ConvergenceRow> freegroup_convergence(int r, std::span<const unsigned> n_list,
                                                  ConvergenceMode mode,
                                                  const ConvergenceOptions& options = {});

/// CSV with header n,m2_over_n,kurtosis,max_offdiag,dist_paper,dist_rederived
/// and 9 significant digits.
std::string to_csv(std::span<const ConvergenceRow> rows);

}  // namespace symcheb
