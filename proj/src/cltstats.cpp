#include "symcheb/cltstats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "symcheb/chebyshev.hpp"
#include "symcheb/errors.hpp"
#include "symcheb/lattice.hpp"
#include "symcheb/symcheb.hpp"

namespace symcheb {
namespace {

// Raw weighted power sums of a lattice row: total weight, first moments,
// second-moment matrix and fourth moments of each coordinate.
template <class T>
struct PowerSums {
  explicit PowerSums(std::size_t k)
      : first(k, T(0)), second(k, std::vector<T>(k, T(0))), fourth(k, T(0)) {}

  void add(const ExponentVector& l, const T& w) {
    total += w;
    for (std::size_t i = 0; i < l.size(); ++i) {
      first[i] += w * l[i];
      for (std::size_t j = i; j < l.size(); ++j) second[i][j] += w * (l[i] * l[j]);
      const long sq = static_cast<long>(l[i]) * l[i];
      fourth[i] += w * T(sq * sq);
    }
  }

  T total = T(0);
  std::vector<T> first;
  std::vector<std::vector<T>> second;  // upper triangle
  std::vector<T> fourth;
};

void check_k(std::size_t k) {
  if (k == 0) throw UsageError("arity k must be positive");
}

void check_n_list(std::span<const unsigned> n_list) {
  if (n_list.empty()) throw UsageError("n list is empty");
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (n_list[i] == 0) throw UsageError("n values must be positive");
    if (i && n_list[i] <= n_list[i - 1]) throw UsageError("n values must be strictly increasing");
  }
}

unsigned exact_cap(const ConvergenceOptions& options, std::size_t k) {
  if (k == 1) return options.exact_cap_k1;
  if (k == 2) return options.exact_cap_k2;
  return options.exact_cap_higher;
}

// Relative to the measured value: a target 4.7x too large reads as 373%.
double relative_distance(double value, double target) { return std::abs(value - target) / value; }

struct Targets {
  double paper;
  double rederived;
};

ConvergenceRow row_from_exact(unsigned n, const PowerSums<Rational>& s, const Targets& targets) {
  ConvergenceRow row;
  row.n = n;
  const std::size_t k = s.first.size();
  Rational mean_abs = 0;
  for (const auto& f : s.first) mean_abs = std::max(mean_abs, Rational(abs(f / s.total)));
  const Rational m2 = s.second[0][0] / s.total;  // the mean is exactly zero, checked by callers
  Rational offdiag = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) offdiag = std::max(offdiag, Rational(abs(s.second[i][j] / s.total)));
  }
  const Rational m4 = s.fourth[0] / s.total;
  row.exact_m2_over_n = m2 / n;
  row.exact_max_offdiag = offdiag;
  row.exact_mean_abs_max = mean_abs;
  row.m2_over_n = row.exact_m2_over_n->get_d();
  row.kurtosis = Rational(m4 / (m2 * m2)).get_d();
  row.max_offdiag = offdiag.get_d();
  row.dist_paper = relative_distance(row.m2_over_n, targets.paper);
  row.dist_rederived = relative_distance(row.m2_over_n, targets.rederived);
  return row;
}

ConvergenceRow row_from_float(unsigned n, const PowerSums<double>& s, const Targets& targets) {
  ConvergenceRow row;
  row.n = n;
  const std::size_t k = s.first.size();
  const double m2 = s.second[0][0] / s.total;
  double offdiag = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) offdiag = std::max(offdiag, std::abs(s.second[i][j] / s.total));
  }
  row.m2_over_n = m2 / n;
  row.kurtosis = (s.fourth[0] / s.total) / (m2 * m2);
  row.max_offdiag = offdiag;
  row.dist_paper = relative_distance(row.m2_over_n, targets.paper);
  row.dist_rederived = relative_distance(row.m2_over_n, targets.rederived);
  return row;
}

// Power sums of the current row; `extra` adds a weight to one cell first
// (the free-group constant on the trivial class).
template <class T>
PowerSums<T> dense_sums(const WalkRecurrence<T>& walk, std::optional<std::pair<std::size_t, T>> extra = {}) {
  PowerSums<T> sums(walk.arity());
  const auto& cells = walk.cells();
  T w;
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    w = cells[idx];
    if (extra && extra->first == idx) w += extra->second;
    const ExponentVector l = walk.exponent(idx);
    if (w < 0) {
      throw DomainError("negative coefficient at " + format_exponent(l) + " for n = " +
                            std::to_string(walk.index()),
                        l);
    }
    sums.add(l, w);
  }
  return sums;
}

PowerSums<Rational> to_rational(const PowerSums<Integer>& s) {
  PowerSums<Rational> out(s.first.size());
  out.total = s.total;
  for (std::size_t i = 0; i < s.first.size(); ++i) {
    out.first[i] = s.first[i];
    out.fourth[i] = s.fourth[i];
    for (std::size_t j = 0; j < s.first.size(); ++j) out.second[i][j] = s.second[i][j];
  }
  return out;
}

PowerSums<Rational> sparse_sums(const LatticeDistribution& dist) {
  PowerSums<Rational> sums(dist.arity);
  for (const auto& [l, p] : dist.probabilities) sums.add(l, p);
  return sums;
}

// Advances `walk` through every n in the list, handing each requested row
// (with an optional extra weight at the origin) to `emit`.
template <class T, class Emit>
void drive(WalkRecurrence<T>& walk, std::span<const unsigned> n_list, Emit&& emit) {
  for (unsigned n : n_list) {
    while (walk.index() < n) walk.advance();
    emit(n);
  }
}

}  // namespace

LatticeDistribution distribution(unsigned n, const Rational& c, std::size_t k) {
  check_k(k);
  if (n == 0) throw UsageError("distribution requires n >= 1");
  const LaurentPoly poly = build({ChebKind::First, n, c, k});
  const PositivityReport report = positivity_report(poly, std::nullopt);
  if (!report.all_nonnegative) {
    throw DomainError("R_n has negative coefficient " + to_string(report.min_coefficient) + " at " +
                          format_exponent(*report.witness) + "; no distribution exists",
                      report.witness);
  }
  const Rational normalizer = evaluate(cheb_coeffs(ChebKind::First, n), c);
  if (normalizer == 0) throw DomainError("T_n(c) vanishes; distribution undefined");
  LatticeDistribution dist{k, n, {}};
  Rational total = 0;
  for (const auto& [e, v] : poly.terms()) {
    dist.probabilities.emplace(e, v / normalizer);
    total += v;
  }
  if (total != normalizer) throw std::logic_error("coefficient sum differs from T_n(c)");
  return dist;
}

LatticeDistribution distribution(const HomologyCountTable& table) {
  const Integer total = table.total();
  if (total == 0) throw DomainError("empty count table");
  LatticeDistribution dist{static_cast<std::size_t>(table.r), static_cast<unsigned>(table.n), {}};
  for (const auto& [e, v] : table.counts) dist.probabilities.emplace(e, Rational(v, total));
  for (auto& [e, p] : dist.probabilities) p.canonicalize();
  return dist;
}

MomentReport moments(const LatticeDistribution& dist) {
  const std::size_t k = dist.arity;
  MomentReport report;
  report.n = dist.n;
  report.mean.assign(k, 0);
  for (const auto& [l, p] : dist.probabilities) {
    for (std::size_t i = 0; i < k; ++i) report.mean[i] += p * l[i];
  }
  report.covariance.assign(k, std::vector<Rational>(k, 0));
  report.fourth_moment_diag.assign(k, 0);
  std::vector<Rational> centred(k);
  for (const auto& [l, p] : dist.probabilities) {
    for (std::size_t i = 0; i < k; ++i) centred[i] = l[i] - report.mean[i];
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) report.covariance[i][j] += p * centred[i] * centred[j];
      const Rational sq = centred[i] * centred[i];
      report.fourth_moment_diag[i] += p * sq * sq;
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Rational& var = report.covariance[i][i];
    report.m2_over_n.push_back(dist.n ? Rational(var / dist.n).get_d() : 0.0);
    report.kurtosis.push_back(var == 0 ? 0.0 : Rational(report.fourth_moment_diag[i] / (var * var)).get_d());
  }
  return report;
}

double char_fn(unsigned n, double c, std::size_t k, std::span<const double> theta) {
  check_k(k);
  if (theta.size() != k) throw UsageError("theta must have k entries");
  if (!(c > 1)) throw DomainError("char_fn requires c > 1");
  double y = 0;
  for (double t : theta) y += std::cos(t);
  y *= c / static_cast<double>(k);
  const auto t_n = [n](double x) {
    if (std::abs(x) >= 1.0) return eval_closed_T(n, x);
    return evaluate(cheb_coeffs(ChebKind::First, n), x);
  };
  return t_n(y) / eval_closed_T(n, c);
}

double sigma2_paper(double c, std::size_t k) {
  check_k(k);
  if (!(c > 1)) throw DomainError("sigma2_paper requires c > 1");
  return c / static_cast<double>(k) * (1.0 + std::sqrt((c + 1.0) / (c - 1.0)));
}

double sigma2_rederived(double c, std::size_t k) {
  check_k(k);
  if (!(c > 1)) throw DomainError("sigma2_rederived requires c > 1");
  return c / (static_cast<double>(k) * std::sqrt(c * c - 1.0));
}

std::strong_ordering compare_to_rederived(const Rational& x, const Rational& c, std::size_t k,
                                          const Rational& scale) {
  check_k(k);
  if (c <= 1) throw DomainError("compare_to_rederived requires c > 1");
  if (scale <= 0) throw UsageError("scale must be positive");
  if (x <= 0) return std::strong_ordering::less;
  // x <=> scale * c / (k sqrt(c^2 - 1)), both sides positive.
  const Rational kk = Rational(static_cast<long>(k));
  const Rational lhs = x * x * kk * kk * (c * c - 1);
  const Rational rhs = scale * scale * c * c;
  const int s = cmp(lhs, rhs);
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::vector<ConvergenceRow> convergence_report(const Rational& c, std::size_t k,
                                               std::span<const unsigned> n_list,
                                               ConvergenceMode mode,
                                               const ConvergenceOptions& options) {
  check_k(k);
  check_n_list(n_list);
  if (c <= 1) throw DomainError("convergence_report requires c > 1");
  const double cd = c.get_d();
  const Targets targets{sigma2_paper(cd, k), sigma2_rederived(cd, k)};
  std::vector<ConvergenceRow> rows;

  if (mode == ConvergenceMode::FloatNormalized) {
    if (k > 2) throw UsageError("float-normalized mode supports k = 1 or 2");
    const double kd = static_cast<double>(k);
    WalkRecurrence<double> walk(k, cd / kd, 1.0, 1.0, cd / (2 * kd), true);
    drive(walk, n_list, [&](unsigned n) { rows.push_back(row_from_float(n, dense_sums(walk), targets)); });
    return rows;
  }

  if (n_list.back() > exact_cap(options, k)) {
    throw UsageError("n = " + std::to_string(n_list.back()) + " exceeds the exact-mode ceiling " +
                     std::to_string(exact_cap(options, k)) + " for k = " + std::to_string(k) +
                     "; use float-normalized mode or raise the cap");
  }
  if (k <= 2) {
    // Q_m = (2kq)^m R_m stays integral: Q_{m+1} = 2p S Q_m - (2kq)^2 Q_{m-1}.
    const Integer p = c.get_num();
    const Integer s = 2 * static_cast<long>(k) * c.get_den();
    WalkRecurrence<Integer> walk(k, 2 * p, s * s, 1, p, false);
    drive(walk, n_list, [&](unsigned n) {
      rows.push_back(row_from_exact(n, to_rational(dense_sums(walk)), targets));
    });
    return rows;
  }
  for (unsigned n : n_list) rows.push_back(row_from_exact(n, sparse_sums(distribution(n, c, k)), targets));
  return rows;
}

std::vector<ConvergenceRow> freegroup_convergence(int r, std::span<const unsigned> n_list,
                                                  ConvergenceMode mode,
                                                  const ConvergenceOptions& options) {
  if (r < 2) throw UsageError("rank r must be at least 2");
  check_n_list(n_list);
  const std::size_t k = static_cast<std::size_t>(r);
  const int d = 2 * r - 1;
  const Targets targets{sigma2_paper(r / std::sqrt(static_cast<double>(d)), k), 1.0 / (r - 1)};
  std::vector<ConvergenceRow> rows;

  // Index of the origin in the rotated 2-variable grid of an even row.
  const auto origin = [](unsigned n) { return static_cast<std::size_t>(n / 2) * (n + 2); };

  if (mode == ConvergenceMode::FloatNormalized) {
    if (r != 2) throw UsageError("float-normalized free-group mode supports r = 2 only");
    WalkRecurrence<double> walk(k, 1.0, d, 2.0, 1.0, true);
    drive(walk, n_list, [&](unsigned n) {
      std::optional<std::pair<std::size_t, double>> extra;
      // The row sums to 1 in units of W_n(1) = d^n + 1.
      if (n % 2 == 0) extra.emplace(origin(n), 2.0 * (r - 1) / (std::pow(static_cast<double>(d), n) + 1.0));
      rows.push_back(row_from_float(n, dense_sums(walk, extra), targets));
    });
    return rows;
  }

  if (n_list.back() > exact_cap(options, k)) {
    throw UsageError("n = " + std::to_string(n_list.back()) + " exceeds the exact-mode ceiling " +
                     std::to_string(exact_cap(options, k)) + " for k = " + std::to_string(k) +
                     "; use float-normalized mode or raise the cap");
  }
  if (r == 2) {
    WalkRecurrence<Integer> walk(k, 1, d, 2, 1, false);
    drive(walk, n_list, [&](unsigned n) {
      std::optional<std::pair<std::size_t, Integer>> extra;
      if (n % 2 == 0) extra.emplace(origin(n), 2 * (r - 1));
      rows.push_back(row_from_exact(n, to_rational(dense_sums(walk, extra)), targets));
    });
    return rows;
  }
  for (unsigned n : n_list) {
    rows.push_back(row_from_exact(n, sparse_sums(distribution(counts_by_formula(r, static_cast<int>(n)))), targets));
  }
  return rows;
}

std::string to_csv(std::span<const ConvergenceRow> rows) {
  std::string out = "n,m2_over_n,kurtosis,max_offdiag,dist_paper,dist_rederived\n";
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%u,%.9g,%.9g,%.9g,%.9g,%.9g\n", row.n, row.m2_over_n, row.kurtosis,
                  row.max_offdiag, row.dist_paper, row.dist_rederived);
    out += buf;
  }
  return out;
}

}  // namespace symcheb
