#include "symcheb/symcheb.hpp"

#include <future>
#include <stdexcept>

#include "symcheb/errors.hpp"

namespace symcheb {
namespace {

// Calls visit(m, P_m) for m = 0..n, stopping early when visit returns false.
template <class Visit>
void for_each_power(const SymChebSpec& spec, Visit&& visit) {
  if (spec.k == 0) throw UsageError("arity k must be positive");
  const Rational scale = spec.c / Rational(2 * static_cast<long>(spec.k));
  const LaurentPoly twice_a = LaurentPoly::symmetric_sum(spec.k) * Rational(2 * scale);

  LaurentPoly prev = LaurentPoly::constant(spec.k, 1);
  if (!visit(0u, prev) || spec.n == 0) return;
  LaurentPoly cur = spec.kind == ChebKind::First ? twice_a * Rational(1, 2) : twice_a;
  if (!visit(1u, cur)) return;
  for (unsigned m = 1; m < spec.n; ++m) {
    LaurentPoly next = twice_a * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
    if (!visit(m + 1, cur)) return;
  }
}

// Minimal coefficient among terms accepted by `pred`, ties broken toward
// the lexicographically largest exponent.
template <class Pred>
std::optional<std::pair<ExponentVector, Rational>> smallest(const LaurentPoly& p, Pred&& pred) {
  std::optional<std::pair<ExponentVector, Rational>> best;
  for (const auto& [e, v] : p.terms()) {
    if (!pred(v)) continue;
    if (!best || v <= best->second) best.emplace(e, v);
  }
  return best;
}

}  // namespace

LaurentPoly build(const SymChebSpec& spec) {
  LaurentPoly out(spec.k == 0 ? 1 : spec.k);
  for_each_power(spec, [&](unsigned m, const LaurentPoly& p) {
    if (m == spec.n) out = p;
    return true;
  });
  return out;
}

const Rational& UnivariateCoeffTable::at(const std::vector<std::vector<Rational>>& rows, long n,
                                         long j) {
  static const Rational zero = 0;
  if (n < 0 || n >= static_cast<long>(rows.size()) || j < -n || j > n) return zero;
  return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(j + n)];
}

UnivariateCoeffTable univariate_table(ChebKind kind, const Rational& c, unsigned n_max) {
  UnivariateCoeffTable table{kind, c, {}, {}};
  auto& a = table.a_rows;
  a.reserve(n_max + 1);
  a.push_back({Rational(1)});
  for (long n = 0; n < static_cast<long>(n_max); ++n) {
    std::vector<Rational> row(static_cast<std::size_t>(2 * n + 3));
    for (long j = -(n + 1); j <= n + 1; ++j) {
      row[static_cast<std::size_t>(j + n + 1)] =
          c * (UnivariateCoeffTable::at(a, n, j - 1) + UnivariateCoeffTable::at(a, n, j + 1)) -
          UnivariateCoeffTable::at(a, n - 1, j);
    }
    a.push_back(std::move(row));
  }
  if (kind == ChebKind::First) {
    auto& b = table.b_rows;
    b.reserve(a.size());
    for (long n = 0; n < static_cast<long>(a.size()); ++n) {
      std::vector<Rational> row(static_cast<std::size_t>(2 * n + 1));
      for (long j = -n; j <= n; ++j) {
        Rational& cell = row[static_cast<std::size_t>(j + n)];
        if (n == 0) {
          cell = 1;  // T_0 = U_0, while U_{-2} = -1 is not in the table
        } else {
          cell = (UnivariateCoeffTable::at(a, n, j) - UnivariateCoeffTable::at(a, n - 2, j)) / 2;
        }
      }
      b.push_back(std::move(row));
    }
  }
  return table;
}

Rational fullform_coeff(unsigned n, const Rational& c, long j) {
  if (n == 0) throw UsageError("fullform_coeff: n must be positive; R_0 = 1 comes from build");
  if (c == 0) throw UsageError("fullform_coeff: c must be nonzero");
  const long nn = static_cast<long>(n);
  if (j < -nn || j > nn) throw UsageError("fullform_coeff: |j| must not exceed n");
  if ((nn - j) % 2 != 0) return 0;

  const Rational step = -1 / (c * c);
  Rational factor = 1;  // (-1/c^2)^m
  Rational sum = 0;
  for (long m = 0; m <= nn / 2; ++m, factor *= step) {
    const long top = nn - 2 * m;
    const long lower = top - j;  // twice the lower index; parity matches nn - j
    const Integer inner = binomial(top, lower / 2);
    if (lower < 0 || inner == 0) continue;
    Rational ratio(Integer(nn), Integer(nn - m));
    ratio.canonicalize();
    sum += factor * ratio * Rational(binomial(nn - m, m) * inner);
  }
  return pow(c, nn) * sum / 2;
}

PositivityReport positivity_report(const LaurentPoly& poly, std::optional<unsigned> univariate_degree) {
  PositivityReport report;
  if (poly.is_zero()) {
    report.min_coefficient = 0;
  } else {
    auto low = smallest(poly, [](const Rational&) { return true; });
    report.min_coefficient = low->second;
    if (low->second < 0) {
      report.all_nonnegative = false;
      report.witness = low->first;
    }
  }
  if (univariate_degree) {
    if (poly.arity() != 1) throw UsageError("pattern check applies to univariate polynomials only");
    const long n = *univariate_degree;
    bool ok = true;
    for (long j = -n; j <= n && ok; ++j) {
      const Rational v = poly.coeff({static_cast<int>(j)});
      ok = (n - j) % 2 == 0 ? v > 0 : v == 0;
    }
    for (const auto& [e, v] : poly.terms()) {
      if (e[0] < -n || e[0] > n) ok = false;
    }
    report.pattern_ok = ok;
  }
  return report;
}

PositivityReport positivity_report(const SymChebSpec& spec) {
  const LaurentPoly p = build(spec);
  return positivity_report(p, spec.k == 1 ? std::optional<unsigned>(spec.n) : std::nullopt);
}

std::string_view to_string(SignClass cls) {
  switch (cls) {
    case SignClass::AllNonneg: return "ALL_NONNEG";
    case SignClass::Alternating: return "ALTERNATING";
    case SignClass::Mixed: return "MIXED";
  }
  return "MIXED";
}

namespace {

SurveyRow survey_one(ChebKind kind, std::size_t k, unsigned n_max, const Rational& c) {
  bool nonneg = true;
  bool alternating = true;
  std::optional<SignWitness> both;
  std::optional<SignWitness> first_negative;
  for_each_power({kind, n_max, c, k}, [&](unsigned m, const LaurentPoly& p) {
    const bool even = m % 2 == 0;
    const auto neg = smallest(p, [](const Rational& v) { return v < 0; });
    if (neg) {
      nonneg = false;
      if (!first_negative) first_negative = SignWitness{m, neg->first, neg->second};
      if (even && !both) both = SignWitness{m, neg->first, neg->second};
    }
    if (alternating) {
      const bool wrong = even ? neg.has_value()
                              : smallest(p, [](const Rational& v) { return v > 0; }).has_value();
      if (wrong) alternating = false;
    }
    // Once both patterns have failed, only a missing "both" witness can change.
    return nonneg || alternating || !both;
  });
  SurveyRow row{c, SignClass::Mixed, std::nullopt};
  if (nonneg) {
    row.classification = SignClass::AllNonneg;
  } else if (alternating) {
    row.classification = SignClass::Alternating;
  } else {
    row.witness = both ? both : first_negative;
  }
  return row;
}

}  // namespace

std::vector<SurveyRow> sign_survey(ChebKind kind, std::size_t k, unsigned n_max,
                                   std::span<const Rational> c_grid) {
  if (k == 0) throw UsageError("arity k must be positive");
  std::vector<std::future<SurveyRow>> jobs;
  jobs.reserve(c_grid.size());
  for (const auto& c : c_grid) {
    jobs.push_back(std::async(std::launch::async, survey_one, kind, k, n_max, c));
  }
  std::vector<SurveyRow> rows;
  rows.reserve(jobs.size());
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

}  // namespace symcheb
