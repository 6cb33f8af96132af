#include "symcheb/chebyshev.hpp"

#include <cmath>

#include "symcheb/errors.hpp"

namespace symcheb {

std::string_view to_string(ChebKind kind) { return kind == ChebKind::First ? "T" : "U"; }

ChebKind parse_cheb_kind(std::string_view text) {
  if (text == "T" || text == "first") return ChebKind::First;
  if (text == "U" || text == "second") return ChebKind::Second;
  throw UsageError("unknown Chebyshev kind '" + std::string(text) + "' (expected T or U)");
}

ChebCoeffVector cheb_coeffs(ChebKind kind, unsigned n) {
  std::vector<Integer> prev{1};
  if (n == 0) return {kind, 0, prev};
  std::vector<Integer> cur{0, kind == ChebKind::First ? 1 : 2};
  for (unsigned m = 1; m < n; ++m) {
    std::vector<Integer> next(m + 2, 0);
    for (unsigned j = 0; j <= m; ++j) next[j + 1] = 2 * cur[j];
    for (unsigned j = 0; j < prev.size(); ++j) next[j] -= prev[j];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {kind, n, std::move(cur)};
}

Rational coeff_formula_T(unsigned n, unsigned m) {
  if (n == 0) throw UsageError("coeff_formula_T: n must be positive (n/(n-m) is 0/0 at n = 0)");
  if (m > n / 2) throw UsageError("coeff_formula_T: m must lie in [0, n/2]");
  Rational value(Integer(n), Integer(n - m));
  value.canonicalize();
  value *= binomial(n - m, m);
  value *= pow(Rational(2), static_cast<long>(n) - 2 * static_cast<long>(m) - 1);
  if (m % 2) value = -value;
  if (!is_integer(value)) {
    throw std::logic_error("coeff_formula_T produced a non-integer: " + to_string(value));
  }
  return value;
}

double eval_closed_T(unsigned n, double x) {
  if (!(std::abs(x) >= 1.0)) throw DomainError("eval_closed_T requires |x| >= 1");
  if (n == 0) return 1.0;
  const double root = std::sqrt(x * x - 1.0);
  return 0.5 * (std::pow(x - root, n) + std::pow(x + root, n));
}

Rational evaluate(const ChebCoeffVector& poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double evaluate(const ChebCoeffVector& poly, double x) {
  double acc = 0.0;
  for (auto it = poly.coeffs.rbegin(); it != poly.coeffs.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

}  // namespace symcheb
