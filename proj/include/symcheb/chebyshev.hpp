#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "symcheb/rational.hpp"

namespace symcheb {

enum class ChebKind { First, Second };

/// "T" or "U".
std::string_view to_string(ChebKind kind);
/// Accepts "T"/"first" and "U"/"second"; UsageError otherwise.
ChebKind parse_cheb_kind(std::string_view text);

/// Dense integer coefficients of T_n or U_n, lowest degree first.
struct ChebCoeffVector {
  ChebKind kind = ChebKind::First;
  unsigned n = 0;
  std::vector<Integer> coeffs;  // size n + 1

  friend bool operator==(const ChebCoeffVector&, const ChebCoeffVector&) = default;
};

/// Three-term recurrence f_{n+1} = 2x f_n - f_{n-1} from T_0 = 1, T_1 = x or
/// U_0 = 1, U_1 = 2x.
ChebCoeffVector cheb_coeffs(ChebKind kind, unsigned n);

/// Coefficient of x^{n-2m} in T_n from the closed binomial expression
///   (-1)^m * n/(n-m) * C(n-m, m) * 2^{n-2m-1}.
/// Evaluated over the rationals (the m = n/2 term passes through 1/2) and
/// checked to be integral. Rejects n = 0 and m > n/2.
Rational coeff_formula_T(unsigned n, unsigned m);

/// T_n(x) = ((x - sqrt(x^2-1))^n + (x + sqrt(x^2-1))^n) / 2, for |x| >= 1.
double eval_closed_T(unsigned n, double x);

Rational evaluate(const ChebCoeffVector& poly, const Rational& x);
double evaluate(const ChebCoeffVector& poly, double x);

}  // namespace symcheb
