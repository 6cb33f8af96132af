#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "symcheb/chebyshev.hpp"
#include "symcheb/laurent.hpp"
#include "symcheb/rational.hpp"

namespace symcheb {

/// Parameters of R_n(c; x_1..x_k) (First kind) or S_n (Second kind).
struct SymChebSpec {
  ChebKind kind = ChebKind::First;
  unsigned n = 0;
  Rational c = 2;
  std::size_t k = 1;
};

/// The Laurent polynomial f_n(A) with A = (c / 2k) * sum_i (x_i + 1/x_i),
/// f = T or U, built by the three-term recurrence P_{m+1} = 2A P_m - P_{m-1}.
LaurentPoly build(const SymChebSpec& spec);

/// Rows of the univariate (k = 1) coefficient table. Row n has 2n + 1
/// entries, index j + n holding the coefficient of x^j.
struct UnivariateCoeffTable {
  ChebKind kind = ChebKind::First;
  Rational c;
  std::vector<std::vector<Rational>> a_rows;  // U_n((c/2)(x + 1/x))
  std::vector<std::vector<Rational>> b_rows;  // T_n((c/2)(x + 1/x)); empty for Second

  /// Coefficient of x^j in row n of the table; zero outside |j| <= n.
  static const Rational& at(const std::vector<std::vector<Rational>>& rows, long n, long j);
};

/// a_{n+1}^j = c (a_n^{j-1} + a_n^{j+1}) - a_{n-1}^j from a_0 = 1, a_1^{+-1} = c.
/// For the First kind the T-rows are b_n^j = (a_n^j - a_{n-2}^j) / 2.
UnivariateCoeffTable univariate_table(ChebKind kind, const Rational& c, unsigned n_max);

/// Coefficient of x^j in R_n(c; x), k = 1, from the binomial double sum
///   (1/2) c^n sum_m (-1/c^2)^m n/(n-m) C(n-m, m) C(n-2m, (n-2m-j)/2).
/// Requires n >= 1, c != 0 and |j| <= n.
Rational fullform_coeff(unsigned n, const Rational& c, long j);

struct PositivityReport {
  bool all_nonnegative = true;
  /// Univariate only: strictly positive on |j| <= n with n - j even, zero
  /// elsewhere. Unset for k > 1.
  std::optional<bool> pattern_ok;
  Rational min_coefficient;
  /// Exponent of the smallest negative coefficient; among ties the
  /// lexicographically largest, which for these symmetric polynomials is the
  /// representative with nonnegative, descending entries.
  std::optional<ExponentVector> witness;
};

PositivityReport positivity_report(const SymChebSpec& spec);
PositivityReport positivity_report(const LaurentPoly& poly, std::optional<unsigned> univariate_degree);

enum class SignClass { AllNonneg, Alternating, Mixed };
std::string_view to_string(SignClass cls);

struct SignWitness {
  unsigned n = 0;
  ExponentVector exponent;
  Rational value;
};

struct SurveyRow {
  Rational c;
  SignClass classification = SignClass::Mixed;
  std::optional<SignWitness> witness;  // set only for Mixed
};

/// Classifies each c over R_0..R_{n_max} (S_n for Second kind). The Mixed
/// witness is the first n (then smallest value, then largest exponent) whose
/// coefficient breaks both patterns, i.e. a negative value at even n; if no
/// such point exists it is the first negative coefficient. Cells run in
/// parallel, rows come back in grid order.
std::vector<SurveyRow> sign_survey(ChebKind kind, std::size_t k, unsigned n_max,
                                   std::span<const Rational> c_grid);

}  // namespace symcheb
