#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "symcheb/rational.hpp"

namespace symcheb {

/// Signed exponents, one per variable. std::vector's operator< is the
/// lexicographic order used for every serialized term list.
using ExponentVector = std::vector<int>;

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Canonical form: no stored coefficient is zero and every key has length
/// arity(), so structural equality of the term maps is polynomial equality.
/// Values are immutable from the outside except through the compound
/// assignment operators, and are safe to share between threads.
class LaurentPoly {
 public:
  using Terms = std::map<ExponentVector, Rational>;

  explicit LaurentPoly(std::size_t arity);

  static LaurentPoly constant(std::size_t arity, const Rational& value);
  static LaurentPoly monomial(ExponentVector exponents, const Rational& value = 1);
  /// x_0 + 1/x_0 + ... + x_{k-1} + 1/x_{k-1}
  static LaurentPoly symmetric_sum(std::size_t arity);

  std::size_t arity() const noexcept { return arity_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Coefficient of x^e, exact zero when absent.
  Rational coeff(const ExponentVector& e) const;

  /// Exact value at a point with nonzero entries (DomainError on a zero).
  Rational evaluate(std::span<const Rational> point) const;

  /// Substitutes x_i -> 1/x_i.
  LaurentPoly mirror(std::size_t i) const;

  /// Renames variable i to variable perm[i]; perm must be a permutation.
  LaurentPoly permute(std::span<const std::size_t> perm) const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  LaurentPoly& operator*=(const Rational& scalar);

  friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
  friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend LaurentPoly operator*(LaurentPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend LaurentPoly operator*(const Rational& lhs, LaurentPoly rhs) { return rhs *= lhs; }
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

  /// One line per term in lexicographic exponent order:
  ///   [e_1,...,e_k]: "p/q"
  /// Integers render as "p/1". The zero polynomial serializes to "".
  std::string serialize() const;

 private:
  void check_arity(const LaurentPoly& other) const;
  void accumulate(const ExponentVector& e, const Rational& value);

  std::size_t arity_;
  Terms terms_;
};

std::string format_exponent(const ExponentVector& e);

}  // namespace symcheb
