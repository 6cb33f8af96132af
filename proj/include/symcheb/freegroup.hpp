#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "symcheb/laurent.hpp"
#include "symcheb/rational.hpp"

namespace symcheb {

// Letters of F_r are codes 0..2r-1: 2i is the generator a_{i+1}, 2i+1 its
// inverse, so inversion flips the low bit.
using Letter = int;

constexpr Letter inverse_letter(Letter code) noexcept { return code ^ 1; }

struct Word {
  int rank = 2;
  std::vector<Letter> letters;
};

/// Signed exponent sum per generator.
using HomologyClass = ExponentVector;

struct HomologyCountTable {
  int r = 2;
  int n = 1;
  /// Only classes with a positive count are stored.
  std::map<HomologyClass, Integer> counts;

  Integer total() const;
  Integer count(const HomologyClass& e) const;

  friend bool operator==(const HomologyCountTable&, const HomologyCountTable&) = default;
};

/// Reduced and, for length >= 2, first letter != inverse of last. The empty
/// word is rejected (UsageError), as are codes outside [0, 2r).
bool is_cyclically_reduced(const Word& w);

HomologyClass homology_of(const Word& w);

/// Default cap on enumerated words, overridable through SYMCHEB_ENUM_BUDGET.
inline constexpr std::uint64_t kDefaultEnumBudget = 100'000'000;
std::uint64_t enumeration_budget_from_env();

/// Brute force: walks every reduced word of length n (2r (2r-1)^{n-1} of
/// them), keeps the cyclically reduced ones and tallies them by homology
/// class. Throws ResourceError when that word count exceeds `budget`.
HomologyCountTable enumerate_counts(int r, int n, std::uint64_t budget = kDefaultEnumBudget);

/// W_n with W_0 = 2, W_1 = S, W_{m+1} = S W_m - (2r-1) W_{m-1}, where
/// S = sum_i (x_i + 1/x_i). Equals 2 (2r-1)^{n/2} R_n(r / sqrt(2r-1); x) but
/// stays in integer coefficients.
LaurentPoly count_polynomial(int r, int n);

/// Coefficients of W_n, plus (r-1)(1 + (-1)^n) on the trivial class.
HomologyCountTable counts_by_formula(int r, int n);

/// (2r-1)^n + 1 + (r-1)(1 + (-1)^n).
Integer total_count(int r, int n);

/// {"r": r, "n": n, "counts": [{"e": [...], "count": N}, ...]}, entries in
/// lexicographic order of e.
std::string to_json(const HomologyCountTable& table);

}  // namespace symcheb
