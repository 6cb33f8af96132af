#include "symcheb/freegroup.hpp"

#include <cmath>
#include <cstdlib>
#include <future>

#include "symcheb/errors.hpp"

namespace symcheb {
namespace {

void check_rank_length(int r, int n) {
  if (r < 2) throw UsageError("rank r must be at least 2");
  if (n < 1) throw UsageError("word length n must be at least 1");
}

void check_letters(const Word& w) {
  if (w.rank < 1) throw UsageError("word rank must be positive");
  for (Letter l : w.letters) {
    if (l < 0 || l >= 2 * w.rank) {
      throw UsageError("letter code " + std::to_string(l) + " out of range for rank " +
                       std::to_string(w.rank));
    }
  }
}

// Tally indexed by the homology vector shifted into [0, 2n]^r.
struct Tally {
  int r;
  int n;
  std::vector<std::uint64_t> cells;

  Tally(int rank, int length)
      : r(rank), n(length), cells(static_cast<std::size_t>(std::pow(2 * length + 1, rank)), 0) {}

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] += other.cells[i];
  }
};

std::size_t class_index(const std::vector<int>& e, int n) {
  std::size_t idx = 0;
  for (int v : e) idx = idx * static_cast<std::size_t>(2 * n + 1) + static_cast<std::size_t>(v + n);
  return idx;
}

// Depth-first walk over reduced words that start with `first`; appends only
// letters that do not cancel the previous one, so every leaf is reduced and
// only the cyclic condition is left to check.
class PrefixWalk {
 public:
  PrefixWalk(int r, int n) : r_(r), n_(n), tally_(r, n), word_(static_cast<std::size_t>(n)),
                             homology_(static_cast<std::size_t>(r), 0) {}

  Tally run(Letter first) {
    push(0, first);
    extend(1);
    return std::move(tally_);
  }

 private:
  void push(int pos, Letter l) {
    word_[static_cast<std::size_t>(pos)] = l;
    homology_[static_cast<std::size_t>(l / 2)] += (l & 1) ? -1 : 1;
  }
  void pop(Letter l) { homology_[static_cast<std::size_t>(l / 2)] -= (l & 1) ? -1 : 1; }

  void extend(int pos) {
    if (pos == n_) {
      if (n_ == 1 || word_.front() != inverse_letter(word_.back())) {
        tally_.cells[class_index(homology_, n_)] += 1;
      }
      return;
    }
    const Letter forbidden = inverse_letter(word_[static_cast<std::size_t>(pos - 1)]);
    for (Letter l = 0; l < 2 * r_; ++l) {
      if (l == forbidden) continue;
      push(pos, l);
      extend(pos + 1);
      pop(l);
    }
  }

  int r_;
  int n_;
  Tally tally_;
  std::vector<Letter> word_;
  std::vector<int> homology_;
};

Tally enumerate_prefix(int r, int n, Letter first) { return PrefixWalk(r, n).run(first); }

}  // namespace

Integer HomologyCountTable::total() const {
  Integer sum = 0;
  for (const auto& [e, v] : counts) sum += v;
  return sum;
}

Integer HomologyCountTable::count(const HomologyClass& e) const {
  const auto it = counts.find(e);
  return it == counts.end() ? Integer(0) : it->second;
}

bool is_cyclically_reduced(const Word& w) {
  check_letters(w);
  if (w.letters.empty()) throw UsageError("the empty word is not a valid input");
  for (std::size_t i = 1; i < w.letters.size(); ++i) {
    if (w.letters[i] == inverse_letter(w.letters[i - 1])) return false;
  }
  return w.letters.size() == 1 || w.letters.front() != inverse_letter(w.letters.back());
}

HomologyClass homology_of(const Word& w) {
  check_letters(w);
  HomologyClass e(static_cast<std::size_t>(w.rank), 0);
  for (Letter l : w.letters) e[static_cast<std::size_t>(l / 2)] += (l & 1) ? -1 : 1;
  return e;
}

std::uint64_t enumeration_budget_from_env() {
  const char* raw = std::getenv("SYMCHEB_ENUM_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') {
    throw UsageError(std::string("SYMCHEB_ENUM_BUDGET is not a nonnegative integer: ") + raw);
  }
  return value;
}

HomologyCountTable enumerate_counts(int r, int n, std::uint64_t budget) {
  check_rank_length(r, n);
  Integer words = 2 * r;
  for (int i = 1; i < n; ++i) words *= 2 * r - 1;
  if (words > Integer(std::to_string(budget))) {
    throw ResourceError("enumeration of " + words.get_str() + " words (2r(2r-1)^(n-1), r=" +
                        std::to_string(r) + ", n=" + std::to_string(n) + ") exceeds the budget of " +
                        std::to_string(budget));
  }
  if (std::pow(2.0 * n + 1.0, r) > 1e8) {
    throw ResourceError("homology tally of size (2n+1)^r is too large");
  }

  std::vector<std::future<Tally>> jobs;
  for (Letter first = 0; first < 2 * r; ++first) {
    jobs.push_back(std::async(std::launch::async, enumerate_prefix, r, n, first));
  }
  Tally merged(r, n);
  for (auto& job : jobs) merged.merge(job.get());

  HomologyCountTable table{r, n, {}};
  std::vector<int> e(static_cast<std::size_t>(r));
  const std::size_t side = static_cast<std::size_t>(2 * n + 1);
  for (std::size_t idx = 0; idx < merged.cells.size(); ++idx) {
    if (merged.cells[idx] == 0) continue;
    std::size_t rest = idx;
    for (int i = r - 1; i >= 0; --i) {
      e[static_cast<std::size_t>(i)] = static_cast<int>(rest % side) - n;
      rest /= side;
    }
    table.counts.emplace(e, Integer(std::to_string(merged.cells[idx])));
  }
  return table;
}

LaurentPoly count_polynomial(int r, int n) {
  check_rank_length(r, n);
  const auto arity = static_cast<std::size_t>(r);
  const LaurentPoly s = LaurentPoly::symmetric_sum(arity);
  const Rational d = 2 * r - 1;
  LaurentPoly prev = LaurentPoly::constant(arity, 2);
  LaurentPoly cur = s;
  for (int m = 1; m < n; ++m) {
    LaurentPoly next = s * cur - prev * d;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

HomologyCountTable counts_by_formula(int r, int n) {
  LaurentPoly w = count_polynomial(r, n);
  if (n % 2 == 0) w += LaurentPoly::constant(static_cast<std::size_t>(r), 2 * (r - 1));
  HomologyCountTable table{r, n, {}};
  for (const auto& [e, v] : w.terms()) {
    if (!is_integer(v) || v < 0) {
      throw std::logic_error("generating polynomial has coefficient " + to_string(v) + " at " +
                             format_exponent(e));
    }
    table.counts.emplace(e, v.get_num());
  }
  return table;
}

Integer total_count(int r, int n) {
  check_rank_length(r, n);
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(2 * r - 1), static_cast<unsigned long>(n));
  return power + 1 + (n % 2 == 0 ? 2 * (r - 1) : 0);
}

std::string to_json(const HomologyCountTable& table) {
  // Written by hand: counts outgrow 64 bits and must print exactly.
  std::string out = "{\n  \"r\": " + std::to_string(table.r) + ",\n  \"n\": " +
                    std::to_string(table.n) + ",\n  \"counts\": [";
  bool first = true;
  for (const auto& [e, v] : table.counts) {
    out += first ? "\n" : ",\n";
    first = false;
    out += "    {\"e\": " + format_exponent(e) + ", \"count\": " + v.get_str() + "}";
  }
  out += first ? "]\n}" : "\n  ]\n}";
  return out;
}

}  // namespace symcheb
