#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "symcheb/laurent.hpp"

namespace symcheb {

/// Dense rows Q_0, Q_1, ... of the recurrence
///   Q_0 = start, Q_1 = first * S, Q_{m+1} = step * S * Q_m - damping * Q_{m-1}
/// for S = sum_i (x_i + 1/x_i) in one or two variables.
///
/// Row m lives on the parity sublattice of the L1 ball of radius m, stored as
/// an (m+1)^k grid in rotated coordinates: for k = 1, l = 2u - m; for k = 2,
/// l_1 = u + v - m and l_2 = u - v. Multiplication by S becomes a sum over
/// the cell and its lower neighbours, so no storage is spent on zeros.
///
/// With `normalize` set, each row is divided by its sum and the ratio of
/// consecutive sums is carried in `carry_`, keeping every value in [0, 1]
/// for floating-point runs of hundreds of steps.
template <class T>
class WalkRecurrence {
 public:
  WalkRecurrence(std::size_t arity, T step, T damping, T start, T first, bool normalize)
      : arity_(arity), step_(std::move(step)), damping_(std::move(damping)), normalize_(normalize) {
    if (arity != 1 && arity != 2) throw std::invalid_argument("dense walk supports k = 1 or 2");
    cur_ = {std::move(start)};
    if (normalize_) {
      // carry_ tracks sum(Q_{m-1}) / sum(Q_m); Q_1 sums to 2k * first.
      carry_ = cur_[0] / (first * T(2 * static_cast<int>(arity)));
      cur_[0] = T(1);
      first = T(1) / T(2 * static_cast<int>(arity));
    }
    first_ = std::move(first);
  }

  std::size_t arity() const noexcept { return arity_; }
  unsigned index() const noexcept { return m_; }
  const std::vector<T>& cells() const noexcept { return cur_; }
  std::size_t side() const noexcept { return m_ + 1; }

  /// Exponent vector of cell `idx` in the current row.
  ExponentVector exponent(std::size_t idx) const {
    const int m = static_cast<int>(m_);
    if (arity_ == 1) return {2 * static_cast<int>(idx) - m};
    const int u = static_cast<int>(idx / side());
    const int v = static_cast<int>(idx % side());
    return {u + v - m, u - v};
  }

  void advance() {
    const std::size_t w = m_ + 2;  // side of the next row
    std::vector<T> next(arity_ == 1 ? w : w * w);
    if (m_ == 0) {
      for (auto& cell : next) cell = first_;
    } else if (arity_ == 1) {
      for (std::size_t u = 0; u < w; ++u) {
        T& cell = next[u];
        if (u >= 1) cell += cur_[u - 1];
        if (u + 1 < w) cell += cur_[u];
        cell *= step_;
        if (u >= 1 && u - 1 < prev_.size()) cell -= damped(prev_[u - 1]);
      }
    } else {
      const std::size_t s = w - 1;  // current side
      const std::size_t p = s - 1;  // previous side
      for (std::size_t u = 0; u < w; ++u) {
        for (std::size_t v = 0; v < w; ++v) {
          T& cell = next[u * w + v];
          const bool u_in = u < s;
          const bool v_in = v < s;
          if (u_in && v_in) cell += cur_[u * s + v];
          if (u >= 1 && v >= 1) cell += cur_[(u - 1) * s + (v - 1)];
          if (u >= 1 && v_in) cell += cur_[(u - 1) * s + v];
          if (u_in && v >= 1) cell += cur_[u * s + (v - 1)];
          cell *= step_;
          if (u >= 1 && v >= 1 && u - 1 < p && v - 1 < p) cell -= damped(prev_[(u - 1) * p + (v - 1)]);
        }
      }
    }
    if (normalize_ && m_ > 0) {
      T total = T(0);
      for (const auto& cell : next) total += cell;
      for (auto& cell : next) cell /= total;
      carry_ = T(1) / total;
    }
    prev_ = std::move(cur_);
    cur_ = std::move(next);
    ++m_;
  }

 private:
  T damped(const T& value) const {
    if (normalize_) return damping_ * carry_ * value;
    return damping_ * value;
  }

  std::size_t arity_;
  T step_;
  T damping_;
  T first_;
  T carry_ = T(1);
  bool normalize_;
  unsigned m_ = 0;
  std::vector<T> prev_;
  std::vector<T> cur_;
};

}  // namespace symcheb
