#include "symcheb/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "symcheb/errors.hpp"

namespace symcheb {

LaurentPoly::LaurentPoly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw UsageError("Laurent polynomial arity must be positive");
}

namespace {

// mpq_class(num, den) does not reduce; values entering from outside do.
Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

}  // namespace

LaurentPoly LaurentPoly::constant(std::size_t arity, const Rational& value) {
  LaurentPoly p(arity);
  p.accumulate(ExponentVector(arity, 0), canonical(value));
  return p;
}

LaurentPoly LaurentPoly::monomial(ExponentVector exponents, const Rational& value) {
  LaurentPoly p(exponents.size());
  p.accumulate(exponents, canonical(value));
  return p;
}

LaurentPoly LaurentPoly::symmetric_sum(std::size_t arity) {
  LaurentPoly p(arity);
  for (std::size_t i = 0; i < arity; ++i) {
    ExponentVector e(arity, 0);
    e[i] = 1;
    p.accumulate(e, 1);
    e[i] = -1;
    p.accumulate(e, 1);
  }
  return p;
}

Rational LaurentPoly::coeff(const ExponentVector& e) const {
  if (e.size() != arity_) {
    throw UsageError("exponent vector has length " + std::to_string(e.size()) + ", expected " +
                     std::to_string(arity_));
  }
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != arity_) throw UsageError("evaluation point has the wrong length");
  for (const auto& v : point) {
    if (v == 0) throw DomainError("Laurent polynomial evaluated at a point with a zero entry");
  }
  // Powers are cached per (variable, exponent); terms share most of them.
  std::vector<std::map<int, Rational>> powers(arity_);
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] == 0) continue;
      auto [it, fresh] = powers[i].try_emplace(e[i]);
      if (fresh) it->second = pow(point[i], e[i]);
      term *= it->second;
    }
    total += term;
  }
  return total;
}

LaurentPoly LaurentPoly::mirror(std::size_t i) const {
  if (i >= arity_) throw UsageError("mirror: variable index out of range");
  LaurentPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    ExponentVector flipped = e;
    flipped[i] = -flipped[i];
    out.terms_.emplace(std::move(flipped), c);
  }
  return out;
}

LaurentPoly LaurentPoly::permute(std::span<const std::size_t> perm) const {
  if (perm.size() != arity_) throw UsageError("permute: permutation has the wrong length");
  std::vector<bool> seen(arity_, false);
  for (auto p : perm) {
    if (p >= arity_ || seen[p]) throw UsageError("permute: not a permutation");
    seen[p] = true;
  }
  LaurentPoly out(arity_);
  for (const auto& [e, c] : terms_) {
    ExponentVector moved(arity_);
    for (std::size_t i = 0; i < arity_; ++i) moved[perm[i]] = e[i];
    out.terms_.emplace(std::move(moved), c);
  }
  return out;
}

void LaurentPoly::check_arity(const LaurentPoly& other) const {
  if (other.arity_ != arity_) {
    throw UsageError("arity mismatch: " + std::to_string(arity_) + " vs " +
                     std::to_string(other.arity_));
  }
}

void LaurentPoly::accumulate(const ExponentVector& e, const Rational& value) {
  if (value == 0) return;
  auto [it, fresh] = terms_.try_emplace(e, value);
  if (!fresh) {
    it->second += value;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) accumulate(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) accumulate(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& scalar) {
  const Rational factor = canonical(scalar);
  if (factor == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= factor;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  lhs.check_arity(rhs);
  LaurentPoly out(lhs.arity_);
  ExponentVector sum(lhs.arity_);
  Rational product;
  for (const auto& [ea, ca] : lhs.terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ea[i] + eb[i];
      product = ca * cb;
      auto [it, fresh] = out.terms_.try_emplace(sum, product);
      if (!fresh) it->second += product;
    }
  }
  std::erase_if(out.terms_, [](const auto& term) { return term.second == 0; });
  return out;
}

std::string format_exponent(const ExponentVector& e) {
  std::string out = "[";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + "]";
}

std::string LaurentPoly::serialize() const {
  std::string out;
  for (const auto& [e, c] : terms_) {
    out += format_exponent(e);
    out += ": \"";
    out += to_string(c);
    out += "\"\n";
  }
  return out;
}

}  // namespace symcheb
