#include "symcheb/rational.hpp"

#include <algorithm>
#include <cctype>

#include "symcheb/errors.hpp"

namespace symcheb {
namespace {

bool is_integer_literal(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

Integer parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) {
    throw UsageError("not an integer literal: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text));
  }
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
  Rational value(num, den);
  value.canonicalize();
  return value;
}

Rational parse_rational_or_decimal(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);
  std::string_view whole = text.substr(0, dot);
  std::string_view frac = text.substr(dot + 1);
  bool negative = false;
  if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
    negative = whole.front() == '-';
    whole.remove_prefix(1);
  }
  const auto digits = [](std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); });
  };
  if ((whole.empty() && frac.empty()) || !digits(whole) || !digits(frac)) {
    throw UsageError("not a decimal literal: '" + std::string(text) + "'");
  }
  Integer num(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational value(negative ? Integer(-num) : num, den);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Rational pow(const Rational& value, long exponent) {
  if (exponent < 0) {
    if (value == 0) throw DomainError("zero raised to a negative power");
    return 1 / pow(value, -exponent);
  }
  Integer num, den;
  const auto e = static_cast<unsigned long>(exponent);
  mpz_pow_ui(num.get_mpz_t(), value.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value.get_den_mpz_t(), e);
  return Rational(num, den);  // already coprime
}

Integer binomial(long top, long bottom) {
  if (top < 0 || bottom < 0 || bottom > top) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

}  // namespace symcheb
