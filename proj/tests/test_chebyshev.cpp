#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "symcheb/chebyshev.hpp"
#include "symcheb/errors.hpp"

using namespace symcheb;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("cheb_coeffs small cases") {
  CHECK(cheb_coeffs(ChebKind::First, 0).coeffs == ints({1}));
  CHECK(cheb_coeffs(ChebKind::First, 1).coeffs == ints({0, 1}));
  CHECK(cheb_coeffs(ChebKind::First, 3).coeffs == ints({0, -3, 0, 4}));
  CHECK(cheb_coeffs(ChebKind::First, 4).coeffs == ints({1, 0, -8, 0, 8}));
  CHECK(cheb_coeffs(ChebKind::Second, 0).coeffs == ints({1}));
  CHECK(cheb_coeffs(ChebKind::Second, 1).coeffs == ints({0, 2}));
  CHECK(cheb_coeffs(ChebKind::Second, 2).coeffs == ints({-1, 0, 4}));
}

TEST_CASE("cheb_coeffs agrees with cos(n arccos x)") {
  for (unsigned n = 0; n <= 20; ++n) {
    const auto t = cheb_coeffs(ChebKind::First, n);
    const auto u = cheb_coeffs(ChebKind::Second, n);
    for (double theta = 0.1; theta < 3.1; theta += 0.37) {
      CHECK(evaluate(t, std::cos(theta)) == doctest::Approx(std::cos(n * theta)).epsilon(1e-9));
      CHECK(evaluate(u, std::cos(theta)) ==
            doctest::Approx(std::sin((n + 1) * theta) / std::sin(theta)).epsilon(1e-9));
    }
  }
}

TEST_CASE("parity and leading coefficients") {
  for (unsigned n = 0; n <= 50; ++n) {
    for (ChebKind kind : {ChebKind::First, ChebKind::Second}) {
      const auto f = cheb_coeffs(kind, n);
      REQUIRE(f.coeffs.size() == n + 1);
      for (unsigned j = 0; j <= n; ++j) {
        if ((n - j) % 2) CHECK(f.coeffs[j] == 0);
      }
      Integer lead;
      const unsigned shift = kind == ChebKind::First ? (n == 0 ? 0 : n - 1) : n;
      mpz_ui_pow_ui(lead.get_mpz_t(), 2, shift);
      CHECK(f.coeffs[n] == lead);
    }
  }
}

TEST_CASE("coeff_formula_T") {
  CHECK(coeff_formula_T(4, 1) == -8);
  CHECK(coeff_formula_T(4, 2) == 1);
  CHECK(coeff_formula_T(1, 0) == 1);
  CHECK_THROWS_AS(coeff_formula_T(0, 0), UsageError);
  CHECK_THROWS_AS(coeff_formula_T(4, 3), UsageError);
  for (unsigned n = 1; n <= 50; ++n) {
    const auto t = cheb_coeffs(ChebKind::First, n);
    for (unsigned m = 0; m <= n / 2; ++m) {
      const Rational v = coeff_formula_T(n, m);
      CHECK(is_integer(v));
      CHECK(v == Rational(t.coeffs[n - 2 * m]));
    }
  }
}

TEST_CASE("U_n = T'_{n+1} / (n+1) and T_n = (U_n - U_{n-2}) / 2") {
  for (unsigned n = 0; n <= 50; ++n) {
    const auto t_next = cheb_coeffs(ChebKind::First, n + 1);
    const auto u = cheb_coeffs(ChebKind::Second, n);
    for (unsigned j = 0; j <= n; ++j) {
      Rational scaled(Integer(j + 1) * t_next.coeffs[j + 1], Integer(n + 1));
      scaled.canonicalize();
      CHECK(scaled == Rational(u.coeffs[j]));
    }
  }
  for (unsigned n = 2; n <= 50; ++n) {
    const auto t = cheb_coeffs(ChebKind::First, n);
    const auto u = cheb_coeffs(ChebKind::Second, n);
    const auto u2 = cheb_coeffs(ChebKind::Second, n - 2);
    for (unsigned j = 0; j <= n; ++j) {
      const Integer lower = j < u2.coeffs.size() ? u2.coeffs[j] : Integer(0);
      CHECK(2 * t.coeffs[j] == u.coeffs[j] - lower);
    }
  }
}

TEST_CASE("|T_n| <= 1 on [-1, 1]") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> xs(-1.0, 1.0);
  for (unsigned n = 0; n <= 30; ++n) {
    const auto t = cheb_coeffs(ChebKind::First, n);
    for (int i = 0; i < 1000; ++i) CHECK(std::abs(evaluate(t, xs(rng))) <= 1.0 + 1e-9);
  }
}

TEST_CASE("eval_closed_T") {
  CHECK(eval_closed_T(3, 2.0) == doctest::Approx(26.0).epsilon(1e-12));
  CHECK(evaluate(cheb_coeffs(ChebKind::First, 3), Rational(2)) == 26);
  for (unsigned n = 0; n < 10; ++n) CHECK(eval_closed_T(n, 1.0) == doctest::Approx(1.0));
  CHECK(eval_closed_T(0, 5.0) == 1.0);
  CHECK(eval_closed_T(3, -2.0) == doctest::Approx(-26.0));
  for (unsigned n = 0; n <= 30; ++n) {
    const double exact = evaluate(cheb_coeffs(ChebKind::First, n), Rational(7, 4)).get_d();
    CHECK(eval_closed_T(n, 1.75) == doctest::Approx(exact).epsilon(1e-12));
  }
  CHECK_THROWS_AS(eval_closed_T(2, 0.5), DomainError);
}

TEST_CASE("kind names") {
  CHECK(parse_cheb_kind("T") == ChebKind::First);
  CHECK(parse_cheb_kind("U") == ChebKind::Second);
  CHECK(to_string(ChebKind::Second) == "U");
  CHECK_THROWS_AS(parse_cheb_kind("V"), UsageError);
}
