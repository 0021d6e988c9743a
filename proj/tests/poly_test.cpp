#include <doctest.h>

#include <random>

#include "cartier/poly.hpp"
#include "cartier/rational.hpp"

using namespace cartier;

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kX = {"x"};

Poly random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t nvars,
                 int max_exp, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  std::vector<Poly::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m(nvars);
    for (std::size_t v = 0; v < nvars; ++v)
      m.exp[v] = expd(rng);
    terms.push_back({std::move(m), coeff(rng)});
  }
  return Poly(p, nvars, std::move(terms));
}

}  // namespace

TEST_CASE("parse examples") {
  Poly f = parse_poly("x^2*y^3 + 2*x", kXY, 5);
  CHECK(f.terms().size() == 2);
  CHECK(f.str(kXY) == "x^2*y^3 + 2*x");

  CHECK(parse_poly("5*x", kXY, 5).is_zero());

  Poly g = parse_poly("x - y", kXY, 2);
  CHECK(g == parse_poly("x + y", kXY, 2));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_WITH_AS(parse_poly("x + z", kXY, 5),
                       doctest::Contains("undeclared variable"), Error);
  CHECK_THROWS_AS(parse_poly("x + ", kXY, 5), Error);
  CHECK_THROWS_AS(parse_poly("x ^", kXY, 5), Error);
  CHECK_THROWS_AS(parse_poly("2 3", kXY, 5), Error);
  try {
    parse_poly("x * * y", kXY, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("exponent overflow is reported") {
  CHECK_THROWS_AS(parse_poly("x^99999999999", kXY, 5), Error);
  Poly f = parse_poly("x^1000000", kX, 2);
  CHECK_THROWS_AS(frobenius_power(f, 40), Error);
}

TEST_CASE("gauge examples") {
  CHECK(gauge(parse_poly("x^2*y^3", kXY, 5)) == GaugeValue::of(3));
  CHECK(gauge(Poly::zero(5, 2)).is_neg_infinity());
  CHECK(gauge(parse_poly("1", kXY, 5)) == GaugeValue::of(0));
}

TEST_CASE("frobenius power examples") {
  CHECK(frobenius_power(parse_poly("x + y", kXY, 2), 1) ==
        parse_poly("x^2 + y^2", kXY, 2));
  Poly f = parse_poly("x^2*y + 3*x", kXY, 5);
  CHECK(frobenius_power(f, 0) == f);
  // (x+1)^3 mod 3 expanded directly.
  Poly g = parse_poly("x + 1", kX, 3);
  CHECK(frobenius_power(g, 1) == g * g * g);
  CHECK(frobenius_power(g, 1) == parse_poly("x^3 + 1", kX, 3));
}

TEST_CASE("frobenius decomposition examples") {
  // x^3 + x = (x+1)^2 * x over F_2.
  Poly f = parse_poly("x^3 + x", kX, 2);
  auto parts = frob_decompose(f, 1);
  REQUIRE(parts.size() == 1);
  Monomial j(1);
  j.exp[0] = 1;
  REQUIRE(parts.count(j) == 1);
  CHECK(parts.at(j) == parse_poly("x + 1", kX, 2));

  // A pure Frobenius power decomposes at j = 0.
  Poly g = parse_poly("x^2*y + 4*y^2 + 1", kXY, 5);
  auto gparts = frob_decompose(frobenius_power(g, 2), 2);
  REQUIRE(gparts.size() == 1);
  CHECK(gparts.begin()->first.is_one());
  CHECK(gparts.begin()->second == g);

  // Single monomial below the grid.
  auto mono = frob_decompose(parse_poly("x^2*y^3", kXY, 5), 1);
  REQUIRE(mono.size() == 1);
  CHECK(mono.begin()->first == parse_poly("x^2*y^3", kXY, 5).lead().first);
  CHECK(mono.begin()->second.is_one());
}

TEST_CASE("format/parse round trip on random polys") {
  std::mt19937_64 rng(12345);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int iter = 0; iter < 100; ++iter) {
      Poly f = random_poly(rng, p, 2, 6, 6);
      CHECK(parse_poly(f.str(kXY), kXY, p) == f);
    }
  }
}

TEST_CASE("frobenius decomposition reconstructs and bounds the gauge") {
  std::mt19937_64 rng(999);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::uint32_t e : {1u, 2u}) {
      std::int64_t q = prime_power(p, e);
      for (int iter = 0; iter < 60; ++iter) {
        Poly f = random_poly(rng, p, 2, 12, 8);
        auto parts = frob_decompose(f, e);
        Poly sum = Poly::zero(p, 2);
        for (auto& [j, r] : parts) {
          for (auto ex : j.exp) CHECK(ex < q);
          sum = sum + frobenius_power(r, e).mul_term(j, 1);
          if (!f.is_zero())
            CHECK(gauge(r) <= GaugeValue::of(gauge(f).value() / q));
        }
        CHECK(sum == f);
      }
    }
  }
}

TEST_CASE("gauge subadditivity") {
  std::mt19937_64 rng(777);
  auto le = [](const GaugeValue& a, const GaugeValue& b) { return a <= b; };
  for (int iter = 0; iter < 200; ++iter) {
    Poly f = random_poly(rng, 3, 2, 8, 5);
    Poly g = random_poly(rng, 3, 2, 8, 5);
    GaugeValue sum = gauge(f + g);
    GaugeValue m = gauge(f) <= gauge(g) ? gauge(g) : gauge(f);
    CHECK(le(sum, m));
    GaugeValue prod = gauge(f * g);
    if (!f.is_zero() && !g.is_zero())
      CHECK(le(prod, GaugeValue::of(gauge(f).value() + gauge(g).value())));
    else
      CHECK(prod.is_neg_infinity());
  }
}

TEST_CASE("rational arithmetic") {
  Rational r(5, 6);
  CHECK((r * Rational(6)).ceil() == 5);
  CHECK(Rational::parse("5/6") == r);
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational(-1, 3).floor() == -1);
  CHECK(Rational(-1, 3).ceil() == 0);
  CHECK(Rational(7, 1).str() == "7");
  CHECK(Rational(22, 8).str() == "11/4");
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(Rational(1, 2) < Rational(2, 3));
}
