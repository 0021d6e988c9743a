#include <doctest.h>

#include "cartier/jumping.hpp"
#include "cartier/oracles.hpp"

using namespace cartier;

namespace {

Ideal ideal_of(const RingCtx& ctx, std::initializer_list<std::string> gens) {
  std::vector<Poly> ps;
  for (const auto& s : gens) ps.push_back(ctx.parse(s));
  return Ideal(ctx, ps);
}

CartierAlgebra full_algebra(const RingCtx& ctx) {
  return CartierAlgebra(ctx, {CartierOp(ctx, 1, ctx.one())});
}

Ideal newton_ideal(const RingCtx& ctx, const Ideal& a, const Rational& t) {
  std::vector<Monomial> gens;
  for (const auto& g : a.gb()) gens.push_back(g.lead().first);
  std::vector<Poly> polys;
  for (const auto& m : monomial_tau(ctx.p(), gens, t))
    polys.push_back(Poly::monomial(ctx.p(), m));
  return Ideal(ctx, polys);
}

}  // namespace

TEST_CASE("tau_t basics") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x", "y"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal R = Ideal::unit(ctx);
  Ideal m = ideal_of(ctx, {"x", "y"});
  JumpOptions opts;

  CHECK(tau_t(C, R, m, Rational(0), opts).is_unit());
  CHECK(tau_t(C, R, Ideal::unit(ctx), Rational(7, 2), opts).is_unit());
  // t = 5/2: the Newton oracle gives (x, y).
  CHECK(tau_t(C, R, m, Rational(5, 2), opts) == m);
}

TEST_CASE("tau_t agrees with the Newton oracle on sample ideals") {
  for (std::uint32_t p : {2u, 3u}) {
    RingCtx ctx = RingCtx::polynomial_ring(p, {"x", "y"});
    CartierAlgebra C = full_algebra(ctx);
    Ideal R = Ideal::unit(ctx);
    JumpOptions opts;
    TauCache cache;
    std::vector<Ideal> samples = {
        ideal_of(ctx, {"x", "y"}),
        ideal_of(ctx, {"x^2", "y^3"}),
        ideal_of(ctx, {"x^3*y", "x*y^2"}),
    };
    for (const auto& a : samples)
      for (int num = 0; num <= 8; ++num) {
        Rational t(num, 4);
        CHECK(tau_t(C, R, a, t, opts, &cache) == newton_ideal(ctx, a, t));
      }
  }
}

TEST_CASE("tau cache returns stored values") {
  TauCache cache;
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x"});
  Ideal v = ideal_of(ctx, {"x"});
  CHECK(!cache.find(Rational(1, 2)).has_value());
  cache.store(Rational(1, 2), v);
  auto hit = cache.find(Rational(1, 2));
  REQUIRE(hit.has_value());
  CHECK(*hit == v);
}

TEST_CASE("jumps of the maximal ideal over F_3 (small window)") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x", "y"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal m = ideal_of(ctx, {"x", "y"});
  JumpOptions opts;
  JumpReport rep =
      jumps_in_range(C, Ideal::unit(ctx), m, Rational(3), 2, opts);
  REQUIRE(rep.jumps.size() == 2);
  CHECK(rep.jumps[0] == Rational(2));
  CHECK(rep.jumps[1] == Rational(3));
  REQUIRE(rep.ideals.size() == 3);
  CHECK(rep.ideals[0].is_unit());
  CHECK(rep.ideals[1] == m);
  CHECK(rep.ideals[2] == ideal_power(m, 2));
  CHECK(rep.resolution == Rational(1, 8));
  CHECK(rep.monotonicity_ok);
}

TEST_CASE("no jumps below the first threshold") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x", "y"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal m = ideal_of(ctx, {"x", "y"});
  JumpOptions opts;
  JumpReport rep =
      jumps_in_range(C, Ideal::unit(ctx), m, Rational(3, 2), 2, opts);
  CHECK(rep.jumps.empty());
  REQUIRE(rep.ideals.size() == 1);
  CHECK(rep.ideals[0].is_unit());
}

TEST_CASE("principal ideal jumps at integers") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal a = ideal_of(ctx, {"x"});
  JumpOptions opts;
  JumpReport rep = jumps_in_range(C, Ideal::unit(ctx), a, Rational(2), 2, opts);
  REQUIRE(rep.jumps.size() == 2);
  CHECK(rep.jumps[0] == Rational(1));
  CHECK(rep.jumps[1] == Rational(2));
  CHECK(rep.ideals[0].is_unit());
  CHECK(rep.ideals[1] == a);
  CHECK(rep.ideals[2] == ideal_of(ctx, {"x^2"}));
}

TEST_CASE("right continuity at detected jumps") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x", "y"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal m = ideal_of(ctx, {"x", "y"});
  JumpOptions opts;
  TauCache cache;
  JumpReport rep =
      jumps_in_range(C, Ideal::unit(ctx), m, Rational(3), 2, opts);
  Ideal R = Ideal::unit(ctx);
  for (const auto& j : rep.jumps) {
    Ideal at = tau_t(C, R, m, j, opts, &cache);
    Ideal after = tau_t(C, R, m, j + rep.resolution, opts, &cache);
    CHECK(at == after);
  }
}

TEST_CASE("monotonicity on the grid") {
  RingCtx ctx = RingCtx::polynomial_ring(2, {"x", "y"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal a = ideal_of(ctx, {"x^2", "x*y^2"});
  Ideal R = Ideal::unit(ctx);
  JumpOptions opts;
  TauCache cache;
  Ideal prev = tau_t(C, R, a, Rational(0), opts, &cache);
  for (int num = 1; num <= 9; ++num) {
    Ideal cur = tau_t(C, R, a, Rational(num, 3), opts, &cache);
    CHECK(ideal_contains(prev, cur));
    prev = cur;
  }
}

TEST_CASE("fpt of the maximal ideal in two variables is 2") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x", "y"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal m = ideal_of(ctx, {"x", "y"});
  JumpOptions opts;
  FptResult res = fpt(C, m, Rational(3), 2, opts);
  REQUIRE(res.found);
  CHECK(res.value == Rational(2));
}

TEST_CASE("fpt beyond the window reports not found") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x", "y"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal m = ideal_of(ctx, {"x", "y"});
  JumpOptions opts;
  FptResult res = fpt(C, m, Rational(1), 1, opts);
  CHECK(!res.found);
}

TEST_CASE("fpt requires an F-pure untwisted pair") {
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x"});
  CartierAlgebra C(ctx, {CartierOp(ctx, 1, ctx.parse("x^3"))});
  JumpOptions opts;
  CHECK_THROWS_AS(fpt(C, ideal_of(ctx, {"x"}), Rational(1), 1, opts), Error);
}

TEST_CASE("nu sandwich for fpt on a principal ideal") {
  // fpt((x)) = 1; nu(p^e) = p^e - 1 for f = x, so the reported value sits in
  // (nu/p^e, (nu+1)/p^e].
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x"});
  CartierAlgebra C = full_algebra(ctx);
  Ideal a = ideal_of(ctx, {"x"});
  JumpOptions opts;
  FptResult res = fpt(C, a, Rational(2), 2, opts);
  REQUIRE(res.found);
  Poly f = ctx.parse("x");
  for (std::uint32_t e = 1; e <= 2; ++e) {
    std::int64_t q = prime_power(3, e);
    std::int64_t nu = nu_value(f, e);
    CHECK(Rational(nu, q) < res.value);
    CHECK(res.value <= Rational(nu + 1, q));
  }
}
