#include <doctest.h>

#include <random>

#include "cartier/cartier_op.hpp"

using namespace cartier;

namespace {

Poly rp(const RingCtx& ctx, const std::string& s) { return ctx.parse(s); }

Poly x_pow(const RingCtx& ctx, std::initializer_list<std::int32_t> exps) {
  Monomial m(ctx.nvars());
  std::size_t i = 0;
  for (auto e : exps) m.exp[i++] = e;
  return Poly::monomial(ctx.p(), std::move(m));
}

Poly random_poly(std::mt19937_64& rng, const RingCtx& ctx, int max_exp,
                 int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<int> expd(0, max_exp);
  std::uniform_int_distribution<std::uint32_t> coeff(0, ctx.p() - 1);
  std::vector<Poly::Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m(ctx.nvars());
    for (std::size_t v = 0; v < ctx.nvars(); ++v) m.exp[v] = expd(rng);
    terms.push_back({std::move(m), coeff(rng)});
  }
  return Poly(ctx.p(), ctx.nvars(), std::move(terms));
}

// Independent route to T_e: act monomial by monomial from the defining
// formula instead of through frob_decompose.
Poly t_e_direct(const Poly& f, std::uint32_t e) {
  std::int64_t q = prime_power(f.p(), e);
  Poly out = Poly::zero(f.p(), f.nvars());
  for (const auto& [m, c] : f.terms()) {
    Monomial r(f.nvars());
    bool ok = true;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if ((m.exp[i] + 1) % q != 0) {
        ok = false;
        break;
      }
      r.exp[i] = static_cast<std::int32_t>((m.exp[i] + 1) / q - 1);
    }
    if (ok) out = out + Poly::monomial(f.p(), std::move(r), c);
  }
  return out;
}

}  // namespace

TEST_CASE("T_1 on monomials") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    RingCtx ctx = RingCtx::polynomial_ring(p, {"x"});
    CartierOp kappa(ctx, 1, ctx.one());
    CHECK(op_apply_poly(kappa, x_pow(ctx, {std::int32_t(p - 1)})).is_one());
    // kappa(x^n) = x^{(n+1)/p - 1} or 0.
    for (std::int32_t n = 0; n <= std::int32_t(3 * p); ++n) {
      Poly got = op_apply_poly(kappa, x_pow(ctx, {n}));
      if ((n + 1) % p == 0)
        CHECK(got == x_pow(ctx, {std::int32_t((n + 1) / p - 1)}));
      else
        CHECK(got.is_zero());
    }
  }
}

TEST_CASE("the quotient operator of k[x,y]/(x^2 y)") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    RingCtx s = RingCtx::polynomial_ring(p, {"x", "y"});
    Poly f = x_pow(s, {std::int32_t(2 * p - 2), std::int32_t(p - 1)});
    Ideal I(s, {rp(s, "x^2*y")});
    CHECK(op_descends(1, f, I));
    CHECK(!op_descends(1, s.one(), I));
    CHECK(op_descends(1, s.zero(), Ideal::zero(s)));

    RingCtx r = RingCtx::quotient_ring(p, {"x", "y"}, {rp(s, "x^2*y")});
    CartierOp phi(r, 1, r.parse(f.str(s.vars())));
    // x^i y^j -> x^{(i-1)/p + 1} y^{j/p}, zero on non-integral exponents.
    for (std::int32_t i = 0; i <= std::int32_t(p); ++i)
      for (std::int32_t j = 0; j <= std::int32_t(p); ++j) {
        Poly got = op_apply_poly(phi, x_pow(r, {i, j}));
        if ((i - 1) % std::int32_t(p) == 0 && j % std::int32_t(p) == 0) {
          Poly want = r.reduce(x_pow(r, {(i - 1) / std::int32_t(p) + 1,
                                         j / std::int32_t(p)}));
          CHECK(got == want);
        } else {
          CHECK(got.is_zero());
        }
      }
    // First application of phi to R is already (x).
    CHECK(op_apply_ideal(phi, Ideal::unit(r)) == Ideal(r, {rp(r, "x")}));
    CHECK(op_apply_ideal(phi, Ideal::zero(r)).is_zero());
  }
}

TEST_CASE("apply to the full ring over F_2") {
  RingCtx ctx = RingCtx::polynomial_ring(2, {"x"});
  CartierOp t1(ctx, 1, ctx.one());
  CHECK(op_apply_ideal(t1, Ideal::unit(ctx)).is_unit());
}

TEST_CASE("apply agrees with the direct T_e route") {
  std::mt19937_64 rng(2468);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    RingCtx ctx = RingCtx::polynomial_ring(p, {"x", "y"});
    for (int iter = 0; iter < 50; ++iter) {
      Poly f = random_poly(rng, ctx, 6, 4);
      Poly m = random_poly(rng, ctx, 8, 5);
      CartierOp op(ctx, 1, f);
      CHECK(op_apply_poly(op, m) == t_e_direct(f * m, 1));
    }
  }
}

TEST_CASE("p^{-e}-linearity") {
  std::mt19937_64 rng(1357);
  for (std::uint32_t p : {2u, 3u}) {
    RingCtx ctx = RingCtx::polynomial_ring(p, {"x", "y"});
    for (int iter = 0; iter < 100; ++iter) {
      std::uint32_t e = 1 + rng() % 2;
      CartierOp op(ctx, e, random_poly(rng, ctx, 5, 3));
      Poly r = random_poly(rng, ctx, 3, 3);
      Poly m = random_poly(rng, ctx, 5, 4);
      CHECK(op_apply_poly(op, frobenius_power(r, e) * m) ==
            r * op_apply_poly(op, m));
    }
  }
}

TEST_CASE("composition formula and coherence") {
  RingCtx c3 = RingCtx::polynomial_ring(3, {"x"});
  CartierOp a(c3, 1, rp(c3, "x"));
  CartierOp ab = op_compose(a, a);
  CHECK(ab.e() == 2);
  CHECK(ab.f() == rp(c3, "x^4"));  // x^{p+1}

  CartierOp unit1(c3, 2, c3.one());
  CartierOp unit2(c3, 3, c3.one());
  CHECK(op_compose(unit1, unit2).e() == 5);
  CHECK(op_compose(unit1, unit2).f().is_one());

  std::mt19937_64 rng(8642);
  for (std::uint32_t p : {2u, 3u}) {
    RingCtx ctx = RingCtx::polynomial_ring(p, {"x", "y"});
    for (int iter = 0; iter < 60; ++iter) {
      CartierOp phi(ctx, 1 + rng() % 2, random_poly(rng, ctx, 4, 3));
      CartierOp psi(ctx, 1 + rng() % 2, random_poly(rng, ctx, 4, 3));
      Poly m = random_poly(rng, ctx, 9, 5);
      CHECK(op_apply_poly(op_compose(phi, psi), m) ==
            op_apply_poly(phi, op_apply_poly(psi, m)));
    }
  }
}

TEST_CASE("gauge contraction") {
  std::mt19937_64 rng(11111);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    RingCtx ctx = RingCtx::polynomial_ring(p, {"x", "y"});
    for (int iter = 0; iter < 100; ++iter) {
      std::uint32_t e = 1 + rng() % 2;
      std::int64_t q = prime_power(p, e);
      Poly f = random_poly(rng, ctx, 5, 3);
      Poly m = random_poly(rng, ctx, 9, 5);
      if (f.is_zero() || m.is_zero()) continue;
      CartierOp op(ctx, e, f);
      Poly img = op_apply_poly(op, m);
      if (img.is_zero()) continue;
      CHECK(gauge(img).value() <=
            (gauge(m).value() + gauge(f).value()) / q);
    }
  }
}

TEST_CASE("word contraction bound") {
  std::mt19937_64 rng(22222);
  RingCtx ctx = RingCtx::polynomial_ring(3, {"x", "y"});
  std::vector<CartierOp> gens = {CartierOp(ctx, 1, rp(ctx, "x^2 + y")),
                                 CartierOp(ctx, 1, rp(ctx, "y^2"))};
  CartierAlgebra C(ctx, gens);
  GaugeBound bound = gauge_bound(C);
  auto words = algebra_words(C, 3, 4096);
  for (std::uint32_t d = 1; d <= 3; ++d) {
    std::int64_t qd = prime_power(3, d);
    for (const auto& w : words[d - 1]) {
      for (int iter = 0; iter < 25; ++iter) {
        Poly m = random_poly(rng, ctx, 10, 5);
        Poly img = op_apply_poly(w, m);
        if (img.is_zero() || m.is_zero()) continue;
        // gauge(w(m)) <= gauge(m)/p^d + K/(p-1), exactly in rationals.
        Rational lhs(gauge(img).value());
        Rational rhs = Rational(gauge(m).value(), qd) +
                       Rational(bound.K, ctx.p() - 1);
        CHECK(lhs <= rhs);
      }
    }
  }
}

TEST_CASE("algebra words") {
  RingCtx ctx = RingCtx::polynomial_ring(2, {"x"});
  CartierOp g1(ctx, 1, rp(ctx, "x"));
  CartierAlgebra single(ctx, {g1});
  auto w = algebra_words(single, 3, 4096);
  CHECK(w[0].size() == 1);
  CHECK(w[1].size() == 1);  // powers only
  CHECK(w[2].size() == 1);

  CartierOp g2(ctx, 2, rp(ctx, "x^2"));
  CartierAlgebra two(ctx, {g1, g2});
  auto w2 = algebra_words(two, 3, 4096);
  CHECK(w2[0].size() == 1);        // {1}
  CHECK(w2[1].size() == 2);        // {11, 2}
  CHECK(w2[2].size() == 3);        // {111, 12, 21}
  CHECK_THROWS_AS(algebra_words(two, 12, 5), Error);

  // Compositions of (1, x) with itself collapse to single operators.
  CartierOp collide(ctx, 2, rp(ctx, "x^3"));  // = (1,x) o (1,x)
  CartierAlgebra dup(ctx, {g1, collide});
  CHECK(algebra_words(dup, 2, 4096)[1].size() == 1);
}

TEST_CASE("descent consistency on random elements") {
  std::mt19937_64 rng(33333);
  for (std::uint32_t p : {2u, 3u}) {
    RingCtx s = RingCtx::polynomial_ring(p, {"x", "y"});
    Poly f = x_pow(s, {std::int32_t(2 * p - 2), std::int32_t(p - 1)});
    RingCtx r = RingCtx::quotient_ring(p, {"x", "y"}, {rp(s, "x^2*y")});
    CartierOp phi(r, 1, r.parse(f.str(s.vars())));
    Ideal I = Ideal::zero(r);
    for (int iter = 0; iter < 50; ++iter) {
      Poly elem = rp(r, "x^2*y") * random_poly(rng, r, 4, 3);
      CHECK(member(op_apply_poly(phi, elem), I));
    }
  }
}

TEST_CASE("gauge bounds") {
  RingCtx ctx = RingCtx::polynomial_ring(5, {"x", "y"});
  CartierAlgebra trivial(ctx, {CartierOp(ctx, 1, ctx.one())});
  GaugeBound b1 = gauge_bound(trivial);
  CHECK(b1.K == 0);
  CHECK(b1.B == 1);

  // K = 2p-2, B = floor((2p-2)/(p-1)) + 1 = 3.
  CartierAlgebra producer(
      ctx, {CartierOp(ctx, 1, x_pow(ctx, {8, 4}))});
  GaugeBound b2 = gauge_bound(producer);
  CHECK(b2.K == 8);
  CHECK(b2.B == 3);

  // Twist (x,y) with t = 2 on K = 0: B = 1 + ceil(2*1) = 3.
  Ideal m(ctx, {rp(ctx, "x"), rp(ctx, "y")});
  CartierAlgebra twisted = trivial.with_twist({m, Rational(2)});
  CHECK(gauge_bound(twisted).B == 3);
}

TEST_CASE("non-descending operator is rejected") {
  RingCtx r = RingCtx::quotient_ring(2, {"x", "y"},
                                     {parse_poly("x^2*y", {"x", "y"}, 2)});
  CHECK_THROWS_AS(CartierOp(r, 1, r.one()), Error);
}
