#include "cartier/cartier_op.hpp"

#include <algorithm>
#include <map>

namespace cartier {

// The kernel polynomial is an element of S, not of S/I: reducing it mod I
// would change the operator (descent controls f * I, not f itself).
CartierOp::CartierOp(RingCtx ctx, std::uint32_t e, Poly f)
    : ctx_(std::move(ctx)), e_(e), f_(std::move(f)) {
  if (e_ < 1) fail(ErrorKind::Config, "Cartier operator needs degree e >= 1");
  if (ctx_.has_quotient()) {
    RingCtx base = RingCtx::polynomial_ring(ctx_.p(), ctx_.vars());
    Ideal I(base, ctx_.quotient_gens());
    if (!op_descends(e_, f_, I))
      fail(ErrorKind::Config,
           "operator (e=" + std::to_string(e_) + ", f=" + f_.str(ctx_.vars()) +
               ") does not descend: f*I is not inside I^[p^e]");
  }
}

CartierAlgebra::CartierAlgebra(RingCtx ctx, std::vector<CartierOp> generators,
                               std::optional<Twist> twist)
    : ctx_(std::move(ctx)), generators_(std::move(generators)), twist_(std::move(twist)) {
  if (generators_.empty())
    fail(ErrorKind::Config, "Cartier algebra needs at least one generator");
  for (const auto& g : generators_)
    if (!g.ctx().same_as(ctx_))
      fail(ErrorKind::Config, "algebra generators live in different rings");
  if (twist_ && twist_->t < Rational(0))
    fail(ErrorKind::Config, "twist exponent t must be >= 0");
}

bool CartierAlgebra::twisted() const {
  return twist_.has_value() && !twist_->t.is_zero() && !twist_->a.is_unit();
}

Poly op_apply_poly(const CartierOp& op, const Poly& m) {
  const RingCtx& ctx = op.ctx();
  Poly g = op.f() * ctx.reduce(m);
  if (g.is_zero()) return g;
  std::int64_t q = prime_power(ctx.p(), op.e());
  // T_e picks the Frobenius component at j = (q-1,...,q-1).
  std::vector<Poly::Term> picked;
  for (const auto& t : g.terms()) {
    Monomial r(g.nvars());
    bool hit = true;
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      if ((t.first.exp[i] + 1) % q != 0) {
        hit = false;
        break;
      }
      r.exp[i] = static_cast<std::int32_t>((t.first.exp[i] + 1) / q - 1);
    }
    if (hit) picked.push_back({std::move(r), t.second});
  }
  return ctx.reduce(Poly(ctx.p(), ctx.nvars(), std::move(picked)));
}

Ideal op_apply_ideal(const CartierOp& op, const Ideal& N) {
  // T_e(x^j * g) over the monomial basis |j| < p^e is exactly the set of
  // Frobenius components of g, so one decomposition per generator suffices.
  std::vector<Poly> gens;
  for (const auto& n : N.gb()) {
    Poly g = op.f() * n;
    if (g.is_zero()) continue;
    for (auto& [j, r] : frob_decompose(g, op.e())) gens.push_back(op.ctx().reduce(r));
  }
  return Ideal(N.ctx(), std::move(gens));
}

CartierOp op_compose(const CartierOp& phi, const CartierOp& psi) {
  Poly f = frobenius_power(phi.f(), psi.e());
  return CartierOp(phi.ctx(), phi.e() + psi.e(), f * psi.f());
}

bool op_descends(std::uint32_t e, const Poly& f, const Ideal& I) {
  Ideal bracket = bracket_power(I, e);
  for (const auto& g : I.gb())
    if (!member(f * g, bracket)) return false;
  return true;
}

std::vector<std::vector<CartierOp>> algebra_words(const CartierAlgebra& C,
                                                  std::uint32_t e_cap,
                                                  std::size_t word_limit) {
  std::vector<std::vector<CartierOp>> words(e_cap);
  std::size_t total = 0;
  auto push_unique = [&](std::vector<CartierOp>& bucket, CartierOp op) {
    for (const auto& w : bucket)
      if (w == op) return;
    if (++total > word_limit)
      fail(ErrorKind::WordLimit,
           "word count exceeds limit " + std::to_string(word_limit) +
               " at degree cap " + std::to_string(e_cap));
    bucket.push_back(std::move(op));
  };
  for (std::uint32_t d = 1; d <= e_cap; ++d) {
    for (const auto& g : C.generators()) {
      if (g.e() > d) continue;
      if (g.e() == d) {
        push_unique(words[d - 1], g);
        continue;
      }
      for (const auto& w : words[d - g.e() - 1])
        push_unique(words[d - 1], op_compose(g, w));
    }
  }
  return words;
}

GaugeBound gauge_bound(const CartierAlgebra& C) {
  std::int64_t K = 0;
  for (const auto& g : C.generators()) {
    GaugeValue gv = gauge(g.f());
    if (!gv.is_neg_infinity()) K = std::max(K, gv.value());
  }
  std::int64_t B = K / (C.ctx().p() - 1) + 1;
  if (C.twisted()) {
    std::int64_t d = 0;
    for (const auto& g : C.twist()->a.gb()) {
      GaugeValue gv = gauge(g);
      if (!gv.is_neg_infinity()) d = std::max(d, gv.value());
    }
    B += (C.twist()->t * Rational(d)).ceil();
  }
  return {K, B};
}

}  // namespace cartier
