#include "cartier/fpure.hpp"

#include <algorithm>
#include <map>

#include "cartier/gflinalg.hpp"

namespace cartier {

std::int64_t gens_gauge(const Ideal& J) {
  std::int64_t d = 0;
  for (const auto& g : J.gb()) {
    GaugeValue gv = gauge(g);
    if (!gv.is_neg_infinity()) d = std::max(d, gv.value());
  }
  return d;
}

namespace {

// Raw image generators of phi applied to N, appended to out.
void collect_image(const CartierOp& op, const std::vector<Poly>& gens,
                   std::vector<Poly>& out) {
  for (const auto& n : gens) {
    Poly g = op.f() * n;
    if (g.is_zero()) continue;
    for (auto& [j, r] : frob_decompose(g, op.e()))
      out.push_back(op.ctx().reduce(r));
  }
}

struct TwistPowerCache {
  std::map<std::int64_t, Ideal> powers;
  Ideal& get(const Ideal& a, std::int64_t k) {
    auto it = powers.find(k);
    if (it != powers.end()) return it->second;
    if (k == 0) return powers.emplace(0, Ideal::unit(a.ctx())).first->second;
    Ideal v = ideal_product(get(a, k - 1), a);
    return powers.emplace(k, std::move(v)).first->second;
  }
};

Ideal single_step_impl(const CartierAlgebra& C, const Ideal& N,
                       std::uint32_t e_cap, std::size_t word_limit,
                       TwistPowerCache* cache) {
  std::vector<Poly> image;
  if (!C.twisted()) {
    for (const auto& g : C.generators()) collect_image(g, N.gb(), image);
    return Ideal(N.ctx(), std::move(image));
  }
  auto words = algebra_words(C, e_cap, word_limit);
  TwistPowerCache local;
  TwistPowerCache& pc = cache ? *cache : local;
  const Ideal& a = C.twist()->a;
  const Rational& t = C.twist()->t;
  for (std::uint32_t e = 1; e <= e_cap; ++e) {
    if (words[e - 1].empty()) continue;
    std::int64_t q = prime_power(C.ctx().p(), e);
    std::int64_t k = (t * Rational(q - 1)).ceil();
    Ideal multiplied = ideal_product(pc.get(a, k), N);
    for (const auto& w : words[e - 1]) collect_image(w, multiplied.gb(), image);
  }
  return Ideal(N.ctx(), std::move(image));
}

Ideal fixpoint_above(const CartierAlgebra& C, const Ideal& start,
                     std::uint32_t e_cap, const EvalOptions& opts,
                     TwistPowerCache* cache) {
  Ideal P = start;
  for (int iter = 0; iter < opts.iter_cap; ++iter) {
    Ideal next = ideal_sum(P, single_step_impl(C, P, e_cap, opts.word_limit, cache));
    if (next == P) return P;
    P = next;
  }
  fail(ErrorKind::IterLimit, "C_+ iteration did not stabilize within " +
                                 std::to_string(opts.iter_cap) + " steps");
}

}  // namespace

Ideal single_step(const CartierAlgebra& C, const Ideal& N, std::uint32_t e_cap,
                  std::size_t word_limit) {
  return single_step_impl(C, N, e_cap, word_limit, nullptr);
}

std::vector<Poly> gauge_slice_generators(const Ideal& J, std::int64_t B,
                                         std::size_t slice_limit) {
  const RingCtx& ctx = J.ctx();
  std::size_t n = ctx.nvars();
  if (B < 0) return {};
  double size_estimate = 1;
  for (std::size_t i = 0; i < n; ++i) size_estimate *= double(B + 1);
  if (size_estimate > double(slice_limit))
    fail(ErrorKind::IterLimit,
         "gauge slice too large: (B+1)^n with B = " + std::to_string(B));

  // Box monomials |m| <= B, descending grevlex for determinism.
  std::vector<Monomial> box;
  Monomial cur(n);
  while (true) {
    box.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur.exp[i] == B) cur.exp[i++] = 0;
    if (i == n) break;
    ++cur.exp[i];
  }
  std::sort(box.begin(), box.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_less(b, a); });

  std::vector<Poly> nfs;
  nfs.reserve(box.size());
  bool monomial_path = true;
  for (const auto& m : box) {
    Poly nf = normal_form(Poly::monomial(ctx.p(), m), J);
    if (!nf.is_zero() && !(nf.is_monomial() && nf.lead().first == m))
      monomial_path = false;
    nfs.push_back(std::move(nf));
  }

  std::vector<Poly> out;
  if (monomial_path) {
    for (std::size_t i = 0; i < box.size(); ++i)
      if (nfs[i].is_zero()) out.push_back(Poly::monomial(ctx.p(), box[i]));
    return out;
  }

  // Kernel of c -> sum_i c_i * NF(x^i).
  std::map<Monomial, std::size_t, GrevlexLess> row_of;
  for (const auto& nf : nfs)
    for (const auto& t : nf.terms())
      row_of.emplace(t.first, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  GFMatrix A = GFMatrix::make(ctx.p(), row_of.size(), box.size());
  for (std::size_t i = 0; i < box.size(); ++i)
    for (const auto& t : nfs[i].terms()) A.at(row_of[t.first], i) = t.second;
  for (const auto& v : kernel_basis(A)) {
    std::vector<Poly::Term> terms;
    for (std::size_t i = 0; i < box.size(); ++i)
      if (v[i]) terms.push_back({box[i], v[i]});
    out.push_back(Poly(ctx.p(), n, std::move(terms)));
  }
  return out;
}

Ideal cplus(const CartierAlgebra& C, const Ideal& N, const EvalOptions& opts) {
  if (!C.twisted()) {
    Ideal start = single_step_impl(C, N, 1, opts.word_limit, nullptr);
    return fixpoint_above(C, start, 1, opts, nullptr);
  }
  TwistPowerCache cache;
  GaugeBound bound = gauge_bound(C);
  std::int64_t dN = gens_gauge(N);
  std::uint32_t p = C.ctx().p();
  std::int64_t Bp = (dN + p - 1) / p + bound.B;
  std::optional<Ideal> prev;
  for (std::uint32_t E = 1; E <= opts.e_cap; ++E) {
    Ideal start = single_step_impl(C, N, E, opts.word_limit, &cache);
    Ideal P = fixpoint_above(C, start, E, opts, &cache);
    if (prev && P == *prev) {
      std::vector<Poly> slice = gauge_slice_generators(P, Bp, opts.slice_limit);
      if (Ideal(C.ctx(), slice) == P) return P;
    }
    prev = std::move(P);
  }
  fail(ErrorKind::IterLimit,
       "twisted C_+ did not certify stabilization by degree cap " +
           std::to_string(opts.e_cap) + "; raise e_cap");
}

FpureReport underline(const CartierAlgebra& C, const Ideal& M,
                      const EvalOptions& opts) {
  FpureReport rep{Ideal::zero(C.ctx()), {M}, 0, false, std::nullopt};
  for (int iter = 0; iter < opts.iter_cap; ++iter) {
    Ideal next = cplus(C, rep.chain.back(), opts);
    if (next == rep.chain.back()) {
      rep.stable_at = rep.chain.size() - 1;
      rep.underline = rep.chain.back();
      rep.is_fpure = rep.chain[0] == rep.underline;
      if (rep.underline.is_zero()) {
        for (std::size_t k = 0; k < rep.chain.size(); ++k)
          if (rep.chain[k].is_zero()) {
            rep.nilpotency_order = k;
            break;
          }
      }
      return rep;
    }
    rep.chain.push_back(std::move(next));
  }
  fail(ErrorKind::IterLimit, "underline chain did not stabilize within " +
                                 std::to_string(opts.iter_cap) + " steps");
}

bool is_fpure(const CartierAlgebra& C, const Ideal& M, const EvalOptions& opts) {
  return cplus(C, M, opts) == M;
}

namespace {

// Solve 1 = sum_i c_i(x) * gens[i] with deg-bounded cofactors; returns the
// cofactors as polynomials when solvable.
std::optional<std::vector<Poly>> bounded_combination(const std::vector<Poly>& gens,
                                                     const RingCtx& ctx,
                                                     std::int64_t D) {
  std::size_t n = ctx.nvars();
  std::vector<Monomial> box;
  Monomial cur(n);
  while (true) {
    box.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur.exp[i] == D) cur.exp[i++] = 0;
    if (i == n) break;
    ++cur.exp[i];
  }
  std::map<Monomial, std::size_t, GrevlexLess> row_of;
  std::vector<std::vector<Poly>> products(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (const auto& m : box) {
      Poly prod = ctx.reduce(gens[g].mul_term(m, 1));
      for (const auto& t : prod.terms()) row_of.emplace(t.first, 0);
      products[g].push_back(std::move(prod));
    }
  }
  Monomial one(n);
  row_of.emplace(one, 0);
  std::size_t r = 0;
  for (auto& [m, idx] : row_of) idx = r++;
  GFMatrix A = GFMatrix::make(ctx.p(), row_of.size(), gens.size() * box.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t b = 0; b < box.size(); ++b)
      for (const auto& t : products[g][b].terms())
        A.at(row_of[t.first], g * box.size() + b) = t.second;
  std::vector<std::uint32_t> rhs(row_of.size(), 0);
  rhs[row_of[one]] = 1;
  auto sol = solve(A, rhs);
  if (!sol) return std::nullopt;
  std::vector<Poly> cofactors;
  for (std::size_t g = 0; g < gens.size(); ++g) {
    std::vector<Poly::Term> terms;
    for (std::size_t b = 0; b < box.size(); ++b)
      if ((*sol)[g * box.size() + b])
        terms.push_back({box[b], (*sol)[g * box.size() + b]});
    cofactors.push_back(Poly(ctx.p(), n, std::move(terms)));
  }
  return cofactors;
}

// Components r_j of f (j below the p^e grid), with T_e(x^{q-1-j} f) = r_j.
std::vector<std::pair<Monomial, Poly>> op_components(const CartierOp& op) {
  std::vector<std::pair<Monomial, Poly>> out;
  if (op.f().is_zero()) return out;
  std::int64_t q = prime_power(op.ctx().p(), op.e());
  for (auto& [j, rpoly] : frob_decompose(op.f(), op.e())) {
    Monomial shift(op.ctx().nvars());
    for (std::size_t i = 0; i < shift.nvars(); ++i)
      shift.exp[i] = static_cast<std::int32_t>(q - 1 - j.exp[i]);
    out.push_back({shift, op.ctx().reduce(rpoly)});
  }
  return out;
}

std::optional<FpureWitness> witness_from_ops(const std::vector<CartierOp>& ops,
                                             const RingCtx& ctx,
                                             std::uint32_t E) {
  std::vector<std::pair<Monomial, Poly>> comps;  // (shift monomial, component)
  std::vector<std::size_t> owner;
  std::vector<Poly> gens;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (auto& c : op_components(ops[i])) {
      if (c.second.is_zero()) continue;
      comps.push_back(c);
      owner.push_back(i);
      gens.push_back(c.second);
    }
  if (gens.empty()) return std::nullopt;
  if (!Ideal(ctx, gens).is_unit()) return std::nullopt;
  for (std::int64_t D = 0; D <= 16; ++D) {
    auto cof = bounded_combination(gens, ctx, D);
    if (!cof) continue;
    if (ops.size() == 1) {
      // g = sum_i c_i^{p^E} x^{shift_i}; then op(g) = sum c_i r_i = 1.
      Poly g = ctx.zero();
      for (std::size_t i = 0; i < gens.size(); ++i)
        g = g + frobenius_power((*cof)[i], E).mul_term(comps[i].first, 1);
      g = ctx.reduce(g);
      return FpureWitness{ops[0], g, true};
    }
    // Fold everything into one algebra element (E, h) with T_E(h) = 1.
    Poly h = ctx.zero();
    for (std::size_t i = 0; i < gens.size(); ++i)
      h = h + frobenius_power((*cof)[i], E).mul_term(comps[i].first, 1) *
                  ops[owner[i]].f();
    return FpureWitness{CartierOp(ctx, E, h), ctx.one(), false};
  }
  return std::nullopt;
}

}  // namespace

std::optional<FpureWitness> fpure_witness(const CartierAlgebra& C,
                                          const EvalOptions& opts) {
  if (C.twisted())
    fail(ErrorKind::NotSupported, "witness extraction is for untwisted algebras");
  Ideal R = Ideal::unit(C.ctx());
  if (!is_fpure(C, R, opts)) return std::nullopt;
  auto words = algebra_words(C, opts.e_cap, opts.word_limit);
  for (std::uint32_t E = 1; E <= opts.e_cap; ++E) {
    std::vector<CartierOp> unit_words;
    for (const auto& w : words[E - 1])
      if (op_apply_ideal(w, R).is_unit()) unit_words.push_back(w);
    // Prefer a single word; fall back to a combination across the degree.
    for (const auto& w : unit_words) {
      auto res = witness_from_ops({w}, C.ctx(), E);
      if (res) return res;
    }
    if (!words[E - 1].empty()) {
      auto res = witness_from_ops(words[E - 1], C.ctx(), E);
      if (res) return res;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> is_nilpotent(const CartierAlgebra& C, const Ideal& M,
                                        const EvalOptions& opts) {
  return underline(C, M, opts).nilpotency_order;
}

bool check_reduced_annihilator(const CartierAlgebra& C, const Ideal& M,
                               const std::optional<Ideal>& user_radical) {
  Ideal ann = colon(Ideal::zero(C.ctx()), M);
  Ideal rad = user_radical ? *user_radical : monomial_radical(ann);
  return ann == rad;
}

}  // namespace cartier
