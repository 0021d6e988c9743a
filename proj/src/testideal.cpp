#include "cartier/testideal.hpp"

#include <algorithm>

namespace cartier {

namespace {

Ideal closure_once(const CartierAlgebra& C, const Ideal& G,
                   std::uint32_t e_cap, const EvalOptions& opts) {
  Ideal P = G;
  for (int iter = 0; iter < opts.iter_cap; ++iter) {
    Ideal next = ideal_sum(P, single_step(C, P, e_cap, opts.word_limit));
    if (next == P) return P;
    P = next;
  }
  fail(ErrorKind::IterLimit, "closure iteration did not stabilize within " +
                                 std::to_string(opts.iter_cap) + " steps");
}

}  // namespace

Ideal closure(const CartierAlgebra& C, const Ideal& G, const EvalOptions& opts) {
  if (!C.twisted()) return closure_once(C, G, 1, opts);
  GaugeBound bound = gauge_bound(C);
  std::int64_t dG = gens_gauge(G);
  std::uint32_t p = C.ctx().p();
  std::int64_t Bp = std::max(dG, (dG + p - 1) / p + bound.B);
  std::optional<Ideal> prev;
  for (std::uint32_t E = 1; E <= opts.e_cap; ++E) {
    Ideal P = closure_once(C, G, E, opts);
    if (prev && P == *prev) {
      std::vector<Poly> slice = gauge_slice_generators(P, Bp, opts.slice_limit);
      if (Ideal(C.ctx(), slice) == P) return P;
    }
    prev = std::move(P);
  }
  fail(ErrorKind::IterLimit,
       "twisted closure did not certify stabilization by degree cap " +
           std::to_string(opts.e_cap) + "; raise e_cap");
}

std::vector<Ideal> resolve_minimal_primes(
    const Ideal& ann, const std::optional<std::vector<Ideal>>& user,
    bool domain_flag) {
  if (user) return *user;
  if (ann.is_unit()) return {};
  bool ann_is_zero_of_s = ann.gb().empty();
  if (domain_flag || (!ann.ctx().has_quotient() && ann_is_zero_of_s)) {
    if (!ann_is_zero_of_s && !ann.is_zero())
      fail(ErrorKind::MissingMinimalPrimes,
           "domain flag set but the annihilator is nonzero; supply "
           "minimal_primes explicitly");
    return {Ideal::zero(ann.ctx())};
  }
  if (is_monomial_ideal(ann)) return monomial_minimal_primes(ann);
  fail(ErrorKind::MissingMinimalPrimes,
       "cannot determine minimal primes of " + ann.str() +
           ": not monomial; supply minimal_primes or set domain = true");
}

TestElementChecks verify_test_element(const CartierAlgebra& C,
                                      const Ideal& underline_m, const Poly& c,
                                      const std::vector<Ideal>& minimal_primes,
                                      const EvalOptions& opts) {
  TestElementChecks checks;
  Poly cr = C.ctx().reduce(c);
  if (cr.is_zero()) return checks;
  checks.in_r_circ = true;
  for (const auto& eta : minimal_primes)
    if (member(cr, eta)) {
      checks.in_r_circ = false;
      return checks;
    }
  Ideal j1 = closure(C, multiply(cr, underline_m), opts);
  Ideal j2 = closure(C, multiply(cr * cr, underline_m), opts);
  checks.t_independent = (j1 == j2);
  checks.closure_fpure = (cplus(C, j1, opts) == j1);
  Ideal quot = colon(j1, underline_m);
  checks.generic_agreement = true;
  for (const auto& eta : minimal_primes)
    if (ideal_contains(eta, quot)) {
      checks.generic_agreement = false;
      break;
    }
  return checks;
}

namespace {

void add_candidate(std::vector<TestElement>& out, const RingCtx& ctx,
                   const Poly& c, const std::string& origin) {
  Poly cr = ctx.reduce(c);
  if (cr.is_zero()) return;
  for (const auto& e : out)
    if (e.c == cr) return;
  out.push_back({cr, {}, origin});
}

Poly partial_derivative(const Poly& f, std::size_t var) {
  std::vector<Poly::Term> terms;
  for (const auto& t : f.terms()) {
    if (t.first.exp[var] == 0) continue;
    std::uint32_t factor =
        static_cast<std::uint32_t>(t.first.exp[var] % f.p());
    if (factor == 0) continue;
    Monomial m = t.first;
    m.exp[var] -= 1;
    terms.push_back({std::move(m), mod_mul(t.second, factor, f.p())});
  }
  return Poly(f.p(), f.nvars(), std::move(terms));
}

// All k x k minors of the Jacobian matrix of the given polynomials, plus the
// sums of the singular-locus generators; the classical source of test
// elements (elements of the Jacobian ideal avoiding all minimal primes).
void jacobian_candidates(const RingCtx& ctx, const std::vector<Poly>& gens,
                         std::vector<TestElement>& out) {
  std::size_t m = gens.size(), n = ctx.nvars();
  if (m == 0) {
    add_candidate(out, ctx, ctx.one(), "one");
    return;
  }
  std::vector<std::vector<Poly>> jac(m, std::vector<Poly>());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      jac[i].push_back(partial_derivative(gens[i], j));

  Poly partial_sum = ctx.zero();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      add_candidate(out, ctx, jac[i][j], "jacobian");
      partial_sum = partial_sum + jac[i][j];
    }
  add_candidate(out, ctx, partial_sum, "jacobian");

  // Higher minors, k = 2..min(m, n), by Laplace expansion.
  std::size_t kmax = std::min(m, n);
  std::vector<std::size_t> rows, cols;
  auto minor_det = [&](auto&& self, const std::vector<std::size_t>& rr,
                       const std::vector<std::size_t>& cc) -> Poly {
    if (rr.size() == 1) return jac[rr[0]][cc[0]];
    Poly det = ctx.zero();
    std::vector<std::size_t> rsub(rr.begin() + 1, rr.end());
    for (std::size_t j = 0; j < cc.size(); ++j) {
      std::vector<std::size_t> csub;
      for (std::size_t k = 0; k < cc.size(); ++k)
        if (k != j) csub.push_back(cc[k]);
      Poly cof = self(self, rsub, csub) * jac[rr[0]][cc[j]];
      det = (j % 2 == 0) ? det + cof : det - cof;
    }
    return det;
  };
  for (std::size_t k = 2; k <= kmax; ++k) {
    std::vector<bool> rsel(m, false), csel(n, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    std::vector<std::vector<std::size_t>> rsets, csets;
    do {
      std::vector<std::size_t> rr;
      for (std::size_t i = 0; i < m; ++i)
        if (rsel[i]) rr.push_back(i);
      rsets.push_back(rr);
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    std::fill(csel.begin(), csel.end(), false);
    std::fill(csel.begin(), csel.begin() + k, true);
    do {
      std::vector<std::size_t> cc;
      for (std::size_t j = 0; j < n; ++j)
        if (csel[j]) cc.push_back(j);
      csets.push_back(cc);
    } while (std::prev_permutation(csel.begin(), csel.end()));
    Poly minor_sum = ctx.zero();
    for (const auto& rr : rsets)
      for (const auto& cc : csets) {
        Poly d = minor_det(minor_det, rr, cc);
        add_candidate(out, ctx, d, "jacobian");
        minor_sum = minor_sum + d;
      }
    add_candidate(out, ctx, minor_sum, "jacobian");
  }
}

struct TauCore {
  Ideal tau;
  TestElement used;
  std::vector<TestElement> verified;
  bool fpure_certified;
  bool regeneration_ok;
};

TauCore tau_core(const CartierAlgebra& C, const Ideal& underline_m,
                 const std::vector<Ideal>& minimal_primes,
                 const std::vector<Poly>& singular_locus_gens,
                 const std::optional<Poly>& user_c, const EvalOptions& opts) {
  const RingCtx& ctx = C.ctx();
  std::vector<TestElement> candidates;
  if (user_c) add_candidate(candidates, ctx, *user_c, "user");
  jacobian_candidates(ctx, singular_locus_gens, candidates);
  for (const auto& g : C.generators())
    add_candidate(candidates, ctx, g.f(), "kernel");
  if (C.twisted())
    for (const auto& g : C.twist()->a.gb()) add_candidate(candidates, ctx, g, "twist");

  std::vector<TestElement> verified;
  for (auto& cand : candidates) {
    cand.checks = verify_test_element(C, underline_m, cand.c, minimal_primes, opts);
    if (cand.checks.all()) verified.push_back(cand);
  }
  if (verified.empty())
    fail(ErrorKind::NoTestElement,
         "no test-element candidate passed verification (" +
             std::to_string(candidates.size()) + " tried)");

  Poly combined = ctx.one();
  for (const auto& v : verified) combined = ctx.reduce(combined * v.c);
  TestElement used{combined, {}, "product"};
  used.checks = verify_test_element(C, underline_m, combined, minimal_primes, opts);

  Ideal tau_ideal = closure(C, multiply(combined, underline_m), opts);
  bool fpure_certified = cplus(C, tau_ideal, opts) == tau_ideal;
  bool regen = true;
  for (const auto& v : verified)
    if (closure(C, multiply(v.c, tau_ideal), opts) != tau_ideal) {
      regen = false;
      break;
    }
  return {std::move(tau_ideal), std::move(used), std::move(verified),
          fpure_certified, regen};
}

std::vector<Poly> quotient_singular_gens(const RingCtx& ctx) {
  return ctx.quotient_gens();
}

TauResult make_result(const CartierAlgebra& C, const Ideal& underline_m,
                      TauCore core, const EvalOptions& opts) {
  (void)C;
  TauResult r{std::move(core.tau),
              underline_m,
              std::move(core.used),
              std::move(core.verified),
              opts.e_cap,
              core.fpure_certified,
              core.regeneration_ok};
  return r;
}

}  // namespace

TauResult tau(const CartierAlgebra& C, const Ideal& M,
              const std::optional<Poly>& user_c,
              const std::optional<std::vector<Ideal>>& user_minimal_primes,
              bool domain_flag, const EvalOptions& opts) {
  FpureReport rep = underline(C, M, opts);
  if (rep.underline.is_zero()) {
    TauResult r{Ideal::zero(C.ctx()), rep.underline,
                TestElement{C.ctx().one(), {}, "unused"},
                {},
                opts.e_cap,
                true,
                true};
    return r;
  }
  Ideal ann = colon(Ideal::zero(C.ctx()), rep.underline);
  std::vector<Ideal> primes =
      resolve_minimal_primes(ann, user_minimal_primes, domain_flag);
  TauCore core = tau_core(C, rep.underline, primes,
                          quotient_singular_gens(C.ctx()), user_c, opts);
  return make_result(C, rep.underline, std::move(core), opts);
}

TauResult tau_nonreduced(const CartierAlgebra& C,
                         const std::optional<std::vector<Poly>>& user_radical,
                         const std::optional<Poly>& user_c,
                         const std::optional<std::vector<Ideal>>& user_minimal_primes,
                         const EvalOptions& opts) {
  const RingCtx& ctx = C.ctx();
  if (!ctx.has_quotient())
    return tau(C, Ideal::unit(ctx), user_c, user_minimal_primes, false, opts);

  RingCtx base = RingCtx::polynomial_ring(ctx.p(), ctx.vars());
  Ideal I(base, ctx.quotient_gens());
  Ideal radical = user_radical ? Ideal(base, *user_radical)
                               : monomial_radical(I);
  // Reduced already: the plain pipeline applies.
  if (radical == I)
    return tau(C, Ideal::unit(ctx), user_c, user_minimal_primes, false, opts);

  // Generators must descend to R_red = S/sqrt(I).
  for (const auto& g : C.generators())
    if (!op_descends(g.e(), g.f(), radical))
      fail(ErrorKind::DescentFailure,
           "generator (e=" + std::to_string(g.e()) + ", f=" +
               g.f().str(ctx.vars()) +
               ") does not descend to S/sqrt(I): f*sqrt(I) is not inside "
               "sqrt(I)^[p^e]");

  FpureReport rep = underline(C, Ideal::unit(ctx), opts);
  if (rep.underline.is_zero()) {
    TauResult r{Ideal::zero(ctx), rep.underline,
                TestElement{ctx.one(), {}, "unused"},
                {},
                opts.e_cap,
                true,
                true};
    return r;
  }
  Ideal ann = colon(Ideal::zero(ctx), rep.underline);
  std::vector<Ideal> primes =
      resolve_minimal_primes(ann, user_minimal_primes, false);
  // Test elements come from the singular locus of R_red.
  TauCore core = tau_core(C, rep.underline, primes, radical.gb(), user_c, opts);
  return make_result(C, rep.underline, std::move(core), opts);
}

bool is_fregular(const CartierAlgebra& C, const Ideal& M,
                 const std::optional<Poly>& user_c,
                 const std::optional<std::vector<Ideal>>& user_minimal_primes,
                 bool domain_flag, const EvalOptions& opts) {
  if (M.is_zero()) return true;
  TauResult r = tau(C, M, user_c, user_minimal_primes, domain_flag, opts);
  return r.tau == r.underline_m && r.underline_m == M;
}

SkodaReport skoda_check(const CartierAlgebra& C, const Ideal& a,
                        const Rational& t, const std::optional<Poly>& user_c,
                        const std::optional<std::vector<Ideal>>& user_minimal_primes,
                        bool domain_flag, const EvalOptions& opts) {
  if (t < Rational(1))
    fail(ErrorKind::Config, "skoda check needs t >= 1");
  Ideal M = Ideal::unit(C.ctx());
  CartierAlgebra lower = C.with_twist({a, t - Rational(1)});
  CartierAlgebra upper = C.with_twist({a, t});
  TauResult tau_lower = tau(lower, M, user_c, user_minimal_primes, domain_flag, opts);
  TauResult tau_upper = tau(upper, M, user_c, user_minimal_primes, domain_flag, opts);
  SkodaReport rep{false,
                  false,
                  false,
                  ideal_product(a, tau_lower.tau),
                  tau_upper.tau};
  rep.containment = ideal_contains(rep.rhs, rep.lhs);
  rep.equality = rep.lhs == rep.rhs;
  std::size_t mu = is_monomial_ideal(a) ? a.gb().size() : a.gens().size();
  rep.equality_expected = t >= Rational(static_cast<std::int64_t>(mu));
  return rep;
}

}  // namespace cartier
