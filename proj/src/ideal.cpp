#include "cartier/ideal.hpp"

#include <algorithm>

namespace cartier {

Ideal::Ideal(RingCtx ctx, std::vector<Poly> gens)
    : ctx_(std::move(ctx)), gens_(std::move(gens)) {
  std::vector<Poly> all = gens_;
  for (const auto& q : ctx_.quotient_gb()) all.push_back(q);
  gb_ = buchberger(all);
}

bool Ideal::is_zero() const { return gb_ == ctx_.quotient_gb(); }

bool Ideal::is_unit() const { return gb_.size() == 1 && gb_[0].is_one(); }

std::string Ideal::str() const {
  if (gb_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < gb_.size(); ++i) {
    if (i) out += ", ";
    out += gb_[i].str(ctx_.vars());
  }
  return out + ")";
}

Poly normal_form(const Poly& f, const Ideal& J) {
  return normal_form(f, J.gb(), MonomialOrder{});
}

bool member(const Poly& f, const Ideal& J) { return normal_form(f, J).is_zero(); }

bool ideal_equals(const Ideal& J, const Ideal& K) { return J == K; }

bool ideal_contains(const Ideal& J, const Ideal& K) {
  for (const auto& g : K.gb())
    if (!member(g, J)) return false;
  return true;
}

Ideal ideal_sum(const Ideal& J, const Ideal& K) {
  std::vector<Poly> gens = J.gb();
  for (const auto& g : K.gb()) gens.push_back(g);
  return Ideal(J.ctx(), std::move(gens));
}

Ideal ideal_product(const Ideal& J, const Ideal& K) {
  std::vector<Poly> gens;
  for (const auto& a : J.gb())
    for (const auto& b : K.gb()) gens.push_back(a * b);
  return Ideal(J.ctx(), std::move(gens));
}

Ideal ideal_power(const Ideal& J, std::uint64_t n) {
  Ideal result = Ideal::unit(J.ctx());
  for (std::uint64_t i = 0; i < n; ++i) result = ideal_product(result, J);
  return result;
}

Ideal multiply(const Poly& c, const Ideal& J) {
  std::vector<Poly> gens;
  for (const auto& g : J.gb()) gens.push_back(c * g);
  return Ideal(J.ctx(), std::move(gens));
}

Ideal bracket_power(const Ideal& J, std::uint32_t e) {
  if (e == 0) fail(ErrorKind::Internal, "bracket_power needs e >= 1");
  std::vector<Poly> gens;
  for (const auto& g : J.gb()) gens.push_back(frobenius_power(g, e));
  return Ideal(J.ctx(), std::move(gens));
}

Ideal twist_power(const Ideal& a, const Rational& t, std::uint32_t e) {
  std::int64_t q = prime_power(a.ctx().p(), e);
  std::int64_t k = (t * Rational(q - 1)).ceil();
  if (k < 0) fail(ErrorKind::Internal, "negative twist exponent");
  return ideal_power(a, static_cast<std::uint64_t>(k));
}

namespace {

// Widen polynomials into S[u] with u as a leading elimination variable.
Poly widen(const Poly& f) {
  std::vector<Poly::Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(t.first.nvars() + 1);
    for (std::size_t i = 0; i < t.first.nvars(); ++i) m.exp[i + 1] = t.first.exp[i];
    terms.push_back({std::move(m), t.second});
  }
  return Poly(f.p(), f.nvars() + 1, std::move(terms));
}

Poly narrow(const Poly& f) {
  std::vector<Poly::Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m(t.first.nvars() - 1);
    for (std::size_t i = 0; i + 1 < t.first.nvars(); ++i) m.exp[i] = t.first.exp[i + 1];
    terms.push_back({std::move(m), t.second});
  }
  return Poly(f.p(), f.nvars() - 1, std::move(terms));
}

bool uses_first_var(const Poly& f) {
  for (const auto& t : f.terms())
    if (t.first.exp[0] > 0) return true;
  return false;
}

// Exact division f / g; errors if g does not divide f.
Poly exact_divide(const Poly& f, const Poly& g) {
  const std::uint32_t p = f.p();
  Poly rest = f;
  Poly quot(p, f.nvars());
  while (!rest.is_zero()) {
    const auto& [m, c] = rest.lead();
    if (!g.lead().first.divides(m))
      fail(ErrorKind::Internal, "inexact division");
    Monomial qm = m / g.lead().first;
    std::uint32_t qc = mod_mul(c, mod_inv(g.lead().second, p), p);
    quot = quot + Poly::monomial(p, qm, qc);
    rest = rest - g.mul_term(qm, qc);
  }
  return quot;
}

// Intersection of plain S-level ideals via elimination of u from
// u*A + (1-u)*B. Inputs and output are generator lists in S.
std::vector<Poly> intersect_raw(const std::vector<Poly>& A,
                                const std::vector<Poly>& B, std::uint32_t p,
                                std::size_t nvars) {
  Poly u = Poly::monomial(p, [&] {
    Monomial m(nvars + 1);
    m.exp[0] = 1;
    return m;
  }());
  Poly one_minus_u = Poly::constant(p, nvars + 1, 1) - u;
  std::vector<Poly> gens;
  for (const auto& g : A) gens.push_back(u * widen(g));
  for (const auto& g : B) gens.push_back(one_minus_u * widen(g));
  MonomialOrder ord{1};
  std::vector<Poly> gb = buchberger(gens, ord);
  std::vector<Poly> contracted;
  for (const auto& g : gb)
    if (!uses_first_var(g)) contracted.push_back(narrow(g));
  return contracted;
}

// (A : g) in S for a generator list A; every element of A cap (g) is an
// exact g-multiple in S, so the division below cannot fail.
std::vector<Poly> colon_raw(const std::vector<Poly>& A, const Poly& g) {
  std::vector<Poly> meet = intersect_raw(A, {g}, g.p(), g.nvars());
  std::vector<Poly> gens;
  for (const auto& h : meet) gens.push_back(exact_divide(h, g));
  return gens;
}

}  // namespace

// Preimage intersection; both preimages contain the quotient ideal, so this
// is the intersection in R as well.
Ideal intersect(const Ideal& J, const Ideal& K) {
  return Ideal(J.ctx(),
               intersect_raw(J.gb(), K.gb(), J.ctx().p(), J.ctx().nvars()));
}

// (J :_R g) via the preimage identity (J :_R g)_pre = (J_pre :_S g~).
Ideal colon(const Ideal& J, const Poly& g) {
  Poly gr = J.ctx().reduce(g);
  if (gr.is_zero()) return Ideal::unit(J.ctx());
  return Ideal(J.ctx(), colon_raw(J.gb(), gr));
}

Ideal colon(const Ideal& J, const Ideal& K) {
  if (K.is_zero()) return Ideal::unit(J.ctx());
  std::vector<Poly> result;
  bool first = true;
  for (const auto& g : K.gb()) {
    std::vector<Poly> c = colon_raw(J.gb(), g);
    result = first ? c
                   : intersect_raw(result, c, J.ctx().p(), J.ctx().nvars());
    first = false;
  }
  return Ideal(J.ctx(), std::move(result));
}

Ideal saturate(const Ideal& J, const Poly& c) {
  Ideal current = J;
  for (int iter = 0; iter < 64; ++iter) {
    Ideal next = colon(current, c);
    if (next == current) return current;
    current = next;
  }
  fail(ErrorKind::IterLimit, "saturation did not stabilize within 64 steps");
}

bool is_monomial_ideal(const Ideal& J) {
  for (const auto& g : J.gb())
    if (g.terms().size() != 1) return false;
  return true;
}

static void require_monomial(const Ideal& J) {
  if (!is_monomial_ideal(J))
    fail(ErrorKind::NotMonomial,
         "operation requires a monomial ideal, got " + J.str());
}

Ideal monomial_radical(const Ideal& J) {
  require_monomial(J);
  std::vector<Poly> gens;
  for (const auto& g : J.gb()) {
    Monomial m = g.lead().first;
    for (auto& e : m.exp) e = e > 0 ? 1 : 0;
    gens.push_back(Poly::monomial(J.ctx().p(), std::move(m)));
  }
  return Ideal(J.ctx(), std::move(gens));
}

std::vector<Ideal> monomial_minimal_primes(const Ideal& J) {
  require_monomial(J);
  const RingCtx& ctx = J.ctx();
  if (J.gb().empty()) return {Ideal::zero(ctx)};  // (0) in a domain
  if (J.is_unit()) return {};
  std::size_t n = ctx.nvars();
  if (n > 20) fail(ErrorKind::NotSupported, "too many variables");
  std::vector<std::uint32_t> supports;
  for (const auto& g : J.gb()) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (g.lead().first.exp[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  // Minimal hitting sets of the generator supports.
  std::vector<std::uint32_t> minimal;
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < (1u << n); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (std::uint32_t m : masks) {
    bool hits = true;
    for (std::uint32_t s : supports)
      if (!(s & m)) {
        hits = false;
        break;
      }
    if (!hits) continue;
    bool dominated = false;
    for (std::uint32_t k : minimal)
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    if (!dominated) minimal.push_back(m);
  }
  std::vector<Ideal> primes;
  for (std::uint32_t m : minimal) {
    std::vector<Poly> gens;
    for (std::size_t i = 0; i < n; ++i)
      if (m & (1u << i)) gens.push_back(ctx.var(i));
    primes.push_back(Ideal(ctx, std::move(gens)));
  }
  return primes;
}

}  // namespace cartier
