#include "cartier/oracles.hpp"

#include <algorithm>

namespace cartier {

std::int64_t nu_value(const Poly& f, std::uint32_t e) {
  if (f.is_zero()) fail(ErrorKind::Config, "nu of the zero polynomial");
  for (const auto& t : f.terms())
    if (t.first.is_one())
      fail(ErrorKind::Config, "nu requires f in the maximal ideal");
  std::int64_t q = prime_power(f.p(), e);
  auto in_bracket = [&](const Poly& g) {
    // g in (x_1^q,...,x_n^q) iff every monomial has some exponent >= q.
    for (const auto& t : g.terms()) {
      bool covered = false;
      for (auto ex : t.first.exp)
        if (ex >= q) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
    return true;
  };
  std::int64_t bound = static_cast<std::int64_t>(f.nvars()) * (q - 1) + 1;
  Poly power = Poly::constant(f.p(), f.nvars(), 1);
  for (std::int64_t r = 1; r <= bound + 1; ++r) {
    power = power * f;
    if (in_bracket(power)) return r - 1;
  }
  fail(ErrorKind::Internal, "nu search exceeded the pigeonhole bound");
}

NewtonPolyhedron NewtonPolyhedron::of(const std::vector<Monomial>& gens) {
  if (gens.empty()) fail(ErrorKind::Config, "Newton polyhedron of the zero ideal");
  std::size_t n = gens[0].nvars();
  if (n < 1 || n > 2)
    fail(ErrorKind::NotSupported,
         "Newton polyhedron facets implemented for 1 or 2 variables");
  NewtonPolyhedron np;
  np.generators = gens;
  if (n == 1) {
    std::int64_t m = gens[0].exp[0];
    for (const auto& g : gens) m = std::min<std::int64_t>(m, g.exp[0]);
    np.facets.push_back({{1}, m});
    return np;
  }
  // Staircase-minimal points, sorted by x ascending (y strictly descending).
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  for (const auto& g : gens) pts.push_back({g.exp[0], g.exp[1]});
  std::sort(pts.begin(), pts.end());
  std::vector<std::pair<std::int64_t, std::int64_t>> minimal;
  for (const auto& p : pts) {
    bool dominated = false;
    for (const auto& q : minimal)
      if (q.first <= p.first && q.second <= p.second) dominated = true;
    if (!dominated) {
      while (!minimal.empty() && p.first <= minimal.back().first &&
             p.second <= minimal.back().second)
        minimal.pop_back();
      minimal.push_back(p);
    }
  }
  std::int64_t xmin = minimal.front().first, ymin = minimal.back().second;
  for (const auto& q : minimal) {
    xmin = std::min(xmin, q.first);
    ymin = std::min(ymin, q.second);
  }
  np.facets.push_back({{1, 0}, xmin});
  np.facets.push_back({{0, 1}, ymin});
  // Lower hull of the staircase corners.
  std::vector<std::pair<std::int64_t, std::int64_t>> hull;
  for (const auto& p : minimal) {
    while (hull.size() >= 2) {
      auto [ox, oy] = hull[hull.size() - 2];
      auto [ax, ay] = hull[hull.size() - 1];
      std::int64_t cross = checked_mul(ax - ox, p.second - oy) -
                           checked_mul(ay - oy, p.first - ox);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    auto [x1, y1] = hull[i];
    auto [x2, y2] = hull[i + 1];
    std::vector<std::int64_t> a = {y1 - y2, x2 - x1};
    std::int64_t b = checked_add(checked_mul(a[0], x1), checked_mul(a[1], y1));
    np.facets.push_back({std::move(a), b});
  }
  return np;
}

bool NewtonPolyhedron::interior_after_shift(const Monomial& u,
                                            const Rational& t) const {
  for (const auto& facet : facets) {
    std::int64_t lhs = 0;
    for (std::size_t i = 0; i < facet.a.size(); ++i)
      lhs = checked_add(lhs, checked_mul(facet.a[i], u.exp[i] + 1));
    // <a, u+1> > t*b, exactly.
    if (!(Rational(lhs) > t * Rational(facet.b))) return false;
  }
  return true;
}

std::vector<Monomial> monomial_tau(std::uint32_t p,
                                   const std::vector<Monomial>& gens,
                                   const Rational& t) {
  (void)p;
  if (gens.empty()) fail(ErrorKind::Config, "monomial_tau of the zero ideal");
  std::size_t n = gens[0].nvars();
  for (const auto& g : gens)
    if (g.is_one() || t.is_zero()) return {Monomial(n)};  // unit ideal
  NewtonPolyhedron np = NewtonPolyhedron::of(gens);

  auto interior = [&](std::int64_t u0, std::int64_t u1) {
    Monomial u(n);
    u.exp[0] = static_cast<std::int32_t>(u0);
    if (n == 2) u.exp[1] = static_cast<std::int32_t>(u1);
    return np.interior_after_shift(u, t);
  };

  if (n == 1) {
    // Smallest u with u+1 > t*m.
    std::int64_t m = np.facets[0].b;
    std::int64_t u = (t * Rational(m) - Rational(1)).floor() + 1;
    if (u < 0) u = 0;
    Monomial g(1);
    g.exp[0] = static_cast<std::int32_t>(u);
    return {g};
  }

  // Row minima u0(u1) are non-increasing in u1. Beyond the bound below every
  // facet with a positive u1-coefficient is strictly satisfied even at the
  // floor column, so no further row introduces a new minimal generator.
  std::int64_t guard0 = 2, guard1 = 2;
  for (const auto& facet : np.facets) {
    if (facet.a[0] > 0)
      guard0 = std::max(guard0,
                        (t * Rational(facet.b, facet.a[0])).ceil() + 2);
    if (facet.a[1] > 0)
      guard1 = std::max(guard1,
                        (t * Rational(facet.b, facet.a[1])).ceil() + 2);
  }
  std::vector<Monomial> out;
  std::optional<std::int64_t> prev_min;
  for (std::int64_t u1 = 0; u1 <= guard1; ++u1) {
    std::optional<std::int64_t> row_min;
    std::int64_t hi = prev_min ? *prev_min : guard0;
    for (std::int64_t u0 = 0; u0 <= hi; ++u0)
      if (interior(u0, u1)) {
        row_min = u0;
        break;
      }
    if (row_min && (!prev_min || *row_min < *prev_min)) {
      Monomial g(2);
      g.exp[0] = static_cast<std::int32_t>(*row_min);
      g.exp[1] = static_cast<std::int32_t>(u1);
      out.push_back(std::move(g));
    }
    if (row_min) prev_min = row_min;
    if (row_min && *row_min == 0) break;  // floor reached; rows repeat
  }
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlex_less(b, a); });
  return out;
}

namespace {

std::int64_t degree_1v(const Poly& f) { return f.lead().first.exp[0]; }

Poly gcd_1v(Poly a, Poly b) {
  while (!b.is_zero()) {
    // a mod b
    while (!a.is_zero() && degree_1v(a) >= degree_1v(b)) {
      Monomial shift(1);
      shift.exp[0] = static_cast<std::int32_t>(degree_1v(a) - degree_1v(b));
      std::uint32_t c =
          mod_mul(a.lead().second, mod_inv(b.lead().second, a.p()), a.p());
      a = a - b.mul_term(shift, c);
    }
    std::swap(a, b);
  }
  return a.is_zero() ? a : a.monic();
}

// U((g)) for a principal ideal of F_p[x]: gcd of all Frobenius components of
// f_i * g over the operators.
Poly one_var_step(const std::vector<std::pair<std::uint32_t, Poly>>& ops,
                  const Poly& g) {
  Poly acc = Poly::zero(g.p(), 1);
  for (const auto& [e, f] : ops) {
    Poly prod = f * g;
    if (prod.is_zero()) continue;
    for (auto& [j, r] : frob_decompose(prod, e)) acc = gcd_1v(acc, r);
  }
  return acc;
}

Poly one_var_cplus(const std::vector<std::pair<std::uint32_t, Poly>>& ops,
                   const Poly& g) {
  Poly current = one_var_step(ops, g);
  for (int iter = 0; iter < 256; ++iter) {
    Poly next = gcd_1v(current, one_var_step(ops, current));
    if (next == current) return current;
    current = next;
  }
  fail(ErrorKind::IterLimit, "one-variable C_+ did not stabilize");
}

}  // namespace

std::vector<Poly> bruteforce_closed_ideals(
    const std::vector<std::pair<std::uint32_t, Poly>>& ops, std::uint32_t p,
    std::int64_t gauge_cap) {
  if (gauge_cap > 12)
    fail(ErrorKind::Config, "one-variable enumeration capped at gauge 12");
  for (const auto& [e, f] : ops)
    if (f.nvars() != 1) fail(ErrorKind::Config, "oracle requires one variable");
  std::vector<Poly> stable;
  for (std::int64_t k = 0; k <= gauge_cap; ++k) {
    Monomial m(1);
    m.exp[0] = static_cast<std::int32_t>(k);
    Poly g = Poly::monomial(p, m);
    if (one_var_cplus(ops, g) == g) stable.push_back(g);
  }
  stable.push_back(Poly::zero(p, 1));  // the zero ideal is always fixed
  return stable;
}

}  // namespace cartier
