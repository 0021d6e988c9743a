#include "cartier/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cartier {

namespace {

Monomial block_part(const Monomial& m, std::size_t k, bool head) {
  Monomial r(head ? k : m.exp.size() - k);
  for (std::size_t i = 0; i < r.exp.size(); ++i)
    r.exp[i] = m.exp[head ? i : k + i];
  return r;
}

}  // namespace

bool MonomialOrder::less(const Monomial& a, const Monomial& b) const {
  if (elim_block == 0) return grevlex_less(a, b);
  Monomial ha = block_part(a, elim_block, true), hb = block_part(b, elim_block, true);
  if (ha != hb) return grevlex_less(ha, hb);
  return grevlex_less(block_part(a, elim_block, false),
                      block_part(b, elim_block, false));
}

std::size_t lead_index(const Poly& f, const MonomialOrder& ord) {
  if (f.is_zero()) fail(ErrorKind::Internal, "lead of zero polynomial");
  if (ord.elim_block == 0) return 0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < f.terms().size(); ++i)
    if (ord.less(f.terms()[best].first, f.terms()[i].first)) best = i;
  return best;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord) {
  const std::uint32_t p = f.p();
  std::vector<std::pair<Monomial, std::uint32_t>> lead;
  lead.reserve(basis.size());
  for (const auto& b : basis) {
    std::size_t li = lead_index(b, ord);
    lead.push_back({b.terms()[li].first, b.terms()[li].second});
  }

  Poly g = f;
  std::vector<Poly::Term> remainder;
  while (!g.is_zero()) {
    std::size_t li = lead_index(g, ord);
    const auto& [m, c] = g.terms()[li];
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!lead[i].first.divides(m)) continue;
      std::uint32_t factor = mod_mul(c, mod_inv(lead[i].second, p), p);
      g = g - basis[i].mul_term(m / lead[i].first, factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder.push_back({m, c});
      g = g - Poly::monomial(p, m, c);
    }
  }
  return Poly(p, f.nvars(), std::move(remainder));
}

namespace {

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

Monomial lcm_mono(const Monomial& a, const Monomial& b) {
  Monomial r(a.exp.size());
  for (std::size_t i = 0; i < a.exp.size(); ++i)
    r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  return true;
}

Poly spoly(const Poly& f, const Poly& g, const MonomialOrder& ord) {
  const std::uint32_t p = f.p();
  const auto& lf = f.terms()[lead_index(f, ord)];
  const auto& lg = g.terms()[lead_index(g, ord)];
  Monomial l = lcm_mono(lf.first, lg.first);
  Poly a = f.mul_term(l / lf.first, mod_inv(lf.second, p));
  Poly b = g.mul_term(l / lg.first, mod_inv(lg.second, p));
  return a - b;
}

}  // namespace

std::vector<Poly> buchberger(const std::vector<Poly>& gens,
                             const MonomialOrder& ord) {
  std::vector<Poly> basis;
  for (const auto& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return {};

  auto lm = [&](std::size_t i) {
    return basis[i].terms()[lead_index(basis[i], ord)].first;
  };

  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::vector<Pair> queue;
  auto push_pairs = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i) {
      queue.push_back({i, upto, lcm_mono(lm(i), lm(upto))});
      pending.insert({i, upto});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  auto pick = [&]() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < queue.size(); ++k) {
      const Monomial &a = queue[k].lcm, &b = queue[best].lcm;
      if (grevlex_less(a, b))
        best = k;
      else if (a == b && std::pair(queue[k].i, queue[k].j) <
                             std::pair(queue[best].i, queue[best].j))
        best = k;
    }
    Pair pr = queue[best];
    queue.erase(queue.begin() + best);
    pending.erase({pr.i, pr.j});
    return pr;
  };

  while (!queue.empty()) {
    Pair pr = pick();
    const Monomial li = lm(pr.i), lj = lm(pr.j);
    if (coprime(li, lj)) continue;  // product criterion
    // Chain criterion: some k divides the lcm and both side pairs are done.
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!lm(k).divides(pr.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::pair(a, b) : std::pair(b, a);
      };
      if (!pending.count(key(pr.i, k)) && !pending.count(key(pr.j, k)))
        skip = true;
    }
    if (skip) continue;
    Poly h = normal_form(spoly(basis[pr.i], basis[pr.j], ord), basis, ord);
    if (!h.is_zero()) {
      basis.push_back(h.monic());
      push_pairs(basis.size() - 1);
    }
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (lm(j).divides(lm(i)) && (lm(j) != lm(i) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Full interreduction makes the basis reduced, hence unique.
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly h = normal_form(minimal[i], others, ord);
    if (!h.is_zero()) reduced.push_back(h.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
    const Monomial& ma = a.terms()[lead_index(a, ord)].first;
    const Monomial& mb = b.terms()[lead_index(b, ord)].first;
    if (ma != mb) return ord.less(mb, ma);
    return a.less(b);
  });
  return reduced;
}

}  // namespace cartier
