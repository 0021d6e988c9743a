#include "cartier/jumping.hpp"

namespace cartier {

std::optional<Ideal> TauCache::find(const Rational& t) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = table_.find({t.num(), t.den()});
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void TauCache::store(const Rational& t, const Ideal& value) {
  std::lock_guard<std::mutex> lock(mu_);
  table_.emplace(std::pair{t.num(), t.den()}, value);
}

Ideal tau_t(const CartierAlgebra& C, const Ideal& M, const Ideal& a,
            const Rational& t, const JumpOptions& opts, TauCache* cache) {
  if (t < Rational(0)) fail(ErrorKind::Config, "t must be >= 0");
  if (cache) {
    auto hit = cache->find(t);
    if (hit) return *hit;
  }
  CartierAlgebra algebra =
      (t.is_zero() || a.is_unit()) ? C.untwisted() : C.with_twist({a, t});
  TauResult r = tau(algebra, M, opts.user_c, opts.user_minimal_primes,
                    opts.domain_flag, opts.eval);
  if (cache) cache->store(t, r.tau);
  return r.tau;
}

namespace {

struct GridEval {
  const CartierAlgebra& C;
  const Ideal& M;
  const Ideal& a;
  const JumpOptions& opts;
  Rational step;
  TauCache cache;
  bool monotonicity_ok = true;

  Ideal at(std::int64_t k) {
    Rational t = step * Rational(k);
    return tau_t(C, M, a, t, opts, &cache);
  }

  void check_monotone(const Ideal& lo_val, const Ideal& hi_val) {
    // tau is non-increasing in t.
    if (!ideal_contains(lo_val, hi_val)) monotonicity_ok = false;
  }
};

void bisect(GridEval& ev, std::int64_t ka, std::int64_t kb,
            std::vector<std::int64_t>& jumps) {
  Ideal va = ev.at(ka), vb = ev.at(kb);
  ev.check_monotone(va, vb);
  if (va == vb) return;
  if (kb - ka == 1) {
    jumps.push_back(kb);
    return;
  }
  std::int64_t mid = ka + (kb - ka) / 2;
  Ideal vm = ev.at(mid);
  if (vm != va) bisect(ev, ka, mid, jumps);
  if (vm != vb) bisect(ev, mid, kb, jumps);
}

}  // namespace

JumpReport jumps_in_range(const CartierAlgebra& C, const Ideal& M,
                          const Ideal& a, const Rational& T, std::uint32_t E,
                          const JumpOptions& opts) {
  if (!(T > Rational(0))) fail(ErrorKind::Config, "T must be > 0");
  if (E < 1) fail(ErrorKind::Config, "resolution exponent E must be >= 1");
  std::int64_t denom = prime_power(C.ctx().p(), E) - 1;
  Rational step(1, denom);
  std::int64_t kmax = (T / step).floor();
  if (kmax < 1) fail(ErrorKind::Config, "T is below one grid step");

  GridEval ev{C, M, a, opts, step, {}, true};
  std::vector<std::int64_t> jump_ks;
  bisect(ev, 0, kmax, jump_ks);
  std::sort(jump_ks.begin(), jump_ks.end());

  JumpReport rep;
  rep.resolution = step;
  rep.T = T;
  rep.ideals.push_back(ev.at(0));
  for (std::size_t i = 0; i < jump_ks.size(); ++i) {
    rep.jumps.push_back(step * Rational(jump_ks[i]));
    rep.ideals.push_back(ev.at(jump_ks[i]));
    bool cramped = (i == 0) ? false : (jump_ks[i] - jump_ks[i - 1] < 2);
    rep.unresolved.push_back(cramped);
  }
  rep.monotonicity_ok = ev.monotonicity_ok;
  if (!rep.monotonicity_ok)
    fail(ErrorKind::Internal,
         "tau(a^t) failed monotonicity on the grid; e_cap soundness is in "
         "question");
  return rep;
}

FptResult fpt(const CartierAlgebra& C, const Ideal& a, const Rational& T,
              std::uint32_t E, const JumpOptions& opts) {
  if (!is_fpure(C.untwisted(), Ideal::unit(C.ctx()), opts.eval))
    fail(ErrorKind::NotFpure, "the untwisted pair (R, C) is not F-pure");
  std::int64_t denom = prime_power(C.ctx().p(), E) - 1;
  Rational step(1, denom);
  std::int64_t kmax = (T / step).floor();
  if (kmax < 1) fail(ErrorKind::Config, "T is below one grid step");

  GridEval ev{C, Ideal::unit(C.ctx()), a, opts, step, {}, true};
  Ideal base = ev.at(0);
  FptResult res;
  res.resolution = step;
  res.T = T;
  if (ev.at(kmax) == base) {
    res.found = false;
    return res;
  }
  // Leftmost change: smallest k with tau(k) != tau(0).
  std::int64_t lo = 0, hi = kmax;
  while (hi - lo > 1) {
    std::int64_t mid = lo + (hi - lo) / 2;
    if (ev.at(mid) == base)
      lo = mid;
    else
      hi = mid;
  }
  res.found = true;
  res.value = step * Rational(hi);
  return res;
}

}  // namespace cartier
