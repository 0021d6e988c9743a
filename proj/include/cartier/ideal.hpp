#ifndef CARTIER_IDEAL_HPP
#define CARTIER_IDEAL_HPP

#include <string>
#include <vector>

#include "cartier/groebner.hpp"
#include "cartier/rational.hpp"
#include "cartier/ring.hpp"

namespace cartier {

// Finitely generated ideal of a RingCtx, canonicalized by the reduced
// Groebner basis of its full preimage in S (quotient generators adjoined).
// Doubles as "coherent submodule of R". Immutable; equality is GB equality.
class Ideal {
 public:
  Ideal(RingCtx ctx, std::vector<Poly> gens);
  static Ideal zero(const RingCtx& ctx) { return Ideal(ctx, {}); }
  static Ideal unit(const RingCtx& ctx) { return Ideal(ctx, {ctx.one()}); }
  static Ideal span(const RingCtx& ctx, const Poly& g) {
    return Ideal(ctx, {g});
  }

  const RingCtx& ctx() const { return ctx_; }
  const std::vector<Poly>& gens() const { return gens_; }
  const std::vector<Poly>& gb() const { return gb_; }

  bool is_zero() const;  // zero ideal of the ctx (preimage == quotient ideal)
  bool is_unit() const;

  // Serialization: "(g1, g2, ...)" over the reduced preimage GB, or "(0)".
  std::string str() const;

  bool operator==(const Ideal& o) const { return gb_ == o.gb_; }
  bool operator!=(const Ideal& o) const { return gb_ != o.gb_; }

 private:
  RingCtx ctx_;
  std::vector<Poly> gens_;
  std::vector<Poly> gb_;
};

// Normal form of f modulo the ideal's preimage GB (canonical representative).
Poly normal_form(const Poly& f, const Ideal& J);

bool member(const Poly& f, const Ideal& J);
bool ideal_equals(const Ideal& J, const Ideal& K);
bool ideal_contains(const Ideal& J, const Ideal& K);  // K subset of J

Ideal ideal_sum(const Ideal& J, const Ideal& K);
Ideal ideal_product(const Ideal& J, const Ideal& K);
Ideal ideal_power(const Ideal& J, std::uint64_t n);
Ideal multiply(const Poly& c, const Ideal& J);

// Ideal generated by g^{p^e} over generators g of J.
Ideal bracket_power(const Ideal& J, std::uint32_t e);

// a^{ceil(t(p^e - 1))}; the degree-e multiplier of the F-graded system a^t.
Ideal twist_power(const Ideal& a, const Rational& t, std::uint32_t e);

Ideal intersect(const Ideal& J, const Ideal& K);
Ideal colon(const Ideal& J, const Ideal& K);
Ideal colon(const Ideal& J, const Poly& g);
Ideal saturate(const Ideal& J, const Poly& c);

bool is_monomial_ideal(const Ideal& J);
Ideal monomial_radical(const Ideal& J);
std::vector<Ideal> monomial_minimal_primes(const Ideal& J);

}  // namespace cartier

#endif
