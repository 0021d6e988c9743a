#ifndef CARTIER_CARTIER_OP_HPP
#define CARTIER_CARTIER_OP_HPP

#include <optional>
#include <vector>

#include "cartier/ideal.hpp"

namespace cartier {

// p^{-e}-linear operator m -> T_e(f * m), where T_e is the fundamental
// degree-e operator: T_e(x^a) = x^{(a+1)/p^e - 1} componentwise when every
// a_j is congruent to -1 mod p^e, and 0 otherwise. Over a quotient S/I the
// kernel polynomial must satisfy the descent condition f*I <= I^{[p^e]},
// checked at construction.
class CartierOp {
 public:
  CartierOp(RingCtx ctx, std::uint32_t e, Poly f);

  const RingCtx& ctx() const { return ctx_; }
  std::uint32_t e() const { return e_; }
  const Poly& f() const { return f_; }

  bool operator==(const CartierOp& o) const {
    return e_ == o.e_ && f_ == o.f_;
  }

 private:
  RingCtx ctx_;
  std::uint32_t e_;
  Poly f_;
};

struct Twist {
  Ideal a;
  Rational t;
};

// Finitely generated algebra of Cartier operators, optionally twisted by the
// F-graded system a^t (degree-e piece C_e * a^{ceil(t(p^e-1))}).
class CartierAlgebra {
 public:
  CartierAlgebra(RingCtx ctx, std::vector<CartierOp> generators,
                 std::optional<Twist> twist = std::nullopt);

  const RingCtx& ctx() const { return ctx_; }
  const std::vector<CartierOp>& generators() const { return generators_; }
  const std::optional<Twist>& twist() const { return twist_; }
  bool twisted() const;

  CartierAlgebra with_twist(Twist t) const {
    return CartierAlgebra(ctx_, generators_, std::move(t));
  }
  CartierAlgebra untwisted() const {
    return CartierAlgebra(ctx_, generators_, std::nullopt);
  }

 private:
  RingCtx ctx_;
  std::vector<CartierOp> generators_;
  std::optional<Twist> twist_;
};

struct GaugeBound {
  std::int64_t K;  // max gauge of generator kernels
  std::int64_t B;  // nukleus gauge floor(K/(p-1)) + 1 (+ ceil(t*d) if twisted)
};

// T_e(f * m); p^{-e}-linear in m, contracts the gauge by about p^e.
Poly op_apply_poly(const CartierOp& op, const Poly& m);

// R-submodule phi(N): generated by the Frobenius components of f*n over
// generators n of N (equivalently by phi(x^j * n) for all |j| < p^e).
Ideal op_apply_ideal(const CartierOp& op, const Ideal& N);

// phi o psi (psi applied first) = (e+e', f^{p^{e'}} * f').
CartierOp op_compose(const CartierOp& phi, const CartierOp& psi);

// Fedder-type check: f*I <= I^{[p^e]}, so T_e*f induces an operator on S/I.
bool op_descends(std::uint32_t e, const Poly& f, const Ideal& I);

// All compositions of generators with total degree d for 1 <= d <= e_cap,
// deduplicated; words[d-1] lists degree-d operators. Errors out when the
// total count exceeds word_limit.
std::vector<std::vector<CartierOp>> algebra_words(const CartierAlgebra& C,
                                                  std::uint32_t e_cap,
                                                  std::size_t word_limit);

GaugeBound gauge_bound(const CartierAlgebra& C);

}  // namespace cartier

#endif
