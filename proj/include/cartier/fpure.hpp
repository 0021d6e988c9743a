#ifndef CARTIER_FPURE_HPP
#define CARTIER_FPURE_HPP

#include <optional>

#include "cartier/cartier_op.hpp"

namespace cartier {

struct EvalOptions {
  std::uint32_t e_cap = 8;          // certificate degree cap for twisted sums
  std::size_t word_limit = 4096;    // composition-count guard
  int iter_cap = 64;                // fixed-point iteration guard
  std::size_t slice_limit = 400000; // max box size for gauge slices
};

struct FpureReport {
  Ideal underline;
  std::vector<Ideal> chain;  // chain[k] = C_+^k M, up to the stable member
  std::size_t stable_at = 0;
  bool is_fpure = false;
  std::optional<std::size_t> nilpotency_order;
};

struct FpureWitness {
  CartierOp op;   // element of C_E with op(g) = 1
  Poly g;
  bool single_word;  // op is a composition of generators, not a combination
};

// One application U(N): untwisted, the sum of generator images of N;
// twisted, the degree-graded sum over words of degree e <= e_cap applied
// through the multipliers a^{ceil(t(p^e-1))}.
Ideal single_step(const CartierAlgebra& C, const Ideal& N, std::uint32_t e_cap,
                  std::size_t word_limit = 4096);

// C_+ N: least fixed point of X -> X + U(X) above U(N). Exact for untwisted
// algebras (ACC); for twisted algebras the degree cap grows until the result
// stabilizes for two consecutive caps and regenerates from its gauge slice.
Ideal cplus(const CartierAlgebra& C, const Ideal& N,
            const EvalOptions& opts = {});

// Descending chain M >= C_+M >= C_+^2 M >= ... down to the stable member
// (the largest F-pure submodule).
FpureReport underline(const CartierAlgebra& C, const Ideal& M,
                      const EvalOptions& opts = {});

bool is_fpure(const CartierAlgebra& C, const Ideal& M,
              const EvalOptions& opts = {});

// For F-pure (R, C): an operator phi in C_E and g with phi(g) = 1.
std::optional<FpureWitness> fpure_witness(const CartierAlgebra& C,
                                          const EvalOptions& opts = {});

std::optional<std::size_t> is_nilpotent(const CartierAlgebra& C, const Ideal& M,
                                        const EvalOptions& opts = {});

// Ann_R M of an F-pure module is radical; checks it via the monomial path
// (or a caller-supplied radical).
bool check_reduced_annihilator(const CartierAlgebra& C, const Ideal& M,
                               const std::optional<Ideal>& user_radical = {});

// Elements of J with gauge <= B, as generators of the F_p-subspace
// {v in R : gauge(v) <= B, v in J}. Used by the truncation certificates and
// the nukleus-style regeneration tests.
std::vector<Poly> gauge_slice_generators(const Ideal& J, std::int64_t B,
                                         std::size_t slice_limit = 400000);

std::int64_t gens_gauge(const Ideal& J);

}  // namespace cartier

#endif
