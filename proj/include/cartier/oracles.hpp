#ifndef CARTIER_ORACLES_HPP
#define CARTIER_ORACLES_HPP

#include <vector>

#include "cartier/poly.hpp"
#include "cartier/rational.hpp"

namespace cartier {

// Brute-force and closed-form cross-checks. These share only the polynomial
// layer with the main pipeline, so agreement is evidence, not tautology.

// nu-invariant: max{r >= 0 : f^r not in (x_1^{p^e},...,x_n^{p^e})}, by exact
// exponentiation and monomial divisibility. Requires f in (x_1,...,x_n).
std::int64_t nu_value(const Poly& f, std::uint32_t e);

// Newton polyhedron conv(exponents) + R_{>=0}^n of a monomial ideal, with
// exact facet inequalities <a, u> >= b. Supported for n <= 2.
struct NewtonPolyhedron {
  struct Facet {
    std::vector<std::int64_t> a;
    std::int64_t b;
  };
  std::vector<Monomial> generators;
  std::vector<Facet> facets;

  static NewtonPolyhedron of(const std::vector<Monomial>& gens);
  // Is u + (1,..,1) in the interior of t * Newt?
  bool interior_after_shift(const Monomial& u, const Rational& t) const;
};

// Monomial test ideal via the Newton polyhedron: minimal monomial generators
// x^u with u + 1 interior to t*Newt(a). Exact rational arithmetic.
std::vector<Monomial> monomial_tau(std::uint32_t p,
                                   const std::vector<Monomial>& gens,
                                   const Rational& t);

// One-variable exhaustive check. Candidates are 0, R, and (x^k) for
// k <= gauge_cap; returns the generators of those fixed by C_+ (monic x^k,
// 1 for R, 0 for the zero ideal). Operators are (e, f) pairs acting as
// T_e(f * -); everything runs on polynomial gcd arithmetic only.
std::vector<Poly> bruteforce_closed_ideals(
    const std::vector<std::pair<std::uint32_t, Poly>>& ops, std::uint32_t p,
    std::int64_t gauge_cap);

}  // namespace cartier

#endif
