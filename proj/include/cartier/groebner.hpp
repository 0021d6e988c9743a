#ifndef CARTIER_GROEBNER_HPP
#define CARTIER_GROEBNER_HPP

#include <cstddef>
#include <vector>

#include "cartier/poly.hpp"

namespace cartier {

// Monomial order used by the Groebner engine. elim_block == 0 is the
// canonical grevlex order; elim_block == k compares the first k exponents
// (grevlex among themselves) before the rest, which eliminates those
// variables.
struct MonomialOrder {
  std::size_t elim_block = 0;
  bool less(const Monomial& a, const Monomial& b) const;
};

// Index of the leading term of f under ord (f sorted by plain grevlex).
std::size_t lead_index(const Poly& f, const MonomialOrder& ord);

// Full normal form of f modulo basis: every term of the remainder is
// reducible by no basis leading term. Unique when basis is a reduced GB.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 const MonomialOrder& ord = {});

// Buchberger with product + chain pair pruning; returns the unique reduced
// Groebner basis, monic, sorted with the largest leading term first.
std::vector<Poly> buchberger(const std::vector<Poly>& gens,
                             const MonomialOrder& ord = {});

}  // namespace cartier

#endif
