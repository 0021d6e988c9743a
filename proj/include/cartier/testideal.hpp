#ifndef CARTIER_TESTIDEAL_HPP
#define CARTIER_TESTIDEAL_HPP

#include "cartier/fpure.hpp"

namespace cartier {

struct TestElementChecks {
  bool in_r_circ = false;        // c avoids every minimal prime
  bool t_independent = false;    // closure(c M) == closure(c^2 M)
  bool closure_fpure = false;    // the closure is a fixed point of C_+
  bool generic_agreement = false;  // (closure : M) not inside any min prime
  bool all() const {
    return in_r_circ && t_independent && closure_fpure && generic_agreement;
  }
};

struct TestElement {
  Poly c;
  TestElementChecks checks;
  std::string origin;  // "user", "jacobian", "kernel", "twist", "one"
};

struct TauResult {
  Ideal tau;
  Ideal underline_m;
  TestElement test_element;              // the combined element actually used
  std::vector<TestElement> verified;     // all candidates that passed
  std::uint32_t e_cap_used = 0;
  bool fpure_certified = false;          // cplus(tau) == tau
  bool regeneration_ok = false;          // closure(c_i tau) == tau for all i
};

// Smallest C-stable ideal containing G (the C-submodule generated by G).
Ideal closure(const CartierAlgebra& C, const Ideal& G,
              const EvalOptions& opts = {});

// Minimal primes of V(ann): user-supplied list, else {0} when ann = 0 in a
// declared (or quotient-free) domain, else the monomial path.
std::vector<Ideal> resolve_minimal_primes(
    const Ideal& ann, const std::optional<std::vector<Ideal>>& user,
    bool domain_flag);

TestElementChecks verify_test_element(const CartierAlgebra& C,
                                      const Ideal& underline_m, const Poly& c,
                                      const std::vector<Ideal>& minimal_primes,
                                      const EvalOptions& opts = {});

// Test module of (M, C): the closure of c*underline(M) over the product c of
// all verified test-element candidates.
TauResult tau(const CartierAlgebra& C, const Ideal& M,
              const std::optional<Poly>& user_c,
              const std::optional<std::vector<Ideal>>& user_minimal_primes,
              bool domain_flag, const EvalOptions& opts = {});

// Non-reduced pipeline: tau(R, C) = tau(underline(R), C_red) over
// R_red = S/sqrt(I), computed with ideals of R throughout.
TauResult tau_nonreduced(const CartierAlgebra& C,
                         const std::optional<std::vector<Poly>>& user_radical,
                         const std::optional<Poly>& user_c,
                         const std::optional<std::vector<Ideal>>& user_minimal_primes,
                         const EvalOptions& opts = {});

bool is_fregular(const CartierAlgebra& C, const Ideal& M,
                 const std::optional<Poly>& user_c,
                 const std::optional<std::vector<Ideal>>& user_minimal_primes,
                 bool domain_flag, const EvalOptions& opts = {});

struct SkodaReport {
  bool containment = false;  // a * tau(a^{t-1})  <=  tau(a^t)
  bool equality = false;
  bool equality_expected = false;  // t >= number of generators of a
  Ideal lhs;
  Ideal rhs;
};

SkodaReport skoda_check(const CartierAlgebra& C, const Ideal& a,
                        const Rational& t, const std::optional<Poly>& user_c,
                        const std::optional<std::vector<Ideal>>& user_minimal_primes,
                        bool domain_flag, const EvalOptions& opts = {});

}  // namespace cartier

#endif
