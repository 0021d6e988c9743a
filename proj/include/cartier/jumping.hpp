#ifndef CARTIER_JUMPING_HPP
#define CARTIER_JUMPING_HPP

#include <map>
#include <mutex>

#include "cartier/testideal.hpp"

namespace cartier {

// Memo table for tau(M, C, a^t) keyed by exact rational t. Thread-safe;
// all writers for the same t write equal ideals.
class TauCache {
 public:
  std::optional<Ideal> find(const Rational& t) const;
  void store(const Rational& t, const Ideal& value);

 private:
  mutable std::mutex mu_;
  std::map<std::pair<std::int64_t, std::int64_t>, Ideal> table_;
};

struct JumpOptions {
  EvalOptions eval;
  std::optional<Poly> user_c;
  std::optional<std::vector<Ideal>> user_minimal_primes;
  bool domain_flag = false;
};

// tau of the a^t-twisted algebra; t = 0 is the untwisted test module.
Ideal tau_t(const CartierAlgebra& C, const Ideal& M, const Ideal& a,
            const Rational& t, const JumpOptions& opts, TauCache* cache = nullptr);

struct JumpReport {
  std::vector<Rational> jumps;      // grid points where tau first changes
  std::vector<Ideal> ideals;        // one per constancy interval [.,.)
  std::vector<bool> unresolved;     // per jump: interval shorter than 2 cells
  Rational resolution;              // grid step 1/(p^E - 1)
  Rational T;
  bool monotonicity_ok = true;
};

// Monotone bisection of [0, T] on the 1/(p^E - 1) grid. Jumps are reported
// as the first grid point carrying the new ideal (resolution-limited; the
// true jump lies in the preceding half-open cell).
JumpReport jumps_in_range(const CartierAlgebra& C, const Ideal& M,
                          const Ideal& a, const Rational& T, std::uint32_t E,
                          const JumpOptions& opts);

struct FptResult {
  bool found = false;      // false: no jump up to T (fpt > T)
  Rational value;          // first grid point with tau != tau(0)
  Rational resolution;
  Rational T;
};

// F-pure threshold, resolution-limited; requires the untwisted pair F-pure.
FptResult fpt(const CartierAlgebra& C, const Ideal& a, const Rational& T,
              std::uint32_t E, const JumpOptions& opts);

}  // namespace cartier

#endif
