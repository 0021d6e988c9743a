#ifndef CARTIER_POLY_HPP
#define CARTIER_POLY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cartier/error.hpp"

namespace cartier {

// Exponent vector. Length is fixed by the ambient variable list; exponents
// are 32-bit with checked arithmetic (Frobenius powers scale them by p^e).
struct Monomial {
  std::vector<std::int32_t> exp;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exp(nvars, 0) {}
  explicit Monomial(std::vector<std::int32_t> e) : exp(std::move(e)) {}

  std::size_t nvars() const { return exp.size(); }
  std::int64_t total_degree() const;
  std::int32_t max_norm() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Componentwise difference; caller guarantees divisibility.
  Monomial operator/(const Monomial& other) const;
  Monomial pow_scaled(std::int64_t factor) const;  // exponents * factor, checked

  bool operator==(const Monomial& other) const { return exp == other.exp; }
  bool operator!=(const Monomial& other) const { return exp != other.exp; }
};

// Graded reverse lexicographic order; the canonical term order everywhere.
// Returns true when a < b.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_less(a, b);
  }
};

// Gauge value: max-norm filtration degree, with -infinity reserved for 0.
class GaugeValue {
 public:
  static GaugeValue neg_infinity() { return GaugeValue(); }
  static GaugeValue of(std::int64_t d) { return GaugeValue(d); }

  bool is_neg_infinity() const { return !value_.has_value(); }
  std::int64_t value() const;  // error if -infinity

  bool operator==(const GaugeValue& o) const { return value_ == o.value_; }
  bool operator!=(const GaugeValue& o) const { return value_ != o.value_; }
  bool operator<=(const GaugeValue& o) const;
  bool operator<(const GaugeValue& o) const { return *this <= o && *this != o; }

  std::string str() const;

 private:
  GaugeValue() = default;
  explicit GaugeValue(std::int64_t d) : value_(d) {}
  std::optional<std::int64_t> value_;
};

// Sparse polynomial over the prime field F_p. Terms are kept sorted in
// descending grevlex order with coefficients in {1..p-1}; the zero
// polynomial has no terms. Values are immutable once built.
class Poly {
 public:
  using Term = std::pair<Monomial, std::uint32_t>;

  Poly() : p_(2), nvars_(0) {}
  Poly(std::uint32_t p, std::size_t nvars) : p_(p), nvars_(nvars) {}
  // Terms in any order, coefficients arbitrary; normalized on construction.
  Poly(std::uint32_t p, std::size_t nvars, std::vector<Term> terms);

  static Poly zero(std::uint32_t p, std::size_t nvars) { return Poly(p, nvars); }
  static Poly constant(std::uint32_t p, std::size_t nvars, std::uint64_t c);
  static Poly monomial(std::uint32_t p, Monomial m, std::uint32_t c = 1);

  std::uint32_t p() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }

  // Leading term w.r.t. grevlex (terms are sorted, so this is terms()[0]).
  const Term& lead() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Monomial& m, std::uint32_t c) const;
  Poly scale(std::uint32_t c) const;
  // Monic: leading coefficient scaled to 1.
  Poly monic() const;
  Poly pow(std::uint64_t n) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }
  // Total order for deterministic containers (grevlex on term lists).
  bool less(const Poly& o) const;

  std::string str(const std::vector<std::string>& vars) const;

 private:
  std::uint32_t p_;
  std::size_t nvars_;
  std::vector<Term> terms_;
  void normalize();
};

struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return a.less(b); }
};

// --- Field arithmetic mod p ---
std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p);

// --- Core operations ---

// Max-norm gauge of f; -infinity iff f == 0.
GaugeValue gauge(const Poly& f);

// f^(p^e): monomial exponents scale by p^e, coefficients fixed (F_p).
Poly frobenius_power(const Poly& f, std::uint32_t e);

// Unique decomposition f = sum_j r_j^{p^e} x^j over monomials j with all
// exponents < p^e. Every r_j satisfies gauge(r_j) <= floor(gauge(f)/p^e).
std::map<Monomial, Poly, GrevlexLess> frob_decompose(const Poly& f,
                                                     std::uint32_t e);

// p^e as a checked 64-bit value.
std::int64_t prime_power(std::uint32_t p, std::uint32_t e);

// --- Parsing ---
// Grammar: poly := term (('+'|'-') term)*; term := coeff | coeff '*' factors
// | factors; factors := factor ('*' factor)*; factor := var ('^' nat)?.
// Whitespace ignored. Errors carry the offending position.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                std::uint32_t p);

}  // namespace cartier

#endif
