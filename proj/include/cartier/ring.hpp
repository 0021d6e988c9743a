#ifndef CARTIER_RING_HPP
#define CARTIER_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cartier/poly.hpp"

namespace cartier {

// Ambient ring: S = F_p[x_1..x_n], or the quotient R = S/I. Immutable and
// cheaply shareable; the reduced Groebner basis of I is computed once at
// construction. Ideals of R are represented by their full preimages in S.
class RingCtx {
 public:
  static RingCtx polynomial_ring(std::uint32_t p, std::vector<std::string> vars);
  static RingCtx quotient_ring(std::uint32_t p, std::vector<std::string> vars,
                               std::vector<Poly> quotient_gens);

  std::uint32_t p() const { return d_->p; }
  const std::vector<std::string>& vars() const { return d_->vars; }
  std::size_t nvars() const { return d_->vars.size(); }
  bool has_quotient() const { return !d_->quotient_gb.empty(); }
  const std::vector<Poly>& quotient_gens() const { return d_->quotient_gens; }
  const std::vector<Poly>& quotient_gb() const { return d_->quotient_gb; }

  Poly parse(const std::string& text) const {
    return parse_poly(text, d_->vars, d_->p);
  }
  Poly zero() const { return Poly::zero(d_->p, nvars()); }
  Poly one() const { return Poly::constant(d_->p, nvars(), 1); }
  Poly var(std::size_t i) const;

  // Normal form modulo the quotient ideal (identity for S itself).
  Poly reduce(const Poly& f) const;

  bool same_as(const RingCtx& other) const;

 private:
  struct Data {
    std::uint32_t p;
    std::vector<std::string> vars;
    std::vector<Poly> quotient_gens;
    std::vector<Poly> quotient_gb;
  };
  explicit RingCtx(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

bool is_prime(std::uint32_t p);

}  // namespace cartier

#endif
