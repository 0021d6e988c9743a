#include "cartier/ring.hpp"

#include "cartier/groebner.hpp"

namespace cartier {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

RingCtx RingCtx::polynomial_ring(std::uint32_t p, std::vector<std::string> vars) {
  if (!is_prime(p)) fail(ErrorKind::Config, std::to_string(p) + " is not prime");
  if (vars.empty()) fail(ErrorKind::Config, "ring needs at least one variable");
  auto d = std::make_shared<Data>();
  d->p = p;
  d->vars = std::move(vars);
  return RingCtx(std::move(d));
}

RingCtx RingCtx::quotient_ring(std::uint32_t p, std::vector<std::string> vars,
                               std::vector<Poly> quotient_gens) {
  RingCtx base = polynomial_ring(p, std::move(vars));
  auto d = std::make_shared<Data>(*base.d_);
  d->quotient_gens = quotient_gens;
  d->quotient_gb = buchberger(quotient_gens);
  if (d->quotient_gb.size() == 1 && d->quotient_gb[0].is_one())
    fail(ErrorKind::Config, "quotient ideal is the unit ideal");
  return RingCtx(std::move(d));
}

Poly RingCtx::var(std::size_t i) const {
  Monomial m(nvars());
  m.exp[i] = 1;
  return Poly::monomial(p(), std::move(m));
}

Poly RingCtx::reduce(const Poly& f) const {
  if (!has_quotient()) return f;
  return normal_form(f, d_->quotient_gb, MonomialOrder{});
}

bool RingCtx::same_as(const RingCtx& other) const {
  if (d_ == other.d_) return true;
  return d_->p == other.d_->p && d_->vars == other.d_->vars &&
         d_->quotient_gb == other.d_->quotient_gb;
}

}  // namespace cartier
