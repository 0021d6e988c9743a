#include "cartier/rational.hpp"

#include <numeric>

namespace cartier {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(ErrorKind::Overflow, "integer overflow in addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(ErrorKind::Overflow, "integer overflow in multiplication");
  return r;
}

Rational::Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
  if (den_ == 0) fail(ErrorKind::Parse, "rational with zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t pos = 0;
      std::int64_t n = std::stoll(text, &pos);
      if (pos != text.size()) fail(ErrorKind::Parse, "bad rational: " + text);
      return Rational(n);
    }
    std::size_t pos = 0;
    std::int64_t n = std::stoll(text.substr(0, slash), &pos);
    if (pos != slash) fail(ErrorKind::Parse, "bad rational: " + text);
    std::int64_t d = std::stoll(text.substr(slash + 1), &pos);
    if (pos != text.size() - slash - 1)
      fail(ErrorKind::Parse, "bad rational: " + text);
    return Rational(n, d);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "bad rational: " + text);
  } catch (const std::out_of_range&) {
    fail(ErrorKind::Overflow, "rational out of range: " + text);
  }
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
}

Rational Rational::operator-(const Rational& o) const {
  return *this + Rational(-o.num_, o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) fail(ErrorKind::Internal, "rational division by zero");
  return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

bool Rational::operator<(const Rational& o) const {
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

std::int64_t Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  return -((-num_ + den_ - 1) / den_);
}

std::int64_t Rational::ceil() const { return -Rational(-num_, den_).floor(); }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace cartier
