#ifndef CARTIER_RATIONAL_HPP
#define CARTIER_RATIONAL_HPP

#include <cstdint>
#include <string>

#include "cartier/error.hpp"

namespace cartier {

// Exact rational on checked 64-bit integers. Twist exponents and jumping
// numbers must never pass through floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t num, std::int64_t den);

  static Rational parse(const std::string& text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  std::int64_t floor() const;
  std::int64_t ceil() const;

  // Canonical text: "num/den", or just "num" when den == 1.
  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;  // > 0, gcd(|num|, den) == 1
};

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace cartier

#endif
