#include "cartier/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "cartier/rational.hpp"

namespace cartier {

std::int64_t Monomial::total_degree() const {
  std::int64_t d = 0;
  for (auto e : exp) d += e;
  return d;
}

std::int32_t Monomial::max_norm() const {
  std::int32_t m = 0;
  for (auto e : exp) m = std::max(m, e);
  return m;
}

bool Monomial::is_one() const {
  for (auto e : exp)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > other.exp[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) {
    std::int64_t s = std::int64_t(exp[i]) + other.exp[i];
    if (s > std::numeric_limits<std::int32_t>::max())
      fail(ErrorKind::Overflow, "monomial exponent overflow");
    r.exp[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = exp[i] - other.exp[i];
  return r;
}

Monomial Monomial::pow_scaled(std::int64_t factor) const {
  Monomial r(exp.size());
  for (std::size_t i = 0; i < exp.size(); ++i) {
    std::int64_t s = checked_mul(exp[i], factor);
    if (s > std::numeric_limits<std::int32_t>::max())
      fail(ErrorKind::Overflow, "monomial exponent overflow");
    r.exp[i] = static_cast<std::int32_t>(s);
  }
  return r;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  std::int64_t da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  // Same degree: a < b iff the rightmost nonzero entry of a-b is positive.
  for (std::size_t i = a.exp.size(); i-- > 0;) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i];
  }
  return false;
}

std::int64_t GaugeValue::value() const {
  if (!value_) fail(ErrorKind::Internal, "gauge value of zero element");
  return *value_;
}

bool GaugeValue::operator<=(const GaugeValue& o) const {
  if (!value_) return true;
  if (!o.value_) return false;
  return *value_ <= *o.value_;
}

std::string GaugeValue::str() const {
  return value_ ? std::to_string(*value_) : "-inf";
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint64_t s = std::uint64_t(a) + b;
  return static_cast<std::uint32_t>(s >= p ? s - p : s);
}

std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t(a) * b) % p);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  // Fermat: a^(p-2) mod p.
  if (a == 0) fail(ErrorKind::Internal, "inverse of zero mod p");
  std::uint32_t r = 1, base = a % p;
  std::uint32_t n = p - 2;
  while (n) {
    if (n & 1) r = mod_mul(r, base, p);
    base = mod_mul(base, base, p);
    n >>= 1;
  }
  return r;
}

Poly::Poly(std::uint32_t p, std::size_t nvars, std::vector<Term> terms)
    : p_(p), nvars_(nvars), terms_(std::move(terms)) {
  normalize();
}

void Poly::normalize() {
  for (auto& t : terms_) {
    if (t.first.nvars() != nvars_)
      fail(ErrorKind::Internal, "monomial width mismatch");
    t.second %= p_;
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) {
              return grevlex_less(b.first, a.first);  // descending
            });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = mod_add(out.back().second, t.second, p_);
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

Poly Poly::constant(std::uint32_t p, std::size_t nvars, std::uint64_t c) {
  Poly r(p, nvars);
  std::uint32_t cc = static_cast<std::uint32_t>(c % p);
  if (cc) r.terms_.push_back({Monomial(nvars), cc});
  return r;
}

Poly Poly::monomial(std::uint32_t p, Monomial m, std::uint32_t c) {
  Poly r(p, m.nvars());
  c %= p;
  if (c) r.terms_.push_back({std::move(m), c});
  return r;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_one() && terms_[0].second == 1;
}

const Poly::Term& Poly::lead() const {
  if (terms_.empty()) fail(ErrorKind::Internal, "leading term of zero");
  return terms_[0];
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(p_, nvars_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      std::uint32_t c = mod_add(terms_[i].second, o.terms_[j].second, p_);
      if (c) r.terms_.push_back({terms_[i].first, c});
      ++i, ++j;
    } else if (grevlex_less(o.terms_[j].first, terms_[i].first)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = p_ - t.second;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::mul_term(const Monomial& m, std::uint32_t c) const {
  c %= p_;
  if (c == 0) return Poly(p_, nvars_);
  Poly r(p_, nvars_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_)
    r.terms_.push_back({t.first * m, mod_mul(t.second, c, p_)});
  // Multiplying by a fixed monomial preserves grevlex order.
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(p_, nvars_);
  std::map<Monomial, std::uint32_t, GrevlexLess> acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Monomial m = a.first * b.first;
      std::uint32_t c = mod_mul(a.second, b.second, p_);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), c);
      else
        it->second = mod_add(it->second, c, p_);
    }
  Poly r(p_, nvars_);
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (it->second) r.terms_.push_back({it->first, it->second});
  return r;
}

Poly Poly::scale(std::uint32_t c) const {
  c %= p_;
  if (c == 0) return Poly(p_, nvars_);
  Poly r = *this;
  for (auto& t : r.terms_) t.second = mod_mul(t.second, c, p_);
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scale(mod_inv(lead().second, p_));
}

Poly Poly::pow(std::uint64_t n) const {
  Poly result = Poly::constant(p_, nvars_, 1);
  Poly base = *this;
  while (n) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  return p_ == o.p_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

bool Poly::less(const Poly& o) const {
  std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].first != o.terms_[i].first)
      return grevlex_less(terms_[i].first, o.terms_[i].first);
    if (terms_[i].second != o.terms_[i].second)
      return terms_[i].second < o.terms_[i].second;
  }
  return terms_.size() < o.terms_.size();
}

std::string Poly::str(const std::vector<std::string>& vars) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) out += " + ";
    const auto& [m, c] = terms_[k];
    bool printed = false;
    if (c != 1 || m.is_one()) {
      out += std::to_string(c);
      printed = true;
    }
    for (std::size_t i = 0; i < m.exp.size(); ++i) {
      if (m.exp[i] == 0) continue;
      if (printed) out += "*";
      out += vars[i];
      if (m.exp[i] > 1) out += "^" + std::to_string(m.exp[i]);
      printed = true;
    }
  }
  return out;
}

GaugeValue gauge(const Poly& f) {
  if (f.is_zero()) return GaugeValue::neg_infinity();
  std::int32_t m = 0;
  for (const auto& t : f.terms()) m = std::max(m, t.first.max_norm());
  return GaugeValue::of(m);
}

std::int64_t prime_power(std::uint32_t p, std::uint32_t e) {
  std::int64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) q = checked_mul(q, p);
  return q;
}

Poly frobenius_power(const Poly& f, std::uint32_t e) {
  if (e == 0) return f;
  std::int64_t q = prime_power(f.p(), e);
  std::vector<Poly::Term> terms;
  terms.reserve(f.terms().size());
  // Freshman's dream over F_p: coefficients are Frobenius-fixed.
  for (const auto& t : f.terms()) terms.push_back({t.first.pow_scaled(q), t.second});
  return Poly(f.p(), f.nvars(), std::move(terms));
}

std::map<Monomial, Poly, GrevlexLess> frob_decompose(const Poly& f,
                                                     std::uint32_t e) {
  if (e == 0) fail(ErrorKind::Internal, "frob_decompose needs e >= 1");
  std::int64_t q = prime_power(f.p(), e);
  std::map<Monomial, std::vector<Poly::Term>, GrevlexLess> buckets;
  for (const auto& t : f.terms()) {
    Monomial j(f.nvars()), r(f.nvars());
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      j.exp[i] = static_cast<std::int32_t>(t.first.exp[i] % q);
      r.exp[i] = static_cast<std::int32_t>(t.first.exp[i] / q);
    }
    buckets[j].push_back({std::move(r), t.second});
  }
  std::map<Monomial, Poly, GrevlexLess> out;
  for (auto& [j, terms] : buckets)
    out.emplace(j, Poly(f.p(), f.nvars(), std::move(terms)));
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& vars,
             std::uint32_t p)
      : text_(text), vars_(vars), p_(p) {}

  Poly parse() {
    Poly result(p_, vars_.size());
    skip_ws();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    result = result + term(negate);
    skip_ws();
    while (pos_ < text_.size()) {
      char c = peek();
      if (c != '+' && c != '-') error("expected '+' or '-'");
      ++pos_;
      result = result + term(c == '-');
      skip_ws();
    }
    return result;
  }

 private:
  [[noreturn]] void error(const std::string& msg) {
    fail(ErrorKind::Parse, "parse error at position " + std::to_string(pos_) +
                               ": " + msg + " in \"" + text_ + "\"");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Poly term(bool negate) {
    skip_ws();
    std::uint32_t coeff = 1;
    Monomial mono(vars_.size());
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = static_cast<std::uint32_t>(number() % p_);
      saw_factor = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        factors(mono);
      }
    } else {
      factors(mono);
      saw_factor = true;
    }
    if (!saw_factor) error("expected term");
    if (negate) coeff = (p_ - coeff % p_) % p_;
    return Poly::monomial(p_, std::move(mono), coeff);
  }

  void factors(Monomial& mono) {
    factor(mono);
    skip_ws();
    while (peek() == '*') {
      ++pos_;
      factor(mono);
      skip_ws();
    }
  }

  void factor(Monomial& mono) {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek())) && peek() != '_')
      error("expected variable");
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    std::size_t var = vars_.size();
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) {
        var = i;
        break;
      }
    if (var == vars_.size()) {
      pos_ = start;
      error("undeclared variable '" + name + "'");
    }
    std::uint64_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        error("expected exponent");
      e = number();
    }
    std::int64_t s = checked_add(mono.exp[var], static_cast<std::int64_t>(e));
    if (e > std::uint64_t(std::numeric_limits<std::int32_t>::max()) ||
        s > std::numeric_limits<std::int32_t>::max())
      fail(ErrorKind::Overflow, "exponent overflow at position " +
                                    std::to_string(pos_));
    mono.exp[var] = static_cast<std::int32_t>(s);
  }

  std::uint64_t number() {
    std::uint64_t n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t d = std::uint64_t(text_[pos_] - '0');
      if (n > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        fail(ErrorKind::Overflow, "number overflow at position " +
                                      std::to_string(pos_));
      n = n * 10 + d;
      ++pos_;
    }
    return n;
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                std::uint32_t p) {
  return PolyParser(text, vars, p).parse();
}

}  // namespace cartier
