#include "bsroots/rational.hpp"

#include "bsroots/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <ostream>

namespace bsroots {

Rational::Rational(const Integer& num, const Integer& den) {
  if (den.is_zero()) throw DivisionByZero();
  value_ = den.sign() < 0 ? Storage(Integer(-num), Integer(-den)) : Storage(num, den);
}

Integer Rational::floor() const {
  Integer n = num();
  Integer d = den();
  Integer q = n / d;  // truncates toward zero
  if (n.sign() < 0 && q * d != n) q -= 1;
  return q;
}

Integer Rational::ceil() const { return -(-*this).floor(); }

Rational Rational::operator-() const { return Rational(Storage(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int c = a.value_.compare(b.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Rational::str() const {
  std::string s = num().str();
  if (den() != 1) s += "/" + den().str();
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_txt = body.substr(0, slash);
  std::string_view den_txt =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_txt) || !all_digits(den_txt))
    throw InvalidInput("malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num_txt)};
  Integer d{std::string(den_txt)};
  if (negative) n = -n;
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Integer binomial(unsigned m, unsigned r) {
  if (r > m) return 0;
  if (r > m - r) r = m - r;
  Integer result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result *= m - r + i;
    result /= i;
  }
  return result;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  Integer g = boost::multiprecision::gcd(a, b);
  Integer l = a / g * b;
  return l.sign() < 0 ? Integer(-l) : l;
}

}  // namespace bsroots

std::size_t std::hash<bsroots::Rational>::operator()(
    const bsroots::Rational& r) const noexcept {
  std::size_t h1 = std::hash<std::string>{}(r.num().str());
  std::size_t h2 = std::hash<std::string>{}(r.den().str());
  return h1 ^ (h2 * 0x9e3779b97f4a7c15ULL);
}
