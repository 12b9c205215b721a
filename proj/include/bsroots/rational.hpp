#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bsroots {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational number, always stored in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(implicit)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(implicit)
  /// Throws DivisionByZero when `den` is zero.
  Rational(const Integer& num, const Integer& den);

  Integer num() const { return boost::multiprecision::numerator(value_); }
  Integer den() const { return boost::multiprecision::denominator(value_); }

  bool is_zero() const { return value_.is_zero(); }
  bool is_integer() const { return den() == 1; }
  int sign() const { return value_.sign(); }

  /// Largest integer <= *this.
  Integer floor() const;
  Integer ceil() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  /// Throws DivisionByZero when `o` is zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  /// "p/q", with "/q" omitted when q == 1 and the sign on the numerator.
  std::string str() const;

  /// Accepts "p", "p/q", "-p/q" (whitespace-free). Throws InvalidInput on
  /// malformed text and DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

 private:
  using Storage = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                                boost::multiprecision::et_off>;
  explicit Rational(Storage v) : value_(std::move(v)) {}
  Storage value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

/// Exact binomial coefficient; zero when r > m.
Integer binomial(unsigned m, unsigned r);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace bsroots

template <>
struct std::hash<bsroots::Rational> {
  std::size_t operator()(const bsroots::Rational& r) const noexcept;
};
