#pragma once

#include "bsroots/rational.hpp"

#include <map>

namespace bsroots {

/// Polynomial in fractional powers of t with integer coefficients:
/// sum c_a t^a over finitely many rational exponents a. Zero coefficients are
/// never stored.
class FractionalPolynomial {
 public:
  using Terms = std::map<Rational, Integer>;

  FractionalPolynomial() = default;
  explicit FractionalPolynomial(Terms terms);

  /// c * t^exponent
  static FractionalPolynomial monomial(const Rational& exponent, const Integer& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Integer coefficient(const Rational& exponent) const;
  /// Value at t = 1.
  Integer coefficient_sum() const;
  /// Exponents are reflected a -> center - a.
  FractionalPolynomial reflected(const Rational& center) const;

  FractionalPolynomial& operator+=(const FractionalPolynomial& o);
  FractionalPolynomial& operator-=(const FractionalPolynomial& o);
  friend FractionalPolynomial operator+(FractionalPolynomial a, const FractionalPolynomial& b) {
    return a += b;
  }
  friend FractionalPolynomial operator-(FractionalPolynomial a, const FractionalPolynomial& b) {
    return a -= b;
  }
  friend FractionalPolynomial operator*(const FractionalPolynomial& a,
                                        const FractionalPolynomial& b);

  /// Quotient p / q when q divides p in the ring of integer-coefficient
  /// polynomials in t^(1/D), D the lcm of all exponent denominators.
  /// Throws InexactDivision on a nonzero remainder (or a quotient with
  /// non-integer coefficients) and DivisionByZero when q is zero.
  static FractionalPolynomial exact_div(const FractionalPolynomial& p,
                                        const FractionalPolynomial& q);

  friend bool operator==(const FractionalPolynomial&, const FractionalPolynomial&) = default;

 private:
  void add_term(const Rational& exponent, const Integer& coeff);
  Terms terms_;
};

}  // namespace bsroots
