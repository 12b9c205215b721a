#include "bsroots/frac_poly.hpp"

#include "bsroots/errors.hpp"

#include <vector>

namespace bsroots {

FractionalPolynomial::FractionalPolynomial(Terms terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

FractionalPolynomial FractionalPolynomial::monomial(const Rational& exponent,
                                                    const Integer& coeff) {
  FractionalPolynomial p;
  p.add_term(exponent, coeff);
  return p;
}

void FractionalPolynomial::add_term(const Rational& exponent, const Integer& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second.is_zero()) terms_.erase(it);
}

Integer FractionalPolynomial::coefficient(const Rational& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer FractionalPolynomial::coefficient_sum() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

FractionalPolynomial FractionalPolynomial::reflected(const Rational& center) const {
  FractionalPolynomial out;
  for (const auto& [e, c] : terms_) out.add_term(center - e, c);
  return out;
}

FractionalPolynomial& FractionalPolynomial::operator+=(const FractionalPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

FractionalPolynomial& FractionalPolynomial::operator-=(const FractionalPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

FractionalPolynomial operator*(const FractionalPolynomial& a, const FractionalPolynomial& b) {
  FractionalPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

namespace {

// Dense integer-exponent image of a fractional polynomial over the common
// denominator `den`, shifted so that the lowest exponent is zero.
struct Dense {
  Integer shift;                // lowest exponent, in units of 1/den
  std::vector<Rational> coeffs;  // coeffs[i] multiplies t^((shift + i)/den)
};

Dense to_dense(const FractionalPolynomial& p, const Integer& den) {
  Dense out;
  const auto& terms = p.terms();
  auto scaled = [&](const Rational& e) { return e.num() * (den / e.den()); };
  out.shift = scaled(terms.begin()->first);
  Integer top = scaled(terms.rbegin()->first) - out.shift;
  out.coeffs.assign(static_cast<std::size_t>(top) + 1, Rational(0));
  for (const auto& [e, c] : terms)
    out.coeffs[static_cast<std::size_t>(scaled(e) - out.shift)] = Rational(c);
  return out;
}

}  // namespace

FractionalPolynomial FractionalPolynomial::exact_div(const FractionalPolynomial& p,
                                                     const FractionalPolynomial& q) {
  if (q.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return {};

  Integer den = 1;
  for (const auto* poly : {&p, &q})
    for (const auto& [e, c] : poly->terms_) den = lcm(den, e.den());

  Dense num = to_dense(p, den);
  Dense dvs = to_dense(q, den);
  // Both dense images have a nonzero constant term, so a power of t in the
  // divisor cannot absorb any remainder.
  if (num.coeffs.size() < dvs.coeffs.size()) throw InexactDivision();

  std::size_t qlen = num.coeffs.size() - dvs.coeffs.size() + 1;
  std::vector<Rational> quot(qlen, Rational(0));
  const Rational& lead = dvs.coeffs.back();
  for (std::size_t k = qlen; k-- > 0;) {
    Rational factor = num.coeffs[k + dvs.coeffs.size() - 1] / lead;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t j = 0; j < dvs.coeffs.size(); ++j) num.coeffs[k + j] -= factor * dvs.coeffs[j];
  }
  for (const auto& r : num.coeffs)
    if (!r.is_zero()) throw InexactDivision();

  FractionalPolynomial out;
  Integer base = num.shift - dvs.shift;
  for (std::size_t k = 0; k < qlen; ++k) {
    if (quot[k].is_zero()) continue;
    if (!quot[k].is_integer()) throw InexactDivision();
    out.add_term(Rational(base + Integer(k), den), quot[k].num());
  }
  return out;
}

}  // namespace bsroots
