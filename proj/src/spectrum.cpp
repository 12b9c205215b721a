#include "bsroots/spectrum.hpp"

#include "bsroots/errors.hpp"

#include <sstream>

namespace bsroots {

WeightVector::WeightVector(std::vector<Rational> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw InvalidInput("empty weight vector");
  for (const auto& w : weights_)
    if (w <= 0 || w >= 1) throw InvalidInput("weight " + w.str() + " is not in (0, 1)");
}

Rational WeightVector::sum() const {
  Rational s = 0;
  for (const auto& w : weights_) s += w;
  return s;
}

WeightVector WeightVector::parse(const std::string& text) {
  std::vector<Rational> ws;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) ws.push_back(Rational::parse(item));
  if (!text.empty() && text.back() == ',') throw InvalidInput("trailing comma in weights");
  return WeightVector(std::move(ws));
}

FractionalPolynomial spectrum_wh(const WeightVector& w) {
  const auto one = FractionalPolynomial::monomial(0);
  const auto t = FractionalPolynomial::monomial(1);
  FractionalPolynomial num = one, den = one;
  for (const auto& wi : w.weights()) {
    const auto tw = FractionalPolynomial::monomial(wi);
    num = num * (t - tw);
    den = den * (tw - one);
  }
  try {
    return FractionalPolynomial::exact_div(num, den);
  } catch (const InexactDivision&) {
    throw InvalidInput("invalid weights");
  }
}

RootSet exponents(const FractionalPolynomial& sp) {
  RootSet out;
  for (const auto& [e, c] : sp.terms()) out.insert(e);
  return out;
}

RootMultiset wh_root_multiset(const WeightVector& w) {
  RootMultiset out;
  for (const auto& r : exponents(spectrum_wh(w))) out.add(r);
  return out;
}

WindowCheck window_check(const RootMultiset& roots, const Rational& alpha_tilde, unsigned n) {
  if (roots.empty() || roots.min() != alpha_tilde)
    throw PreconditionError("alpha_tilde must be the minimal root");
  WindowCheck out;
  const Rational top = Rational(n) - alpha_tilde;
  for (const auto& [r, m] : roots) {
    if (r > top) out.violations.push_back({r, m, "root above n - alpha_tilde"});
    if (Rational(m) > top - r + 1)
      out.violations.push_back({r, m, "multiplicity above n - alpha_tilde - root + 1"});
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace bsroots
