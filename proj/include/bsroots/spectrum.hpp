#pragma once

#include "bsroots/frac_poly.hpp"
#include "bsroots/roots.hpp"

#include <string>
#include <vector>

namespace bsroots {

/// Weights (w_1, ..., w_n) of a weighted-homogeneous polynomial, each in
/// (0, 1). Throws InvalidInput otherwise.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);

  std::size_t size() const { return weights_.size(); }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  Rational sum() const;

  /// Comma-separated "p/q" list, e.g. "1/5,1/4".
  static WeightVector parse(const std::string& text);

 private:
  std::vector<Rational> weights_;
};

/// prod_i (t - t^w_i) / (t^w_i - 1), computed as one exact division.
/// Throws InvalidInput("invalid weights") when the quotient is not a
/// polynomial in fractional powers of t, which happens for weights that
/// belong to no isolated singularity (e.g. a single weight 2/5).
FractionalPolynomial spectrum_wh(const WeightVector& w);

/// Exponents with nonzero coefficient.
RootSet exponents(const FractionalPolynomial& sp);

/// Microlocal roots of an isolated weighted-homogeneous singularity: the
/// exponents, each with multiplicity one.
RootMultiset wh_root_multiset(const WeightVector& w);

struct WindowViolation {
  Rational root;
  unsigned multiplicity = 0;
  std::string reason;
};

struct WindowCheck {
  bool ok = true;
  std::vector<WindowViolation> violations;
};

/// Checks R within [a, n - a] and m_r <= n - a - r + 1, with a the minimal
/// root. Throws PreconditionError if `alpha_tilde` is not min R.
WindowCheck window_check(const RootMultiset& roots, const Rational& alpha_tilde, unsigned n);

}  // namespace bsroots
