#pragma once

#include "bsroots/rational.hpp"

#include <vector>

namespace bsroots {

using IntVector = std::vector<Integer>;

/// Subgroup of Z^n given by generators, kept as a Hermite normal form basis
/// (row echelon, positive pivots, entries above each pivot reduced into
/// [0, pivot)).
class IntLattice {
 public:
  explicit IntLattice(std::size_t dim) : dim_(dim) {}
  IntLattice(std::size_t dim, const std::vector<IntVector>& generators);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  /// Canonical representative of v + lattice: coordinate at each pivot column
  /// is brought into [0, pivot).
  IntVector reduce(IntVector v) const;
  bool contains(const IntVector& v) const;

 private:
  std::size_t dim_;
  std::vector<IntVector> basis_;
  std::vector<std::size_t> pivot_cols_;
};

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& k, const IntVector& a);
bool is_zero(const IntVector& v);

}  // namespace bsroots
