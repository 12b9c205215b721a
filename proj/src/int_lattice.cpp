#include "bsroots/int_lattice.hpp"

#include <stdexcept>
#include <utility>

namespace bsroots {

namespace {

// Floor division for integers (den > 0).
Integer floor_div(const Integer& num, const Integer& den) {
  Integer q = num / den;
  if (num.sign() < 0 && q * den != num) q -= 1;
  return q;
}

Integer abs_int(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }

}  // namespace

IntLattice::IntLattice(std::size_t dim, const std::vector<IntVector>& generators)
    : dim_(dim) {
  std::vector<IntVector> rows;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("lattice generator has wrong length");
    if (!is_zero(g)) rows.push_back(g);
  }

  std::size_t top = 0;
  for (std::size_t c = 0; c < dim_ && top < rows.size(); ++c) {
    // Euclid on column c among rows[top..]: repeatedly reduce by the row with
    // the smallest nonzero entry until a single nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][c].is_zero()) continue;
        if (best == rows.size() || abs_int(rows[r][c]) < abs_int(rows[best][c])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool others = false;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][c].is_zero()) continue;
        Integer q = rows[r][c] / rows[top][c];
        rows[r] = rows[r] - q * rows[top];
        if (!rows[r][c].is_zero()) others = true;
      }
      if (!others) break;
    }
    if (top < rows.size() && !rows[top][c].is_zero()) {
      if (rows[top][c].sign() < 0) rows[top] = Integer(-1) * rows[top];
      pivot_cols_.push_back(c);
      ++top;
    }
  }
  rows.resize(top);
  // Reduce entries above each pivot.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t c = pivot_cols_[i];
    for (std::size_t r = 0; r < i; ++r) {
      Integer q = floor_div(rows[r][c], rows[i][c]);
      if (!q.is_zero()) rows[r] = rows[r] - q * rows[i];
    }
  }
  basis_ = std::move(rows);
}

IntVector IntLattice::reduce(IntVector v) const {
  if (v.size() != dim_) throw std::invalid_argument("vector has wrong length");
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t c = pivot_cols_[i];
    Integer q = floor_div(v[c], basis_[i][c]);
    if (!q.is_zero()) v = v - q * basis_[i];
  }
  return v;
}

bool IntLattice::contains(const IntVector& v) const { return is_zero(reduce(v)); }

IntVector operator+(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector operator-(const IntVector& a, const IntVector& b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector operator*(const Integer& k, const IntVector& a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k * a[i];
  return out;
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace bsroots
