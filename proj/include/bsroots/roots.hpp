#pragma once

#include "bsroots/rational.hpp"

#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace bsroots {

/// Finite set of strictly positive rationals (roots of b(-s), no
/// multiplicities).
class RootSet {
 public:
  using const_iterator = std::set<Rational>::const_iterator;

  RootSet() = default;
  RootSet(std::initializer_list<Rational> roots);

  /// Throws InvalidInput for a root <= 0.
  void insert(const Rational& root);
  void merge(const RootSet& other);

  bool contains(const Rational& r) const { return roots_.count(r) != 0; }
  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }
  /// Smallest root; throws PreconditionError on an empty set.
  const Rational& min() const;
  const Rational& max() const;

  /// Roots r with r <= bound.
  RootSet at_most(const Rational& bound) const;
  bool is_subset_of(const RootSet& other) const;

  const_iterator begin() const { return roots_.begin(); }
  const_iterator end() const { return roots_.end(); }

  friend bool operator==(const RootSet&, const RootSet&) = default;

 private:
  std::set<Rational> roots_;
};

/// Roots of b(-s) with multiplicities, keyed in ascending order.
class RootMultiset {
 public:
  using const_iterator = std::map<Rational, unsigned>::const_iterator;

  RootMultiset() = default;
  RootMultiset(std::initializer_list<std::pair<Rational, unsigned>> entries);

  /// Adds `mult` to the multiplicity of `root`. Throws InvalidInput for a
  /// root <= 0 or mult == 0.
  void add(const Rational& root, unsigned mult = 1);

  unsigned multiplicity(const Rational& root) const;
  std::size_t distinct() const { return entries_.size(); }
  /// Sum of multiplicities, i.e. the degree of b.
  unsigned degree() const;
  bool empty() const { return entries_.empty(); }
  const Rational& min() const;
  const Rational& max() const;
  RootSet support() const;

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  friend bool operator==(const RootMultiset&, const RootMultiset&) = default;

 private:
  std::map<Rational, unsigned> entries_;
};

}  // namespace bsroots
