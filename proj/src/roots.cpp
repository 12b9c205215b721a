#include "bsroots/roots.hpp"

#include "bsroots/errors.hpp"

#include <algorithm>

namespace bsroots {

RootSet::RootSet(std::initializer_list<Rational> roots) {
  for (const auto& r : roots) insert(r);
}

void RootSet::insert(const Rational& root) {
  if (root.sign() <= 0) throw InvalidInput("root " + root.str() + " is not positive");
  roots_.insert(root);
}

void RootSet::merge(const RootSet& other) { roots_.insert(other.begin(), other.end()); }

const Rational& RootSet::min() const {
  if (roots_.empty()) throw PreconditionError("empty root set has no minimum");
  return *roots_.begin();
}

const Rational& RootSet::max() const {
  if (roots_.empty()) throw PreconditionError("empty root set has no maximum");
  return *roots_.rbegin();
}

RootSet RootSet::at_most(const Rational& bound) const {
  RootSet out;
  for (const auto& r : roots_)
    if (r <= bound) out.roots_.insert(r);
  return out;
}

bool RootSet::is_subset_of(const RootSet& other) const {
  return std::includes(other.roots_.begin(), other.roots_.end(), roots_.begin(),
                       roots_.end());
}

RootMultiset::RootMultiset(std::initializer_list<std::pair<Rational, unsigned>> entries) {
  for (const auto& [r, m] : entries) add(r, m);
}

void RootMultiset::add(const Rational& root, unsigned mult) {
  if (root.sign() <= 0) throw InvalidInput("root " + root.str() + " is not positive");
  if (mult == 0) throw InvalidInput("multiplicity must be at least 1");
  entries_[root] += mult;
}

unsigned RootMultiset::multiplicity(const Rational& root) const {
  auto it = entries_.find(root);
  return it == entries_.end() ? 0U : it->second;
}

unsigned RootMultiset::degree() const {
  unsigned total = 0;
  for (const auto& [r, m] : entries_) total += m;
  return total;
}

const Rational& RootMultiset::min() const {
  if (entries_.empty()) throw PreconditionError("empty root multiset has no minimum");
  return entries_.begin()->first;
}

const Rational& RootMultiset::max() const {
  if (entries_.empty()) throw PreconditionError("empty root multiset has no maximum");
  return entries_.rbegin()->first;
}

RootSet RootMultiset::support() const {
  RootSet s;
  for (const auto& [r, m] : entries_) s.insert(r);
  return s;
}

}  // namespace bsroots
