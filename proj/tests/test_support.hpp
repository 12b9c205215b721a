#pragma once

#include "bsroots/rational.hpp"
#include "bsroots/roots.hpp"

#include <initializer_list>
#include <string>

namespace bsroots::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

inline RootSet root_set(std::initializer_list<const char*> items) {
  RootSet s;
  for (const char* r : items) s.insert(q(r));
  return s;
}

inline std::string show(const RootSet& s) {
  std::string out = "{";
  for (const auto& r : s) out += (out.size() > 1 ? ", " : "") + r.str();
  return out + "}";
}

}  // namespace bsroots::testing
