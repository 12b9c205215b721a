#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsroots/errors.hpp"
#include "bsroots/spectrum.hpp"
#include "test_support.hpp"

#include <random>

using namespace bsroots;
using bsroots::testing::q;
using bsroots::testing::root_set;

namespace {

FractionalPolynomial t(const Rational& e, int c = 1) { return FractionalPolynomial::monomial(e, c); }

WeightVector weights(std::initializer_list<const char*> ws) {
  std::vector<Rational> v;
  for (auto w : ws) v.push_back(q(w));
  return WeightVector(v);
}

// prod_i sum_{p=1}^{a_i - 1} t^(p / a_i): the spectrum of x_1^a_1 + ... + x_n^a_n
// built by multiplication only.
FractionalPolynomial brieskorn_product(const std::vector<int>& a) {
  FractionalPolynomial out = t(0);
  for (int ai : a) {
    FractionalPolynomial factor;
    for (int p = 1; p < ai; ++p) factor += t(Rational(Integer(p), Integer(ai)));
    out = out * factor;
  }
  return out;
}

}  // namespace

TEST_CASE("spectrum of weights (1/5, 1/4)") {
  auto sp = spectrum_wh(weights({"1/5", "1/4"}));
  FractionalPolynomial expected;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j)
      expected += t(Rational(Integer(i), Integer(5)) + Rational(Integer(j), Integer(4)));
  CHECK(sp == expected);
  CHECK(sp.terms().size() == 12);
  for (const auto& [e, c] : sp.terms()) CHECK(c == 1);
  CHECK(exponents(sp).size() == 12);
}

TEST_CASE("small spectra") {
  CHECK(spectrum_wh(weights({"1/2", "1/2"})) == t(1));
  // With u = t^(1/3): (u^3 - u) / (u - 1) = u^2 + u, squared u^4 + 2u^3 + u^2.
  CHECK(spectrum_wh(weights({"1/3", "1/3"})) == t(q("2/3")) + t(1, 2) + t(q("4/3")));
  CHECK(exponents(spectrum_wh(weights({"1/3", "1/3"}))) == root_set({"2/3", "1", "4/3"}));
  CHECK(exponents(t(1)) == root_set({"1"}));
  CHECK(exponents(spectrum_wh(weights({"1/2", "1/3"}))) == root_set({"5/6", "7/6"}));
}

TEST_CASE("weight validation") {
  CHECK_THROWS_AS(weights({"1"}), InvalidInput);
  CHECK_THROWS_AS(weights({"0"}), InvalidInput);
  CHECK_THROWS_AS(weights({"3/2"}), InvalidInput);
  CHECK_THROWS_AS(WeightVector({}), InvalidInput);
  CHECK_THROWS_AS(WeightVector::parse("1/2,,1/3"), InvalidInput);
  CHECK_THROWS_AS(WeightVector::parse("1/2,"), InvalidInput);
  CHECK(WeightVector::parse("1/5,1/4").weights() == std::vector<Rational>{q("1/5"), q("1/4")});
  // (u^3 - 1) / (u^2 - 1) with u = t^(1/5) is not a polynomial.
  CHECK_THROWS_AS(spectrum_wh(weights({"2/5"})), InvalidInput);
}

TEST_CASE("microlocal roots of weighted-homogeneous singularities") {
  auto r = wh_root_multiset(weights({"1/5", "1/4"}));
  CHECK(r.distinct() == 12);
  CHECK(r.degree() == 12);
  for (unsigned n = 1; n <= 4; ++n) {
    std::vector<Rational> half(n, q("1/2"));
    auto rn = wh_root_multiset(WeightVector(half));
    CHECK(rn == RootMultiset{{Rational(Integer(n), Integer(2)), 1}});
  }
  auto cusp = wh_root_multiset(weights({"1/2", "1/3"}));
  CHECK(cusp == RootMultiset{{q("5/6"), 1}, {q("7/6"), 1}});
}

TEST_CASE("window check") {
  auto r = wh_root_multiset(weights({"1/5", "1/4"}));
  CHECK(r.min() == q("9/20"));
  CHECK(r.max() == q("31/20"));
  CHECK(window_check(r, q("9/20"), 2).ok);

  auto bad_root = window_check(RootMultiset{{q("1/2"), 1}, {q("5/2"), 1}}, q("1/2"), 2);
  CHECK(!bad_root.ok);
  REQUIRE(bad_root.violations.size() >= 1);
  CHECK(bad_root.violations.front().root == q("5/2"));

  auto bad_mult = window_check(RootMultiset{{q("1"), 4}}, 1, 3);
  CHECK(!bad_mult.ok);
  REQUIRE(bad_mult.violations.size() == 1);
  CHECK(bad_mult.violations.front().multiplicity == 4);
  CHECK(window_check(RootMultiset{{q("1"), 2}}, 1, 3).ok);

  CHECK_THROWS_AS(window_check(r, q("1/2"), 2), PreconditionError);
  CHECK_THROWS_AS(window_check(RootMultiset{}, q("1/2"), 2), PreconditionError);
}

TEST_CASE("Brieskorn-Pham spectra match the product of geometric sums") {
  for (int a = 2; a <= 6; ++a)
    for (int b = 2; b <= 6; ++b)
      for (int c = 2; c <= 4; ++c) {
        WeightVector w({Rational(Integer(1), Integer(a)), Rational(Integer(1), Integer(b)),
                        Rational(Integer(1), Integer(c))});
        CHECK(spectrum_wh(w) == brieskorn_product({a, b, c}));
      }
}

TEST_CASE("spectrum invariants on random weights") {
  std::mt19937 rng(13);
  std::uniform_int_distribution<int> size(1, 4), den(2, 6);
  int valid = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::vector<Rational> ws;
    int n = size(rng);
    for (int i = 0; i < n; ++i) {
      int d = den(rng);
      std::uniform_int_distribution<int> num(1, d - 1);
      ws.push_back(Rational(Integer(num(rng)), Integer(d)));
    }
    WeightVector w(ws);
    FractionalPolynomial sp;
    try {
      sp = spectrum_wh(w);
    } catch (const InvalidInput&) {
      continue;
    }
    ++valid;
    FractionalPolynomial num = t(0), den_poly = t(0);
    Rational mass = 1;
    for (const auto& wi : ws) {
      num = num * (t(1) - t(wi));
      den_poly = den_poly * (t(wi) - t(0));
      mass *= Rational(1) / wi - 1;
    }
    CHECK(sp * den_poly == num);
    CHECK(sp == sp.reflected(Rational(n)));
    CHECK(Rational(sp.coefficient_sum()) == mass);
    auto e = exponents(sp);
    CHECK(e.min() == w.sum());
    CHECK(e.max() == Rational(n) - w.sum());
    CHECK(window_check(wh_root_multiset(w), w.sum(), static_cast<unsigned>(n)).ok);
  }
  CHECK(valid >= 100);
}
