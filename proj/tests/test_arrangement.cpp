#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bsroots/arrangement.hpp"
#include "bsroots/clique.hpp"
#include "bsroots/errors.hpp"
#include "line_examples.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace bsroots;
using namespace bsroots::testing;

namespace {

Arrangement forms(std::size_t n, std::vector<std::vector<int>> rows,
                  std::optional<std::size_t> inf = std::nullopt) {
  std::vector<QVector> f;
  for (const auto& r : rows) f.emplace_back(r.begin(), r.end());
  return Arrangement(n, f, inf);
}

Rational frac(long p, long q) { return Rational(Integer(p), Integer(q)); }

// Decomposability by trying every split into two nonempty parts.
bool connected_by_bipartition(const std::vector<QVector>& v) {
  if (v.size() <= 1) return true;
  const std::size_t dim = v.front().size();
  const std::size_t total = rank_of_rows(v, dim);
  for (unsigned mask = 1; mask + 1 < (1u << v.size()); ++mask) {
    std::vector<QVector> s1, s2;
    for (std::size_t i = 0; i < v.size(); ++i) ((mask >> i) & 1 ? s1 : s2).push_back(v[i]);
    if (rank_of_rows(s1, dim) + rank_of_rows(s2, dim) == total) return false;
  }
  return true;
}

std::size_t brute_force_clique(const AdjacencyMatrix& adj) {
  std::size_t best = 0;
  const std::size_t n = adj.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = i + 1; j < n && ok; ++j)
        if ((mask >> i & 1) && (mask >> j & 1) && !adj[i][j]) ok = false;
    if (ok) best = std::max<std::size_t>(best, __builtin_popcount(mask));
  }
  return best;
}

QVector cross(const QVector& a, const QVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Projective points of a rank-3 arrangement from pairwise cross products:
// the index sets of forms vanishing at each pairwise intersection.
std::set<IndexSet> points_by_cross_products(const Arrangement& a) {
  std::set<IndexSet> out;
  for (std::size_t i = 0; i < a.d(); ++i)
    for (std::size_t j = i + 1; j < a.d(); ++j) {
      QVector p = cross(a.form(i), a.form(j));
      IndexSet s;
      for (std::size_t k = 0; k < a.d(); ++k)
        if (dot(a.form(k), p).is_zero()) s.push_back(k);
      out.insert(s);
    }
  return out;
}

std::set<IndexSet> codim2_edges(const Arrangement& a) {
  std::set<IndexSet> out;
  for (const auto& e : a.edges())
    if (e.codim == 2) out.insert(e.indices);
  return out;
}

long count_codim2(const Arrangement& a, std::size_t m) {
  long c = 0;
  for (const auto& e : a.edges()) c += e.codim == 2 && e.m() == m;
  return c;
}

std::optional<Arrangement> random_cone(std::mt19937& rng, int max_lines) {
  std::uniform_int_distribution<int> coef(-3, 3), count(2, max_lines);
  std::vector<AffineLine> lines;
  int k = count(rng);
  for (int i = 0; i < k; ++i) lines.push_back({coef(rng), coef(rng), coef(rng)});
  try {
    return cone_over(lines);
  } catch (const InvalidInput&) {
    return std::nullopt;
  }
}

bool triple_bounded(const Arrangement& a) {
  for (const auto& e : a.edges())
    if (e.codim == 2 && e.m() > 3) return false;
  return true;
}

const std::vector<AffineLine> kFourTriplePointsSeven = {
    {2, 1, -1}, {-1, -2, 1}, {1, 0, 1}, {1, 2, -2}, {2, 1, -2}, {0, -1, 1}};

Arrangement generic_arrangement(std::size_t n, std::size_t d) {
  // Rows of a Vandermonde-like matrix: any n of them are independent.
  std::vector<QVector> f;
  for (std::size_t i = 0; i < d; ++i) {
    QVector row;
    for (std::size_t j = 0; j < n; ++j) {
      Integer p = 1;
      for (std::size_t t = 0; t < j; ++t) p *= Integer(i + 1);
      row.push_back(Rational(p));
    }
    f.push_back(row);
  }
  return Arrangement(n, f);
}

}  // namespace

TEST_CASE("arrangement validation") {
  CHECK_THROWS_AS(forms(2, {{1, 0}, {2, 0}, {0, 1}}), InvalidInput);
  CHECK_THROWS_AS(forms(3, {{1, 0, 0}, {0, 1, 0}}), InvalidInput);
  CHECK_THROWS_AS(forms(2, {{0, 0}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(forms(2, {{1, 0, 0}}), InvalidInput);
  CHECK_THROWS_AS(forms(2, {{1, 0}, {0, 1}}, 2), InvalidInput);
  auto small = forms(2, {{1, 0}, {0, 1}});
  CHECK(!small.degree_exceeds_dim());
  CHECK_THROWS_AS(root_candidates(small), PreconditionError);
}

TEST_CASE("lattice of small arrangements") {
  auto xy = forms(2, {{1, 0}, {0, 1}});
  REQUIRE(xy.edges().size() == 3);
  CHECK(xy.edges()[0].codim == 1);
  CHECK(xy.edges()[0].dense);
  CHECK(xy.edge(xy.center_id()).m() == 2);
  CHECK(!xy.edge(xy.center_id()).dense);

  auto g = generic_arrangement(3, 4);
  std::map<std::pair<std::size_t, std::size_t>, int> shape;
  for (const auto& e : g.edges()) ++shape[{e.codim, e.m()}];
  CHECK(shape == std::map<std::pair<std::size_t, std::size_t>, int>{
                     {{1, 1}, 4}, {{2, 2}, 6}, {{3, 4}, 1}});
  for (const auto& e : g.edges()) CHECK(e.dense == (e.m() != 2));
  for (const auto& e : g.edges()) CHECK(e.basis.size() + e.codim == 3);
}

TEST_CASE("lattice of the cone over (x^2-1)(y^2-1)") {
  auto a = cone_over(square_lines());
  CHECK(a.d() == 5);
  CHECK(a.infinity_index() == 4u);
  CHECK(count_codim2(a, 3) == 2);
  CHECK(count_codim2(a, 2) == 4);
  CHECK(codim2_edges(a) == points_by_cross_products(a));
  for (const auto& e : a.edges()) {
    if (e.codim == 2 && e.m() == 3) {
      CHECK(e.dense);
      CHECK(std::binary_search(e.indices.begin(), e.indices.end(), 4u));
    }
    if (e.codim == 2 && e.m() == 2) CHECK(!e.dense);
    if (e.codim == 1) CHECK(e.dense);
  }
  CHECK(a.edge(a.center_id()).dense);
}

TEST_CASE("lattice soundness: closures of all index sets are exactly the edges") {
  std::mt19937 rng(8);
  int checked = 0;
  while (checked < 25) {
    auto a = random_cone(rng, 6);
    if (!a) continue;
    ++checked;
    std::set<IndexSet> from_subsets;
    for (unsigned mask = 1; mask < (1u << a->d()); ++mask) {
      IndexSet s;
      for (std::size_t i = 0; i < a->d(); ++i)
        if (mask >> i & 1) s.push_back(i);
      from_subsets.insert(a->closure(s));
    }
    std::set<IndexSet> listed;
    for (const auto& e : a->edges()) {
      listed.insert(e.indices);
      CHECK(a->closure(e.indices) == e.indices);
      CHECK(e.codim <= e.m());
      for (const auto& v : e.basis)
        for (auto i : e.indices) CHECK(dot(a->form(i), v).is_zero());
    }
    CHECK(listed == from_subsets);
    for (std::size_t x = 0; x < a->edges().size(); ++x)
      for (std::size_t y = 0; y < a->edges().size(); ++y) {
        auto z = a->meet(x, y);
        CHECK(a->edge_within(z, x));
        CHECK(a->edge_within(z, y));
      }
    CHECK(codim2_edges(*a) == points_by_cross_products(*a));
  }
}

TEST_CASE("density agrees with the bipartition test") {
  std::mt19937 rng(21);
  std::uniform_int_distribution<int> coef(-2, 2), size(1, 6), dim(2, 4);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = dim(rng);
    std::vector<QVector> v;
    int k = size(rng);
    while (static_cast<int>(v.size()) < k) {
      QVector x(n);
      bool nonzero = false;
      for (auto& c : x) {
        c = coef(rng);
        nonzero = nonzero || !c.is_zero();
      }
      if (nonzero) v.push_back(x);
    }
    CHECK(matroid_connected(v) == connected_by_bipartition(v));
  }
  // Three concurrent lines: indecomposable.
  CHECK(matroid_connected({{1, 0}, {0, 1}, {1, 1}}));
  CHECK(!matroid_connected({{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}));
}

TEST_CASE("maximum clique agrees with exhaustive search") {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> size(0, 12);
  std::bernoulli_distribution edge(0.55);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = size(rng);
    AdjacencyMatrix adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) adj[i][j] = adj[j][i] = edge(rng);
    auto c = maximum_clique(adj);
    CHECK(c.size() == brute_force_clique(adj));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) CHECK(adj[c[i]][c[j]]);
  }
}

TEST_CASE("m(lambda)") {
  auto g = generic_arrangement(3, 5);
  auto ml = m_lambda(g, 5);
  CHECK(ml.pool == std::vector<std::size_t>{g.center_id()});
  CHECK(ml.value == 1);

  auto iv = cone_over(square_cross_lines());
  auto ml3 = m_lambda(iv, 3);
  CHECK(ml3.pool.size() == 6);
  for (auto id : ml3.pool) CHECK(iv.edge(id).m() == 3);
  CHECK(ml3.value == 1);

  auto g4 = generic_arrangement(3, 4);
  CHECK(m_lambda(g4, 1).value == 5);
  CHECK_THROWS_AS(m_lambda(g4, 0), InvalidInput);
}

TEST_CASE("root candidates") {
  auto g = generic_arrangement(3, 4);
  RootSet expected;
  // The cut at 2 - 1/d is strict, so 7/4 is not a candidate.
  for (int j = 1; j <= 6; ++j) expected.insert(frac(j, 4));
  CHECK(root_candidates(g) == expected);

  auto a = cone_over(square_lines());
  RootSet c;
  for (int j = 1; j <= 8; ++j) c.insert(frac(j, 5));
  for (int j = 1; j <= 5; ++j) c.insert(frac(j, 3));
  CHECK(root_candidates(a) == c);
  CHECK(generic_bfunction(g).support().is_subset_of(root_candidates(g)));
}

TEST_CASE("multiplicity bounds") {
  auto g = generic_arrangement(3, 4);
  auto one = multiplicity_bounds(g, 1);
  CHECK(one.bound == 3);
  CHECK(one.exact);
  auto simple = multiplicity_bounds(g, frac(5, 4));
  CHECK(simple.bound == 1);
  CHECK(simple.exact);
  CHECK_THROWS_AS(multiplicity_bounds(g, frac(1, 3)), PreconditionError);

  // A quadruple point (first four forms) inside a d = 6 arrangement: the
  // dense edges with even multiplicity are that point (m = 4) and the
  // center (m = 6), which contain one another.
  auto quad = forms(3, {{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {1, 1, 0}, {1, 0, -1}, {0, 1, -1}});
  auto half = multiplicity_bounds(quad, frac(1, 2));
  CHECK(half.bound == 2);
  CHECK(!half.exact);
  auto ml = m_lambda(quad, 2);
  std::set<std::size_t> ms;
  for (auto id : ml.witness) ms.insert(quad.edge(id).m());
  CHECK(ms == std::set<std::size_t>{4, 6});
  CHECK(alpha_prime(quad) == frac(1, 2));
}

TEST_CASE("Euler and Betti numbers of the four cones") {
  struct Row {
    std::vector<AffineLine> lines;
    long b1, b2, chi, nu3;
  };
  std::vector<Row> rows = {{square_lines(), 4, 4, 1, 2},
                           {square_diagonal_lines(), 5, 6, 2, 4},
                           {cross_lines(), 5, 9, 5, 1},
                           {square_cross_lines(), 6, 9, 4, 6}};
  for (const auto& row : rows) {
    auto a = cone_over(row.lines);
    auto eb = euler_betti(a);
    CHECK(eb.b0 == 1);
    CHECK(eb.b1 == row.b1);
    CHECK(eb.b2 == row.b2);
    CHECK(eb.chi == row.chi);
    CHECK(eb.nu3 == row.nu3);
    CHECK(eb.nu3 == count_codim2(a, 3));
  }
  auto sq = euler_betti(cone_over(square_lines()));
  CHECK(sq.nu2_prime == 4);
  CHECK(sq.nu3_prime == 0);

  CHECK_THROWS_AS(euler_betti(cone_over(square_lines()).with_infinity(std::nullopt)),
                  PreconditionError);
  CHECK_THROWS_AS(euler_betti(generic_arrangement(4, 5)), PreconditionError);
  // Four concurrent lines.
  std::vector<AffineLine> star = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, -1, 0}};
  CHECK_THROWS_AS(euler_betti(cone_over(star)), PreconditionError);
}

TEST_CASE("alpha' and alpha_min") {
  auto i = cone_over(square_lines());
  CHECK(alpha_prime(i) == frac(2, 3));
  CHECK(alpha_min(i) == frac(3, 5));
  CHECK(alpha_prime(generic_arrangement(3, 4)) == 1);
  CHECK(alpha_min(generic_arrangement(3, 4)) == frac(3, 4));
  CHECK(alpha_min(cone_over(square_cross_lines())) == frac(3, 7));
  for (const auto& lines : {square_diagonal_lines(), cross_lines(), square_cross_lines()})
    CHECK(alpha_prime(cone_over(lines)) == frac(2, 3));
}

TEST_CASE("generic arrangements") {
  auto line3 = forms(2, {{1, 0}, {0, 1}, {1, 1}});
  CHECK(is_generic(line3));
  CHECK(generic_bfunction(line3) == RootMultiset{{frac(2, 3), 1}, {1, 2}, {frac(4, 3), 1}});
  CHECK(generic_bfunction(generic_arrangement(3, 4)) ==
        RootMultiset{{frac(3, 4), 1}, {1, 3}, {frac(5, 4), 1}, {frac(3, 2), 1}});
  CHECK_THROWS_AS(generic_bfunction(forms(2, {{1, 0}, {0, 1}})), PreconditionError);
  CHECK(!is_generic(cone_over(square_lines())));
  CHECK_THROWS_AS(generic_bfunction(cone_over(square_lines())), PreconditionError);
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t d = n + 1; d <= n + 3; ++d) {
      auto g = generic_arrangement(n, d);
      REQUIRE(is_generic(g));
      auto b = generic_bfunction(g);
      CHECK(b.multiplicity(1) == n);
      CHECK(b.max() < Rational(2) - frac(1, static_cast<long>(d)));
      CHECK(b.degree() == 2 * d - 1 - n + n - 1);
      CHECK(b.support().is_subset_of(root_candidates(g)));
    }
}

TEST_CASE("rank-3 b-functions with triple points") {
  auto i = bfunction_n3_low_degree(cone_over(square_lines()));
  CHECK(i.nu3 == 2);
  CHECK(i.r == 7);
  REQUIRE(i.roots);
  RootMultiset expected{{frac(2, 3), 1}, {1, 3}, {frac(4, 3), 1}};
  for (int j : {3, 4, 6, 7}) expected.add(frac(j, 5));
  CHECK(*i.roots == expected);
  CHECK(!i.roots->support().contains(frac(8, 5)));

  auto ii = bfunction_n3_low_degree(cone_over(square_diagonal_lines()));
  CHECK(ii.nu3 == 4);
  CHECK(ii.r == 9);
  CHECK(ii.roots->multiplicity(frac(2, 3)) == 2);
  CHECK(ii.roots->multiplicity(frac(4, 3)) == 2);
  CHECK(!ii.roots->support().contains(frac(10, 6)));

  auto iii = bfunction_n3_low_degree(cone_over(cross_lines()));
  CHECK(iii.nu3 == 1);
  CHECK(iii.r == 10);
  CHECK(iii.roots->support().contains(frac(10, 6)));

  auto iv = bfunction_n3_low_degree(cone_over(square_cross_lines()));
  CHECK(iv.nu3 == 6);
  CHECK(iv.r == 11);
  CHECK(!iv.roots->support().contains(frac(12, 7)));

  auto seven = cone_over(kFourTriplePointsSeven);
  CHECK(count_codim2(seven, 3) == 4);
  std::set<IndexSet> triples;
  for (const auto& s : points_by_cross_products(seven))
    if (s.size() == 3) triples.insert(s);
  CHECK(triples.size() == 4);
  auto ind = bfunction_n3_low_degree(seven);
  CHECK(ind.indeterminate);
  CHECK(!ind.roots);
  CHECK(ind.alternatives[0].support().contains(frac(12, 7)));
  CHECK(!ind.alternatives[1].support().contains(frac(12, 7)));

  CHECK_THROWS_AS(bfunction_n3_low_degree(generic_arrangement(3, 5)), PreconditionError);
  // Three concurrent lines and one more: a product, so the center is not
  // dense and the formula does not apply.
  auto pencil = cone_over({line(1, 0, 1), line(1, 0, -1), line(1, 1, 0)});
  CHECK(!pencil.edge(pencil.center_id()).dense);
  CHECK_THROWS_AS(bfunction_n3_low_degree(pencil), PreconditionError);
  CHECK_THROWS_AS(bfunction_n3_low_degree(generic_arrangement(4, 6)), PreconditionError);
}

TEST_CASE("local root data") {
  CHECK(point_roots(1) == root_set({"1"}));
  CHECK(point_roots(2) == root_set({"1"}));
  CHECK(point_roots(3) == root_set({"2/3", "1", "4/3"}));
  auto a = cone_over(square_lines());
  auto local = local_root_data(a);
  for (const auto& [id, roots] : local) {
    if (a.edge(id).m() == 3) CHECK(roots == root_set({"2/3", "1", "4/3"}));
    else CHECK(roots == root_set({"1"}));
  }
  CHECK(local_roots_union(a) == root_set({"2/3", "1", "4/3"}));
  CHECK(local_roots_union(cone_over(cross_lines())) == root_set({"2/3", "1", "4/3"}));
}

TEST_CASE("cone construction") {
  CHECK(cone_over(square_lines()).d() == 5);
  CHECK(cone_over(square_diagonal_lines()).d() == 6);
  CHECK_THROWS_AS(cone_over({}), InvalidInput);
  CHECK_THROWS_AS(cone_over({line(1, 0, 1), line(2, 0, 2), line(0, 1, 0)}), InvalidInput);
  CHECK_THROWS_AS(cone_over({line(0, 0, 1), line(0, 1, 0)}), InvalidInput);
  CHECK(cone_over(square_lines()).form(4) == QVector{0, 0, 1});
  CHECK(cone_over(square_lines()).form(0) == QVector{1, 0, -1});
}

TEST_CASE("report aggregates") {
  auto rep = arrangement_report(cone_over(square_lines()));
  REQUIRE(rep.betti);
  CHECK(rep.betti->chi == 1);
  REQUIRE(rep.low_degree);
  CHECK(rep.low_degree->r == 7);
  CHECK(rep.bfunction);
  CHECK(!rep.indeterminate);
  CHECK(*rep.alpha_min == frac(3, 5));

  auto ind = arrangement_report(cone_over(kFourTriplePointsSeven));
  CHECK(ind.indeterminate);
  CHECK(!ind.bfunction);

  auto gen = arrangement_report(generic_arrangement(3, 4));
  CHECK(gen.generic);
  CHECK(gen.bfunction_method == "generic arrangement formula");
  CHECK(!gen.betti);
}

TEST_CASE("consistency on random line arrangements") {
  std::mt19937 rng(77);
  int triple_cases = 0, produced = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto a = random_cone(rng, 6);
    if (!a) continue;
    if (a->degree_exceeds_dim()) {
      CHECK(alpha_min(*a) < 1);
      auto rep = arrangement_report(*a);
      if (rep.bfunction) {
        ++produced;
        auto cand = root_candidates(*a);
        const Rational top = Rational(2) - frac(1, static_cast<long>(a->d()));
        CHECK(rep.bfunction->multiplicity(1) == a->n());
        for (const auto& [r, m] : *rep.bfunction) {
          CHECK(cand.contains(r));
          CHECK(r < top);
          CHECK(m <= multiplicity_bounds(*a, r).bound);
        }
      }
    }
    if (!triple_bounded(*a)) continue;
    ++triple_cases;
    long chi = euler_betti(*a).chi;
    for (std::size_t inf = 0; inf < a->d(); ++inf) {
      auto other = a->with_infinity(inf);
      CHECK(euler_betti(other).chi == chi);
    }
  }
  CHECK(triple_cases >= 50);
  CHECK(produced >= 20);
}
