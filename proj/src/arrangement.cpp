#include "bsroots/arrangement.hpp"

#include "bsroots/clique.hpp"
#include "bsroots/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

namespace bsroots {

namespace {

std::vector<QVector> pick(const std::vector<QVector>& forms, const IndexSet& indices) {
  std::vector<QVector> rows;
  rows.reserve(indices.size());
  for (auto i : indices) rows.push_back(forms[i]);
  return rows;
}

bool is_subset(const IndexSet& small, const IndexSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void require_d_exceeds_n(const Arrangement& a) {
  if (!a.degree_exceeds_dim()) throw PreconditionError("requires d > n");
}

void require_rank3_triple(const Arrangement& a) {
  if (a.n() != 3) throw PreconditionError("requires n == 3");
  for (const auto& e : a.edges())
    if (e.codim == 2 && e.m() > 3) throw PreconditionError("multiplicity > 3 unsupported");
}

}  // namespace

Arrangement::Arrangement(std::size_t n, std::vector<QVector> forms,
                         std::optional<std::size_t> infinity_index)
    : n_(n), forms_(std::move(forms)), infinity_(infinity_index) {
  if (n_ == 0) throw InvalidInput("arrangement dimension must be positive");
  if (forms_.empty()) throw InvalidInput("arrangement has no forms");
  for (const auto& f : forms_) {
    if (f.size() != n_) throw InvalidInput("form length differs from n");
    if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return x.is_zero(); }))
      throw InvalidInput("zero form");
  }
  for (std::size_t i = 0; i < forms_.size(); ++i)
    for (std::size_t j = i + 1; j < forms_.size(); ++j)
      if (rank_of_rows({forms_[i], forms_[j]}, n_) < 2)
        throw InvalidInput("arrangement is not reduced: forms " + std::to_string(i) + " and " +
                           std::to_string(j) + " are proportional");
  if (rank_of_rows(forms_, n_) != n_) throw InvalidInput("arrangement is not essential");
  if (infinity_ && *infinity_ >= forms_.size())
    throw InvalidInput("infinity index out of range");

  std::set<IndexSet> flats;
  std::deque<IndexSet> queue;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    IndexSet c = closure({i});
    if (flats.insert(c).second) queue.push_back(c);
  }
  while (!queue.empty()) {
    IndexSet f = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < forms_.size(); ++i) {
      if (std::binary_search(f.begin(), f.end(), i)) continue;
      IndexSet g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), i), i);
      g = closure(g);
      if (flats.insert(g).second) queue.push_back(g);
    }
  }
  for (const auto& f : flats) {
    Edge e;
    e.indices = f;
    auto rows = pick(forms_, f);
    e.codim = rank_of_rows(rows, n_);
    e.basis = nullspace(QMatrix::from_rows(rows));
    e.dense = matroid_connected(rows);
    edges_.push_back(std::move(e));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) {
    return std::tie(x.codim, x.indices) < std::tie(y.codim, y.indices);
  });
  for (std::size_t id = 0; id < edges_.size(); ++id) by_indices_[edges_[id].indices] = id;
}

Arrangement Arrangement::with_infinity(std::optional<std::size_t> index) const {
  return Arrangement(n_, forms_, index);
}

IndexSet Arrangement::closure(const IndexSet& indices) const {
  auto rows = pick(forms_, indices);
  std::size_t r = rank_of_rows(rows, n_);
  IndexSet out;
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (std::find(indices.begin(), indices.end(), i) != indices.end()) {
      out.push_back(i);
      continue;
    }
    rows.push_back(forms_[i]);
    if (rank_of_rows(rows, n_) == r) out.push_back(i);
    rows.pop_back();
  }
  return out;
}

std::size_t Arrangement::edge_of(const IndexSet& indices) const {
  if (indices.empty()) throw InvalidInput("empty index set names no edge");
  for (auto i : indices)
    if (i >= forms_.size()) throw InvalidInput("form index out of range");
  return by_indices_.at(closure(indices));
}

std::size_t Arrangement::meet(std::size_t a, std::size_t b) const {
  IndexSet u;
  std::set_union(edges_[a].indices.begin(), edges_[a].indices.end(), edges_[b].indices.begin(),
                 edges_[b].indices.end(), std::back_inserter(u));
  return edge_of(u);
}

bool Arrangement::edge_within(std::size_t a, std::size_t b) const {
  return is_subset(edges_[b].indices, edges_[a].indices);
}

bool matroid_connected(const std::vector<QVector>& vectors) {
  if (vectors.size() <= 1) return true;
  const std::size_t dim = vectors.front().size();
  std::vector<std::size_t> basis, rest;
  std::vector<QVector> chosen;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    chosen.push_back(vectors[i]);
    if (rank_of_rows(chosen, dim) == chosen.size()) {
      basis.push_back(i);
    } else {
      chosen.pop_back();
      rest.push_back(i);
    }
  }
  // Columns: basis vectors, then the others. After reduction the entries of
  // a non-basis column in the pivot rows are its basis coordinates.
  QMatrix m(dim, vectors.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = vectors[basis[c]][r];
  for (std::size_t c = 0; c < rest.size(); ++c)
    for (std::size_t r = 0; r < dim; ++r) m(r, basis.size() + c) = vectors[rest[c]][r];
  auto rre = row_reduce(m);

  std::vector<std::size_t> parent(vectors.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < rest.size(); ++c)
    for (std::size_t b = 0; b < basis.size(); ++b)
      if (!rre.reduced(b, basis.size() + c).is_zero()) parent[find(rest[c])] = find(basis[b]);
  std::size_t root = find(0);
  for (std::size_t i = 1; i < vectors.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

const std::vector<Edge>& intersection_lattice(const Arrangement& a) { return a.edges(); }

bool is_dense(const Arrangement& a, const Edge& edge) {
  return matroid_connected(pick(a.forms(), edge.indices));
}

bool strongly_adjacent(const Arrangement& a, std::size_t e1, std::size_t e2) {
  if (a.edge_within(e1, e2) || a.edge_within(e2, e1)) return true;
  return !a.edge(a.meet(e1, e2)).dense;
}

MLambda m_lambda(const Arrangement& a, unsigned lambda_order) {
  if (lambda_order == 0) throw InvalidInput("lambda order must be positive");
  MLambda out;
  for (std::size_t id = 0; id < a.edges().size(); ++id) {
    const auto& e = a.edge(id);
    if (e.dense && e.m() % lambda_order == 0) out.pool.push_back(id);
  }
  AdjacencyMatrix adj(out.pool.size(), std::vector<bool>(out.pool.size(), false));
  for (std::size_t i = 0; i < out.pool.size(); ++i)
    for (std::size_t j = i + 1; j < out.pool.size(); ++j)
      adj[i][j] = adj[j][i] = strongly_adjacent(a, out.pool[i], out.pool[j]);
  for (auto v : maximum_clique(adj)) out.witness.push_back(out.pool[v]);
  out.value = out.witness.size();
  return out;
}

RootSet root_candidates(const Arrangement& a) {
  require_d_exceeds_n(a);
  const Rational bound = Rational(2) - Rational(Integer(1), Integer(a.d()));
  std::set<std::size_t> ms;
  for (const auto& e : a.edges())
    if (e.dense) ms.insert(e.m());
  RootSet out;
  for (auto m : ms)
    for (std::size_t j = 1;; ++j) {
      Rational r{Integer(j), Integer(m)};
      if (r >= bound) break;
      out.insert(r);
    }
  return out;
}

MultiplicityBound multiplicity_bounds(const Arrangement& a, const Rational& alpha) {
  if (!root_candidates(a).contains(alpha))
    throw PreconditionError(alpha.str() + " is not a candidate root");
  if (alpha == 1) return {static_cast<unsigned>(a.n()), true, "root 1 has multiplicity n"};
  if (!alpha.is_integer()) {
    bool coprime = true;
    const auto& edges = a.edges();
    for (std::size_t i = 0; i < edges.size() && coprime; ++i) {
      if (!edges[i].dense) continue;
      for (std::size_t j = i + 1; j < edges.size(); ++j) {
        if (!edges[j].dense) continue;
        if (std::gcd(edges[i].m(), edges[j].m()) != 1 && strongly_adjacent(a, i, j)) {
          coprime = false;
          break;
        }
      }
    }
    if (coprime)
      return {1, true, "strongly adjacent dense edges have coprime multiplicities"};
  }
  auto ml = m_lambda(a, static_cast<unsigned>(alpha.den()));
  return {static_cast<unsigned>(ml.value), false, "m(lambda) clique bound"};
}

EulerBetti euler_betti(const Arrangement& a) {
  require_rank3_triple(a);
  if (!a.infinity_index()) throw PreconditionError("infinity index required");
  const std::size_t inf = *a.infinity_index();
  EulerBetti out;
  for (const auto& e : a.edges()) {
    if (e.codim != 2) continue;
    bool at_infinity = std::binary_search(e.indices.begin(), e.indices.end(), inf);
    if (e.m() == 3) ++out.nu3;
    if (at_infinity) continue;
    if (e.m() == 2) ++out.nu2_prime;
    if (e.m() == 3) ++out.nu3_prime;
  }
  const long d = static_cast<long>(a.d());
  out.b0 = 1;
  out.b1 = d - 1;
  out.b2 = out.nu2_prime + 2 * out.nu3_prime;
  out.chi = out.b0 - out.b1 + out.b2;
  if (out.chi != (d - 2) * (d - 3) / 2 - out.nu3)
    throw std::logic_error("Euler characteristic formulas disagree");
  return out;
}

Rational alpha_prime(const Arrangement& a) {
  require_d_exceeds_n(a);
  std::optional<Rational> best;
  for (const auto& e : a.edges()) {
    if (e.is_center(a.n())) continue;
    Rational v(Integer(e.codim), Integer(e.m()));
    if (!best || v < *best) best = v;
  }
  return *best;
}

Rational alpha_min(const Arrangement& a) {
  Rational v = std::min(alpha_prime(a), Rational(Integer(a.n()), Integer(a.d())));
  if (v >= 1) throw std::logic_error("alpha_min must be < 1");
  return v;
}

bool is_generic(const Arrangement& a) {
  const std::size_t n = a.n(), d = a.d();
  if (d < n) return false;
  std::vector<bool> mask(d, false);
  std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
  do {
    std::vector<QVector> rows;
    for (std::size_t i = 0; i < d; ++i)
      if (mask[i]) rows.push_back(a.form(i));
    if (rank_of_rows(rows, n) != n) return false;
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return true;
}

RootMultiset generic_bfunction(const Arrangement& a) {
  require_d_exceeds_n(a);
  if (!is_generic(a)) throw PreconditionError("not generic");
  const auto n = static_cast<long>(a.n()), d = static_cast<long>(a.d());
  RootMultiset out;
  out.add(1, static_cast<unsigned>(n));
  for (long j = n; j <= 2 * d - 2; ++j)
    if (j != d) out.add(Rational(Integer(j), Integer(d)));
  return out;
}

RootSet point_roots(std::size_t m) {
  if (m == 0) throw InvalidInput("point multiplicity must be positive");
  if (m <= 2) return RootSet{1};
  RootSet out;
  for (std::size_t j = 2; j <= 2 * m - 2; ++j) out.insert(Rational(Integer(j), Integer(m)));
  return out;
}

namespace {

RootMultiset triple_point_product(long d, long r) {
  RootMultiset out;
  out.add(1);
  for (long i = 2; i <= 4; ++i) out.add(Rational(Integer(i), Integer(3)));
  for (long j = 3; j <= r; ++j) out.add(Rational(Integer(j), Integer(d)));
  return out;
}

}  // namespace

LowDegreeBFunction bfunction_n3_low_degree(const Arrangement& a) {
  if (a.n() != 3) throw PreconditionError("requires n == 3");
  if (a.d() > 7) throw PreconditionError("requires d <= 7");
  require_rank3_triple(a);
  if (!a.edge(a.center_id()).dense) throw PreconditionError("arrangement is decomposable");
  LowDegreeBFunction out;
  for (const auto& e : a.edges())
    if (e.codim == 2 && e.m() == 3) ++out.nu3;
  if (out.nu3 == 0) throw PreconditionError("requires at least one triple point");

  const long d = static_cast<long>(a.d());
  out.alternatives = {triple_point_product(d, 2 * d - 2), triple_point_product(d, 2 * d - 3)};
  if (out.nu3 < d - 3) {
    out.r = 2 * d - 2;
  } else if (d < 7 || out.nu3 > 4) {
    out.r = 2 * d - 3;
  } else {
    out.indeterminate = true;
    return out;
  }
  out.roots = out.r == 2 * d - 2 ? out.alternatives[0] : out.alternatives[1];
  return out;
}

std::map<std::size_t, RootSet> local_root_data(const Arrangement& a) {
  require_rank3_triple(a);
  std::map<std::size_t, RootSet> out;
  for (std::size_t id = 0; id < a.edges().size(); ++id)
    if (!a.edge(id).is_center(a.n())) out[id] = point_roots(a.edge(id).m());
  return out;
}

RootSet local_roots_union(const Arrangement& a) {
  if (a.n() != 3) throw PreconditionError("requires n == 3");
  RootSet out;
  for (const auto& e : a.edges())
    if (!e.is_center(a.n())) out.merge(point_roots(e.m()));
  return out;
}

Arrangement cone_over(const std::vector<AffineLine>& lines) {
  if (lines.empty()) throw InvalidInput("no affine lines");
  std::vector<QVector> forms;
  for (const auto& l : lines) {
    if (l.a.is_zero() && l.b.is_zero()) throw InvalidInput("degenerate line: a = b = 0");
    forms.push_back({l.a, l.b, -l.c});
  }
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = i + 1; j < forms.size(); ++j)
      if (rank_of_rows({forms[i], forms[j]}, 3) < 2)
        throw InvalidInput("duplicate lines " + std::to_string(i) + " and " + std::to_string(j));
  forms.push_back({0, 0, 1});
  const std::size_t inf = forms.size() - 1;
  return Arrangement(3, std::move(forms), inf);
}

ArrangementReport arrangement_report(const Arrangement& a) {
  ArrangementReport rep;
  rep.n = a.n();
  rep.d = a.d();
  for (std::size_t id = 0; id < a.edges().size(); ++id) {
    rep.edges_by_codim[a.edge(id).codim].push_back(id);
    if (a.edge(id).dense) rep.dense_edges.push_back(id);
  }
  if (a.degree_exceeds_dim()) {
    rep.alpha_prime = alpha_prime(a);
    rep.alpha_min = alpha_min(a);
    rep.candidates = root_candidates(a);
    rep.generic = is_generic(a);
  } else {
    rep.notes.push_back("d <= n: candidates, alpha and b-function omitted");
  }

  if (a.n() == 3) {
    try {
      if (a.infinity_index()) rep.betti = euler_betti(a);
      else rep.notes.push_back("no infinity index: Betti numbers omitted");
    } catch (const PreconditionError& e) {
      rep.notes.push_back(std::string("Betti numbers omitted: ") + e.what());
    }
  }

  if (rep.generic) {
    rep.bfunction = generic_bfunction(a);
    rep.bfunction_method = "generic arrangement formula";
  } else if (a.n() == 3 && a.degree_exceeds_dim()) {
    try {
      rep.low_degree = bfunction_n3_low_degree(a);
      rep.indeterminate = rep.low_degree->indeterminate;
      rep.bfunction = rep.low_degree->roots;
      rep.bfunction_method = "rank 3 triple point formula";
    } catch (const PreconditionError& e) {
      rep.notes.push_back(std::string("b-function omitted: ") + e.what());
    }
  } else if (a.degree_exceeds_dim()) {
    rep.notes.push_back("b-function omitted: no closed form applies");
  }
  return rep;
}

}  // namespace bsroots
