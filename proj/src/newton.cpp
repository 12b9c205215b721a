#include "bsroots/newton.hpp"

#include "bsroots/errors.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace bsroots {

namespace {

// Calls fn(indices) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

QVector to_q(const IntVector& v) {
  QVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

QVector unit(std::size_t n, std::size_t i) {
  QVector e(n, Rational(0));
  e[i] = 1;
  return e;
}

bool satisfies(const FacetInequality& f, const IntVector& u) {
  return evaluate(f.normal, u) >= f.offset;
}

bool on_facet(const FacetInequality& f, const IntVector& u) {
  return evaluate(f.normal, u) == f.offset;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators) : n_(n) {
  if (n == 0) throw InvalidInput("ambient dimension must be at least 1");
  if (generators.empty()) throw InvalidInput("monomial ideal needs at least one generator");
  for (const auto& g : generators) {
    if (g.size() != n) throw InvalidInput("generator length does not match n");
    for (const auto& x : g)
      if (x.sign() < 0) throw InvalidInput("negative exponent in generator");
    if (is_zero(g)) throw InvalidInput("zero exponent generates the unit ideal");
  }
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  auto dominates = [&](const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] < b[i]) return false;
    return true;
  };
  for (const auto& g : generators) {
    bool redundant = false;
    for (const auto& h : generators)
      if (&h != &g && dominates(g, h)) redundant = true;
    if (!redundant) generators_.push_back(g);
  }
}

bool MonomialIdeal::contains_exponent(const ExponentVector& u) const {
  for (const auto& g : generators_) {
    bool ge = true;
    for (std::size_t i = 0; i < n_ && ge; ++i) ge = u[i] >= g[i];
    if (ge) return true;
  }
  return false;
}

Rational evaluate(const QVector& functional, const IntVector& u) {
  Rational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!functional[i].is_zero() && !u[i].is_zero()) s += functional[i] * Rational(u[i]);
  return s;
}

bool Face::span_contains(const IntVector& u) const {
  std::vector<QVector> rows = span_basis;
  std::size_t r = rows.size();
  rows.push_back(to_q(u));
  return rank_of_rows(rows, u.size()) == r;
}

bool NewtonPolyhedron::contains(const IntVector& u) const {
  return std::all_of(facets.begin(), facets.end(),
                     [&](const FacetInequality& f) { return satisfies(f, u); });
}

bool NewtonPolyhedron::on_face(const Face& f, const IntVector& u) const {
  if (!contains(u)) return false;
  return std::all_of(f.facet_ids.begin(), f.facet_ids.end(),
                     [&](std::size_t id) { return on_facet(facets[id], u); });
}

NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.dim();
  if (n > 3) throw PreconditionError("unsupported dimension");
  const auto& gens = ideal.generators();

  NewtonPolyhedron poly;
  poly.n = n;

  // Facet hyperplanes are spanned by k generators and n-k coordinate rays.
  std::set<FacetInequality> found;
  for (std::size_t k = 1; k <= n; ++k) {
    for_each_subset(gens.size(), k, [&](const std::vector<std::size_t>& pts) {
      for_each_subset(n, n - k, [&](const std::vector<std::size_t>& dirs) {
        QMatrix m(n - 1, n);
        std::size_t row = 0;
        for (std::size_t j = 1; j < pts.size(); ++j, ++row)
          for (std::size_t c = 0; c < n; ++c) m(row, c) = Rational(gens[pts[j]][c] - gens[pts[0]][c]);
        for (auto d : dirs) m(row++, d) = 1;
        auto ns = nullspace(m);
        if (ns.size() != 1) return;
        QVector normal = ns.front();
        bool pos = false, neg = false;
        for (const auto& x : normal) {
          pos |= x.sign() > 0;
          neg |= x.sign() < 0;
        }
        if (pos && neg) return;
        if (neg)
          for (auto& x : normal) x = -x;
        FacetInequality f{normal, evaluate(normal, gens[pts[0]])};
        for (const auto& g : gens)
          if (!satisfies(f, g)) return;
        Rational scale = f.offset;
        if (scale.is_zero())
          for (const auto& x : f.normal)
            if (!x.is_zero()) {
              scale = x;
              break;
            }
        for (auto& x : f.normal) x /= scale;
        f.offset /= scale;
        found.insert(std::move(f));
      });
    });
  }
  poly.facets.assign(found.begin(), found.end());

  for (const auto& g : gens) {
    std::vector<QVector> normals;
    for (const auto& f : poly.facets)
      if (on_facet(f, g)) normals.push_back(f.normal);
    if (rank_of_rows(normals, n) == n) poly.vertices.push_back(g);
  }

  // Faces: closures of facet intersections, keyed by (vertex ids, rays).
  using Key = std::pair<std::vector<std::size_t>, std::vector<std::size_t>>;
  auto face_key = [&](const std::vector<std::size_t>& facet_set) -> Key {
    Key key;
    for (std::size_t v = 0; v < poly.vertices.size(); ++v) {
      bool on = std::all_of(facet_set.begin(), facet_set.end(), [&](std::size_t id) {
        return on_facet(poly.facets[id], poly.vertices[v]);
      });
      if (on) key.first.push_back(v);
    }
    for (std::size_t i = 0; i < n; ++i) {
      bool flat = std::all_of(facet_set.begin(), facet_set.end(),
                              [&](std::size_t id) { return poly.facets[id].normal[i].is_zero(); });
      if (flat) key.second.push_back(i);
    }
    return key;
  };
  auto containing = [&](const Key& key) {
    std::vector<std::size_t> ids;
    for (std::size_t id = 0; id < poly.facets.size(); ++id) {
      const auto& f = poly.facets[id];
      bool ok = std::all_of(key.first.begin(), key.first.end(),
                            [&](std::size_t v) { return on_facet(f, poly.vertices[v]); }) &&
                std::all_of(key.second.begin(), key.second.end(),
                            [&](std::size_t i) { return f.normal[i].is_zero(); });
      if (ok) ids.push_back(id);
    }
    return ids;
  };

  std::set<Key> seen;
  std::deque<Key> queue;
  for (std::size_t id = 0; id < poly.facets.size(); ++id) {
    Key key = face_key({id});
    if (seen.insert(key).second) queue.push_back(key);
  }
  while (!queue.empty()) {
    Key key = queue.front();
    queue.pop_front();
    auto ids = containing(key);
    for (std::size_t h = 0; h < poly.facets.size(); ++h) {
      if (std::find(ids.begin(), ids.end(), h) != ids.end()) continue;
      auto next_ids = ids;
      next_ids.push_back(h);
      Key next = face_key(next_ids);
      if (next.first.empty()) continue;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }

  for (const auto& key : seen) {
    Face face;
    for (auto v : key.first) face.vertices.push_back(poly.vertices[v]);
    face.rays = key.second;
    face.facet_ids = containing(key);

    std::vector<QVector> dirs;
    for (const auto& v : face.vertices) dirs.push_back(to_q(v - face.vertices.front()));
    for (auto r : face.rays) dirs.push_back(unit(n, r));
    face.dim = static_cast<int>(rank_of_rows(dirs, n));

    for (std::size_t i = 0; i < n && !face.in_coordinate_hyperplane; ++i) {
      if (std::find(face.rays.begin(), face.rays.end(), i) != face.rays.end()) continue;
      face.in_coordinate_hyperplane = std::all_of(
          face.vertices.begin(), face.vertices.end(), [&](const auto& v) { return v[i].is_zero(); });
    }

    if (!face.in_coordinate_hyperplane) {
      face.functional.assign(n, Rational(0));
      for (auto id : face.facet_ids)
        for (std::size_t i = 0; i < n; ++i) face.functional[i] += poly.facets[id].normal[i];
      Rational count(static_cast<std::int64_t>(face.facet_ids.size()));
      for (auto& x : face.functional) x /= count;
    }

    std::vector<QVector> span;
    for (const auto& v : face.vertices) span.push_back(to_q(v));
    for (auto r : face.rays) span.push_back(unit(n, r));
    RowEchelon e = row_reduce(QMatrix::from_rows(span));
    for (std::size_t i = 0; i < e.rank(); ++i) {
      auto row = e.reduced.row(i);
      face.span_basis.emplace_back(row.begin(), row.end());
    }
    poly.faces.push_back(std::move(face));
  }
  std::stable_sort(poly.faces.begin(), poly.faces.end(),
                   [](const Face& a, const Face& b) { return a.dim < b.dim; });
  return poly;
}

QVector face_functional(const Face& face) {
  if (face.in_coordinate_hyperplane)
    throw PreconditionError("face lies in a coordinate hyperplane");
  return face.functional;
}

std::vector<ExponentVector> face_lattice_points(const MonomialIdeal& ideal,
                                                const NewtonPolyhedron& poly, const Face& face) {
  const std::size_t n = ideal.dim();
  Integer top = 0;
  for (const auto& g : ideal.generators())
    for (const auto& x : g) top = std::max(top, x);
  top += Integer(n);

  std::vector<ExponentVector> out;
  ExponentVector u(n, Integer(0));
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      if (ideal.contains_exponent(u) && poly.on_face(face, u)) out.push_back(u);
      return;
    }
    for (Integer x = 0; x <= top; ++x) {
      u[i] = x;
      walk(i + 1);
    }
  };
  walk(0);
  return out;
}

SemigroupPresentation::SemigroupPresentation(const MonomialIdeal& ideal,
                                             const NewtonPolyhedron& poly, const Face& face)
    : functional_(face_functional(face)), group_(ideal.dim()) {
  const std::size_t n = ideal.dim();
  std::vector<ExponentVector> on_face;
  std::vector<ExponentVector> off_face;
  for (const auto& g : ideal.generators())
    (poly.on_face(face, g) ? on_face : off_face).push_back(g);
  if (on_face.empty()) throw std::logic_error("face carries no generator of the ideal");
  anchor_ = on_face.front();
  face_points_ = face_lattice_points(ideal, poly, face);

  auto is_ray = [&](std::size_t i) {
    return std::find(face.rays.begin(), face.rays.end(), i) != face.rays.end();
  };

  std::vector<IntVector> group_gens;
  for (const auto& g : on_face)
    for (const auto& v : on_face) {
      if (g == v) continue;
      generators_.push_back({g - v, Rational(0)});
      group_gens.push_back(g - v);
    }
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n, Integer(0));
    e[i] = 1;
    Rational deg = evaluate(functional_, e);
    if (is_ray(i)) {
      generators_.push_back({e, Rational(0)});
      generators_.push_back({Integer(-1) * e, Rational(0)});
      group_gens.push_back(e);
    } else {
      generators_.push_back({e, deg});
    }
  }
  for (const auto& g : off_face)
    for (const auto& v : on_face) generators_.push_back({g - v, evaluate(functional_, g) - 1});
  group_ = IntLattice(n, group_gens);

  std::set<IntVector> seen;
  for (const auto& gen : generators_) {
    if (gen.degree.is_zero()) continue;
    if (gen.degree.sign() < 0) throw std::logic_error("negative generator degree");
    if (seen.insert(group_.reduce(gen.vector)).second) positive_.push_back(gen);
  }
}

SemigroupPresentation::ClassTable SemigroupPresentation::classes_up_to(
    const Rational& max_degree) const {
  ClassTable table;
  table.bound_ = max_degree;
  if (max_degree.sign() < 0) return table;
  IntVector zero(group_.dim(), Integer(0));
  table.degrees_.emplace(zero, Rational(0));
  std::deque<std::pair<IntVector, Rational>> queue{{zero, Rational(0)}};
  while (!queue.empty()) {
    auto [cls, deg] = queue.front();
    queue.pop_front();
    for (const auto& p : positive_) {
      Rational next_deg = deg + p.degree;
      if (next_deg > max_degree) continue;
      IntVector next = group_.reduce(cls + p.vector);
      if (table.degrees_.emplace(next, next_deg).second) queue.emplace_back(next, next_deg);
    }
  }
  return table;
}

bool SemigroupPresentation::member(const IntVector& w, bool shifted) const {
  IntVector target = shifted ? w - anchor_ : w;
  Rational deg = degree(target);
  if (deg.sign() < 0) return false;
  return classes_up_to(deg).contains(canonical(target));
}

bool SemigroupPresentation::member(const IntVector& w, bool shifted,
                                   const ClassTable& table) const {
  IntVector target = shifted ? w - anchor_ : w;
  Rational deg = degree(target);
  if (deg.sign() < 0) return false;
  if (deg > table.bound()) throw std::logic_error("class table bound too small for query");
  return table.contains(canonical(target));
}

}  // namespace bsroots
