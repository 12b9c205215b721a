#include "bsroots/monomial.hpp"

#include "bsroots/errors.hpp"

#include <boost/multiprecision/integer.hpp>

#include <functional>
#include <set>

namespace bsroots {

namespace {

Integer abs_int(const Integer& x) { return x.sign() < 0 ? Integer(-x) : x; }

FaceWindow compact_window(const MonomialIdeal& ideal, const NewtonPolyhedron& poly,
                          const Face& face) {
  FaceWindow fw;
  fw.face = face;
  fw.functional = face_functional(face);
  fw.v1 = face.vertices.front();
  fw.v2 = face.vertices.back();
  if (fw.v1[0] > fw.v2[0]) std::swap(fw.v1, fw.v2);

  // Lattice points of the segment are v1 + t * step, 0 <= t <= steps.
  IntVector diff = fw.v2 - fw.v1;
  Integer steps = boost::multiprecision::gcd(abs_int(diff[0]), abs_int(diff[1]));
  IntVector step{diff[0] / steps, diff[1] / steps};
  Integer index = 0;
  for (Integer t = 1; t <= steps; ++t)
    if (ideal.contains_exponent(fw.v1 + t * step))
      index = boost::multiprecision::gcd(index, t);
  fw.v3 = fw.v1 + index * step;

  SemigroupPresentation sg(ideal, poly, face);
  const IntVector e{1, 1};
  Rational top(-1);
  for (Integer i = 0; i < fw.v3[0]; ++i)
    for (Integer j = 0; j < fw.v1[1]; ++j) {
      fw.window.push_back({i, j});
      Rational d = sg.degree(fw.window.back() - sg.anchor());
      if (d > top) top = d;
    }
  auto table = sg.classes_up_to(top);
  for (const auto& u : fw.window) {
    Rational value = evaluate(fw.functional, u + e);
    if (sg.member(u, true, table)) {
      fw.shifted.push_back(u);
      fw.roots.insert(value - 1);
    } else {
      fw.unshifted.push_back(u);
      fw.roots.insert(value);
    }
  }
  return fw;
}

AxisFace axis_face(const Face& face) {
  AxisFace af;
  af.face = face;
  af.axis = face.rays.front() == 0 ? 1 : 0;
  af.level = face.vertices.front()[af.axis];
  for (Integer i = 1; i <= af.level; ++i) af.roots.insert(Rational(i, af.level));
  return af;
}

}  // namespace

Dim2Analysis analyze_dim2(const MonomialIdeal& ideal) {
  if (ideal.dim() != 2) throw PreconditionError("two-variable algorithm needs n == 2");
  Dim2Analysis out;
  out.polyhedron = build_polyhedron(ideal);
  for (const auto& face : out.polyhedron.faces) {
    if (face.dim != 1 || face.in_coordinate_hyperplane) continue;
    if (face.compact()) {
      out.compact_faces.push_back(compact_window(ideal, out.polyhedron, face));
      out.roots.merge(out.compact_faces.back().roots);
    } else {
      out.axis_faces.push_back(axis_face(face));
      out.roots.merge(out.axis_faces.back().roots);
    }
  }
  return out;
}

RootSet roots_dim2(const MonomialIdeal& ideal) { return analyze_dim2(ideal).roots; }

TruncatedRoots roots_general(const MonomialIdeal& ideal, const Rational& degree_bound) {
  if (degree_bound.sign() <= 0) throw PreconditionError("degree bound must be positive");
  const std::size_t n = ideal.dim();
  NewtonPolyhedron poly = build_polyhedron(ideal);
  TruncatedRoots out;
  out.bound = degree_bound;
  const IntVector e(n, Integer(1));
  for (const auto& face : poly.faces) {
    if (face.in_coordinate_hyperplane) continue;
    SemigroupPresentation sg(ideal, poly, face);
    Rational base = sg.degree(e);
    Rational room = degree_bound - base;
    if (room.sign() < 0) continue;
    auto table = sg.classes_up_to(room);
    for (const auto& [cls, deg] : table.classes()) {
      if (!face.span_contains(e + cls)) continue;
      if (sg.member(cls, true, table)) continue;
      out.roots.insert(base + deg);
    }
  }
  return out;
}

TruncatedRoots roots_general(const MonomialIdeal& ideal) {
  return roots_general(ideal, Rational(static_cast<std::int64_t>(ideal.dim())));
}

RootSet diagonal_roots(const std::vector<unsigned>& exponents) {
  RootSet out;
  std::function<void(std::size_t, Rational)> walk = [&](std::size_t i, Rational acc) {
    if (i == exponents.size()) {
      out.insert(acc);
      return;
    }
    const unsigned a = exponents[i];
    for (unsigned p = 1; p <= a; ++p) walk(i + 1, acc + Rational(Integer(p), Integer(a)));
  };
  if (!exponents.empty()) walk(0, Rational(0));
  return out;
}

Rational lct(const MonomialIdeal& ideal) {
  if (ideal.dim() == 2) return roots_dim2(ideal).min();
  return roots_general(ideal).roots.min();
}

FractionalPolynomial newton_exponents_dim2(const MonomialIdeal& support) {
  if (support.dim() != 2) throw PreconditionError("Newton-polygon exponents need n == 2");
  NewtonPolyhedron poly = build_polyhedron(support);
  std::set<Rational> low;
  bool any = false;
  for (const auto& face : poly.faces) {
    if (face.dim != 1 || !face.compact()) continue;
    any = true;
    const auto& L = face.functional;
    const auto& a = face.vertices.front();
    const auto& b = face.vertices.back();
    // a is upper-left, b lower-right; u is in cone(a, b) iff
    // det(b, u) >= 0 and det(u, a) >= 0.
    Integer top = std::max({a[0], a[1], b[0], b[1]});
    for (Integer x = 1; x <= top; ++x)
      for (Integer y = 1; y <= top; ++y) {
        if (b[0] * y - b[1] * x < 0 || x * a[1] - y * a[0] < 0) continue;
        Rational v = evaluate(L, IntVector{x, y});
        if (v <= 1) low.insert(v);
      }
  }
  if (!any) throw PreconditionError("Newton polygon has no compact faces");
  FractionalPolynomial out;
  for (const auto& v : low) {
    out += FractionalPolynomial::monomial(v);
    if (v < 1) out += FractionalPolynomial::monomial(Rational(2) - v);
  }
  return out;
}

}  // namespace bsroots
