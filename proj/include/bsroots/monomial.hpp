#pragma once

#include "bsroots/frac_poly.hpp"
#include "bsroots/newton.hpp"
#include "bsroots/roots.hpp"

#include <vector>

namespace bsroots {

/// Lattice window of a compact edge Q of a two-dimensional Newton polygon.
/// v1, v2 are the endpoints (v1 has the smaller first coordinate); v3 is the
/// point of Q with v3 - v1 generating the group of differences of Gamma_a on
/// Q. The window is S = {(i, j) : i < v3_1, j < v1_2}, split into `shifted`
/// (points of M'_Q, contributing L_Q(u + e) - 1) and `unshifted`.
struct FaceWindow {
  Face face;
  QVector functional;
  ExponentVector v1, v2, v3;
  std::vector<ExponentVector> window;
  std::vector<ExponentVector> shifted;
  std::vector<ExponentVector> unshifted;
  RootSet roots;
};

struct AxisFace {
  Face face;
  std::size_t axis = 0;   // the face lies in {u_axis = level}
  Integer level;
  RootSet roots;          // {i / level : 1 <= i <= level}
};

struct Dim2Analysis {
  NewtonPolyhedron polyhedron;
  std::vector<FaceWindow> compact_faces;
  std::vector<AxisFace> axis_faces;
  RootSet roots;
};

/// Exact root set of b_a for a monomial ideal in two variables, face by face.
/// Throws PreconditionError unless n == 2.
Dim2Analysis analyze_dim2(const MonomialIdeal& ideal);
RootSet roots_dim2(const MonomialIdeal& ideal);

struct TruncatedRoots {
  RootSet roots;         // every root <= bound
  Rational bound;
  bool truncated = true;
};

/// Roots of b_a up to `degree_bound` for n <= 3, by enumerating
/// (e + (M_Q \ M'_Q)) on V_Q over every face Q not in a coordinate
/// hyperplane. Throws PreconditionError when degree_bound <= 0.
TruncatedRoots roots_general(const MonomialIdeal& ideal, const Rational& degree_bound);
/// Same with the default bound n.
TruncatedRoots roots_general(const MonomialIdeal& ideal);

/// {sum_i p_i / a_i : 1 <= p_i <= a_i} for the ideal (x_1^a_1, ..., x_n^a_n).
RootSet diagonal_roots(const std::vector<unsigned>& exponents);

/// Minimal root (log canonical threshold). Uses roots_dim2 for n == 2 and
/// roots_general with bound n otherwise.
Rational lct(const MonomialIdeal& ideal);

/// Exponents of a nondegenerate plane curve germ read off its Newton polygon:
/// values L_Q(u) for positive lattice points u under each compact edge, then
/// completed by the symmetry a -> 2 - a. Coefficients are 1 (indicator).
/// Nondegeneracy is assumed, not checked. Throws PreconditionError unless
/// n == 2 and the polygon has a compact edge.
FractionalPolynomial newton_exponents_dim2(const MonomialIdeal& support);

}  // namespace bsroots
