#pragma once

#include "bsroots/int_lattice.hpp"
#include "bsroots/qmatrix.hpp"
#include "bsroots/rational.hpp"

#include <map>
#include <vector>

namespace bsroots {

/// Exponent vector of a monomial x^u (nonnegative coordinates).
using ExponentVector = IntVector;

/// Monomial ideal given by a minimal set of exponent vectors.
class MonomialIdeal {
 public:
  /// Normalizes `generators`: drops duplicates and any generator dominating
  /// another one coordinatewise, then sorts lexicographically. Throws
  /// InvalidInput for n == 0, an empty generator list, a wrong-length or
  /// negative exponent, or the zero exponent (unit ideal).
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators);

  std::size_t dim() const { return n_; }
  const std::vector<ExponentVector>& generators() const { return generators_; }

  /// u lies in Gamma_a, i.e. x^u belongs to the ideal.
  bool contains_exponent(const ExponentVector& u) const;

 private:
  std::size_t n_;
  std::vector<ExponentVector> generators_;
};

/// Supporting inequality normal . u >= offset of the Newton polyhedron.
/// Normals are coordinatewise nonnegative; when offset > 0 the pair is scaled
/// so that offset == 1.
struct FacetInequality {
  QVector normal;
  Rational offset;
  friend bool operator==(const FacetInequality&, const FacetInequality&) = default;
  friend auto operator<=>(const FacetInequality&, const FacetInequality&) = default;
};

/// Nonempty proper face of an (unbounded) Newton polyhedron.
struct Face {
  int dim = 0;
  std::vector<ExponentVector> vertices;   // sorted lexicographically
  std::vector<std::size_t> rays;          // coordinate directions e_i of the recession cone
  std::vector<std::size_t> facet_ids;     // facets containing the face
  bool in_coordinate_hyperplane = false;
  /// L_Q: identically 1 on the face; empty when in_coordinate_hyperplane.
  QVector functional;
  /// Basis of V_Q, the linear span of the face.
  std::vector<QVector> span_basis;

  bool compact() const { return rays.empty(); }
  /// True when u lies in the linear span V_Q.
  bool span_contains(const IntVector& u) const;
};

struct NewtonPolyhedron {
  std::size_t n = 0;
  std::vector<ExponentVector> vertices;
  std::vector<FacetInequality> facets;
  std::vector<Face> faces;  // ordered by dimension, then vertex set

  /// Point satisfies every facet inequality.
  bool contains(const IntVector& u) const;
  /// Point lies on face `f`.
  bool on_face(const Face& f, const IntVector& u) const;
};

/// Builds conv(generators) + R>=0^n with its complete face lattice.
/// Throws PreconditionError("unsupported dimension") for n > 3.
NewtonPolyhedron build_polyhedron(const MonomialIdeal& ideal);

/// L_Q for a face not contained in a coordinate hyperplane. For faces of
/// dimension < n-1 the returned extension is the average of the normalized
/// functionals of all facets containing the face; only its restriction to
/// V_Q is canonical. Throws PreconditionError otherwise.
QVector face_functional(const Face& face);

Rational evaluate(const QVector& functional, const IntVector& u);

/// Lattice points of the face lying in Gamma_a, restricted to the box
/// [0, max generator coordinate + n]^n.
std::vector<ExponentVector> face_lattice_points(const MonomialIdeal& ideal,
                                                const NewtonPolyhedron& poly, const Face& face);

/// Presentation of the semigroup M_Q (generated by u - v, u in Gamma_a and
/// v in Gamma_a on Q) for a face Q not in a coordinate hyperplane.
///
/// The degree-zero part is the group G_Q; membership is decided in
/// Z^n / G_Q by a degree-bounded closure over the positive-degree
/// generators.
class SemigroupPresentation {
 public:
  struct Generator {
    IntVector vector;
    Rational degree;
  };

  /// Classes of M_Q modulo G_Q up to a degree bound, keyed by canonical
  /// representative.
  class ClassTable {
   public:
    bool contains(const IntVector& canonical) const { return degrees_.count(canonical) != 0; }
    const std::map<IntVector, Rational>& classes() const { return degrees_; }
    const Rational& bound() const { return bound_; }

   private:
    friend class SemigroupPresentation;
    Rational bound_;
    std::map<IntVector, Rational> degrees_;
  };

  SemigroupPresentation(const MonomialIdeal& ideal, const NewtonPolyhedron& poly,
                        const Face& face);

  const QVector& functional() const { return functional_; }
  /// All generators u - v (u a minimal generator or a unit vector), with
  /// L_Q degrees; degree 0 exactly for the group part.
  const std::vector<Generator>& generators() const { return generators_; }
  /// Positive-degree generators, one per class modulo G_Q.
  const std::vector<Generator>& positive_generators() const { return positive_; }
  const IntLattice& group() const { return group_; }
  const ExponentVector& anchor() const { return anchor_; }
  /// Gamma_a on the face, truncated to the lattice-point window.
  const std::vector<ExponentVector>& face_points() const { return face_points_; }

  Rational degree(const IntVector& w) const { return evaluate(functional_, w); }
  IntVector canonical(const IntVector& w) const { return group_.reduce(w); }

  ClassTable classes_up_to(const Rational& max_degree) const;

  /// w in M_Q (shifted == false) or w in M'_Q = anchor + M_Q (shifted == true).
  bool member(const IntVector& w, bool shifted) const;
  /// Same test against a precomputed table whose bound covers deg(w).
  bool member(const IntVector& w, bool shifted, const ClassTable& table) const;

 private:
  QVector functional_;
  std::vector<Generator> generators_;
  std::vector<Generator> positive_;
  IntLattice group_;
  ExponentVector anchor_;
  std::vector<ExponentVector> face_points_;
};

inline SemigroupPresentation semigroup_data(const MonomialIdeal& ideal,
                                            const NewtonPolyhedron& poly, const Face& face) {
  return SemigroupPresentation(ideal, poly, face);
}

}  // namespace bsroots
