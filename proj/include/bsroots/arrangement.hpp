#pragma once

#include "bsroots/qmatrix.hpp"
#include "bsroots/roots.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bsroots {

using IndexSet = std::vector<std::size_t>;  // sorted, 0-based form indices

/// A flat L of the arrangement: the common zero set of `indices`, which
/// lists every hyperplane containing L.
struct Edge {
  IndexSet indices;
  std::vector<QVector> basis;  // of L itself; empty for the center
  std::size_t codim = 0;
  bool dense = false;

  std::size_t m() const { return indices.size(); }
  bool is_center(std::size_t n) const { return codim == n; }
};

/// Central hyperplane arrangement in Q^n given by linear forms. The forms
/// must be nonzero, pairwise non-proportional (reduced) and span the dual
/// space (essential); InvalidInput otherwise. d <= n is accepted, but every
/// operation that needs d > n checks `degree_exceeds_dim()` and throws
/// PreconditionError.
class Arrangement {
 public:
  Arrangement(std::size_t n, std::vector<QVector> forms,
              std::optional<std::size_t> infinity_index = std::nullopt);

  std::size_t n() const { return n_; }
  std::size_t d() const { return forms_.size(); }
  const std::vector<QVector>& forms() const { return forms_; }
  const QVector& form(std::size_t i) const { return forms_[i]; }
  std::optional<std::size_t> infinity_index() const { return infinity_; }
  bool degree_exceeds_dim() const { return d() > n_; }

  /// Same forms with another deconing hyperplane.
  Arrangement with_infinity(std::optional<std::size_t> index) const;

  /// All edges, sorted by (codim, indices). Includes the hyperplanes and
  /// the center.
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }
  /// Edge id of the flat spanned by `indices` (closure taken).
  std::size_t edge_of(const IndexSet& indices) const;
  /// Id of the edge L ∩ L'.
  std::size_t meet(std::size_t a, std::size_t b) const;
  /// L_a ⊆ L_b.
  bool edge_within(std::size_t a, std::size_t b) const;
  std::size_t center_id() const { return edges_.size() - 1; }

  /// Every hyperplane containing the common zero set of `indices`.
  IndexSet closure(const IndexSet& indices) const;

 private:
  std::size_t n_;
  std::vector<QVector> forms_;
  std::optional<std::size_t> infinity_;
  std::vector<Edge> edges_;
  std::map<IndexSet, std::size_t> by_indices_;
};

/// True iff the vectors form a connected matroid, i.e. admit no split into
/// two nonempty parts whose ranks add up to the total rank. Components are
/// read off the fundamental circuits of a greedy basis.
bool matroid_connected(const std::vector<QVector>& vectors);

const std::vector<Edge>& intersection_lattice(const Arrangement& a);
bool is_dense(const Arrangement& a, const Edge& edge);

/// Strong adjacency of distinct edges: containment either way, or a
/// non-dense intersection.
bool strongly_adjacent(const Arrangement& a, std::size_t e1, std::size_t e2);

struct MLambda {
  std::size_t value = 0;
  std::vector<std::size_t> witness;  // edge ids of one maximum clique
  std::vector<std::size_t> pool;     // DE(D, lambda)
};

/// m(lambda) for lambda of multiplicative order `lambda_order`: the largest
/// set of pairwise strongly adjacent dense edges with lambda_order | m_L.
MLambda m_lambda(const Arrangement& a, unsigned lambda_order);

/// Union over dense L of (1/m_L) Z, cut to (0, 2 - 1/d).
RootSet root_candidates(const Arrangement& a);

struct MultiplicityBound {
  unsigned bound = 0;
  bool exact = false;
  std::string reason;
};

/// Upper bound for the multiplicity of the candidate root `alpha`: n
/// (exact) at alpha = 1; 1 (exact) for non-integral alpha when strongly
/// adjacent dense edges have coprime multiplicities; m(lambda) otherwise.
/// Throws PreconditionError if alpha is not a candidate.
MultiplicityBound multiplicity_bounds(const Arrangement& a, const Rational& alpha);

struct EulerBetti {
  long b0 = 1, b1 = 0, b2 = 0;
  long chi = 0;
  long nu3 = 0;        // projective triple points, at infinity included
  long nu2_prime = 0;  // affine double points
  long nu3_prime = 0;  // affine triple points
};

/// Betti numbers of the affine complement of a rank-3 arrangement with at
/// most triple points. Requires the infinity index. Throws
/// PreconditionError on n != 3, a missing infinity index, or a point of
/// multiplicity > 3; throws std::logic_error if the two Euler
/// characteristic formulas disagree.
EulerBetti euler_betti(const Arrangement& a);

/// min over nonzero edges of codim(L) / m_L.
Rational alpha_prime(const Arrangement& a);
/// min(alpha_prime, n/d).
Rational alpha_min(const Arrangement& a);

/// Every n of the forms are linearly independent.
bool is_generic(const Arrangement& a);

/// Roots of b(-s) for a generic arrangement: j/d for n <= j <= 2d-2,
/// j != d, and 1 with multiplicity n. Throws PreconditionError unless
/// d > n and the arrangement is generic.
RootMultiset generic_bfunction(const Arrangement& a);

/// Roots of the rank-2 arrangement of m concurrent lines: {1} for m <= 2,
/// otherwise {j/m : 2 <= j <= 2m - 2}.
RootSet point_roots(std::size_t m);

struct LowDegreeBFunction {
  long nu3 = 0;
  bool indeterminate = false;
  long r = 0;                        // meaningful when !indeterminate
  std::optional<RootMultiset> roots;
  std::array<RootMultiset, 2> alternatives;  // r = 2d-2 and r = 2d-3
};

/// Product (s+1) prod_{i=2..4} (s+i/3) prod_{j=3..r} (s+j/d) for an
/// indecomposable rank-3 arrangement with d <= 7, points of multiplicity
/// <= 3 and at least one triple point, with r decided from the triple
/// point count. For d = 7 and four triple points both values of r are
/// possible and the result is indeterminate. Throws PreconditionError
/// naming the first failed condition.
LowDegreeBFunction bfunction_n3_low_degree(const Arrangement& a);

/// Local root sets at generic points of nonzero edges (rank 3, points of
/// multiplicity <= 3), keyed by edge id.
std::map<std::size_t, RootSet> local_root_data(const Arrangement& a);
/// Union of point_roots over all nonzero edges (no multiplicity limit).
RootSet local_roots_union(const Arrangement& a);

struct AffineLine {
  Rational a, b, c;  // a x + b y = c
};

/// Cone over an affine line arrangement: forms (a, b, -c) followed by the
/// infinity form (0, 0, 1), which becomes the infinity index. Throws
/// InvalidInput on empty input, a degenerate line or duplicate lines.
Arrangement cone_over(const std::vector<AffineLine>& lines);

struct ArrangementReport {
  std::size_t n = 0, d = 0;
  std::map<std::size_t, std::vector<std::size_t>> edges_by_codim;  // edge ids
  std::vector<std::size_t> dense_edges;
  std::optional<EulerBetti> betti;
  std::optional<Rational> alpha_prime, alpha_min;
  std::optional<RootSet> candidates;
  bool generic = false;
  std::optional<LowDegreeBFunction> low_degree;
  std::optional<RootMultiset> bfunction;
  std::string bfunction_method;
  bool indeterminate = false;
  std::vector<std::string> notes;  // why a section is absent
};

/// Everything computable for the arrangement; sections whose
/// preconditions fail are left empty with a note.
ArrangementReport arrangement_report(const Arrangement& a);

}  // namespace bsroots
