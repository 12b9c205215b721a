#pragma once

#include "bsroots/arrangement.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bsroots {

/// Residues for alpha = k/d: 1 - alpha on I and on the infinity form,
/// -alpha elsewhere. They sum to zero.
struct ResidueAssignment {
  Rational alpha;
  long k = 0;
  IndexSet I;
  std::vector<Rational> residues;  // one per form, in form order
};

/// Throws PreconditionError unless the arrangement has an infinity index,
/// and InvalidInput unless 1 <= k <= d and I is a set of k - 1 non-infinity
/// form indices.
ResidueAssignment residue_assignment(const Arrangement& a, long k, IndexSet I);

using FormPair = std::pair<std::size_t, std::size_t>;  // i < j, form indices

/// Aomoto complex A^0 -> A^1 -> A^2 of a rank-3 arrangement deconed along
/// its infinity form. A^1 has basis omega_i = dg_i/g_i over the affine
/// forms; A^2 is realized inside polynomials of degree d - 3 by clearing
/// the denominators prod g_l, with basis `a2_basis`.
struct AomotoComplex {
  IndexSet affine;                   // non-infinity form indices, A^1 basis order
  std::vector<FormPair> a2_basis;
  std::map<FormPair, QVector> wedge;  // omega_i ^ omega_j in a2_basis coordinates
  QMatrix d0;                         // |affine| x 1
  QMatrix d1;                         // dim A^2 x |affine|
  std::array<std::size_t, 3> dims{};
  std::size_t rank_d0 = 0, rank_d1 = 0;
  std::array<long, 3> h{};            // cohomology dimensions

  long euler() const { return h[0] - h[1] + h[2]; }
};

/// Builds the complex for omega = sum_i residues[i] omega_i (the infinity
/// residue is ignored). Throws PreconditionError unless n == 3 and the
/// infinity index is set, and if some affine form becomes constant.
AomotoComplex build_aomoto(const Arrangement& a, const std::vector<Rational>& residues);
AomotoComplex build_aomoto(const Arrangement& a, const ResidueAssignment& r);

struct NonresonanceResult {
  bool ok = true;
  std::vector<std::size_t> violating_edges;
};

/// No dense edge other than the center has a residue sum in {1, 2, ...}.
NonresonanceResult nonresonance_check(const Arrangement& a, const std::vector<Rational>& residues);
NonresonanceResult nonresonance_check(const Arrangement& a, const ResidueAssignment& r);

struct VSubspace {
  std::size_t dim = 0;
  bool nonzero = false;
  bool full = false;
};

/// Image in H^2 of the wedges omega_i ^ omega_j with i, j in I.
VSubspace v_subspace(const AomotoComplex& c, const IndexSet& I);

enum class Verdict { Unknown, In, NotIn };
std::string to_string(Verdict v);

struct RuleFiring {
  char rule = 'a';
  bool plus_one = false;  // the verdict concerns alpha + 1
  Verdict verdict = Verdict::Unknown;
  std::string detail;
};

struct ResidueEvidence {
  IndexSet I;
  std::array<long, 3> h{};
  VSubspace v;
};

struct Certification {
  Rational alpha;
  long k = 0;
  Verdict alpha_verdict = Verdict::Unknown;
  Verdict alpha_plus_one_verdict = Verdict::Unknown;
  std::vector<RuleFiring> fired;

  Rational alpha_prime;
  long chi = 0;
  Integer binom;                           // binom(k-1, 2)
  std::optional<std::array<long, 3>> h;    // from a nonresonant assignment
  std::vector<ResidueEvidence> evidence;   // every nonresonant I examined
  std::size_t resonant_skipped = 0;
  std::vector<std::string> notes;

  bool fired_rule(char rule, bool plus_one) const;
};

struct CertifyOptions {
  std::optional<IndexSet> I;  // 0-based form indices
  bool search = false;
  std::size_t search_cap = 5000;
};

/// Decides alpha = k/d and alpha + 1 where the six membership criteria
/// allow, leaving the rest Unknown. Criterion (b) is applied as "k >= n
/// implies alpha is a root" and never to exclude. Throws PreconditionError
/// unless n == 3, d > 3, the arrangement is indecomposable and the infinity
/// index is set; InvalidInput for k
/// outside 1..d or a malformed I; std::logic_error if two criteria
/// contradict each other.
Certification certify_root(const Arrangement& a, long k, const CertifyOptions& options = {});

}  // namespace bsroots
