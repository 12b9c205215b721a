#include "bsroots/aomoto.hpp"

#include "bsroots/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bsroots {

namespace {

using Monomial = std::pair<unsigned, unsigned>;
using BiPoly = std::map<Monomial, Rational>;

struct Linear {
  Rational c, x, y;  // c + x X + y Y
};

BiPoly times(const BiPoly& p, const Linear& l) {
  BiPoly out;
  for (const auto& [mono, coef] : p) {
    auto [i, j] = mono;
    if (!l.c.is_zero()) out[{i, j}] += coef * l.c;
    if (!l.x.is_zero()) out[{i + 1, j}] += coef * l.x;
    if (!l.y.is_zero()) out[{i, j + 1}] += coef * l.y;
  }
  return out;
}

std::string show(const IndexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

void require_rank3_decone(const Arrangement& a) {
  if (a.n() != 3) throw PreconditionError("requires n == 3");
  if (!a.infinity_index()) throw PreconditionError("requires an infinity index");
}

IndexSet affine_indices(const Arrangement& a) {
  IndexSet out;
  for (std::size_t i = 0; i < a.d(); ++i)
    if (i != *a.infinity_index()) out.push_back(i);
  return out;
}

// Affine chart {h = 1} of the infinity form h with coordinates (X, Y).
std::vector<Linear> decone(const Arrangement& a) {
  const QVector& h = a.form(*a.infinity_index());
  auto kernel = nullspace(QMatrix::from_rows({h}));
  std::size_t j = 0;
  while (h[j].is_zero()) ++j;
  QVector p(3, Rational(0));
  p[j] = Rational(1) / h[j];
  std::vector<Linear> out(a.d());
  for (std::size_t i = 0; i < a.d(); ++i) {
    const QVector& f = a.form(i);
    out[i] = {dot(f, p), dot(f, kernel[0]), dot(f, kernel[1])};
    if (i != *a.infinity_index() && out[i].x.is_zero() && out[i].y.is_zero())
      throw PreconditionError("form " + std::to_string(i) + " is constant on the affine chart");
  }
  return out;
}

}  // namespace

ResidueAssignment residue_assignment(const Arrangement& a, long k, IndexSet I) {
  if (!a.infinity_index()) throw PreconditionError("requires an infinity index");
  const long d = static_cast<long>(a.d());
  if (k < 1 || k > d) throw InvalidInput("k must lie in 1..d");
  std::sort(I.begin(), I.end());
  if (std::adjacent_find(I.begin(), I.end()) != I.end())
    throw InvalidInput("I has repeated indices");
  for (auto i : I) {
    if (i >= a.d()) throw InvalidInput("I index out of range");
    if (i == *a.infinity_index()) throw InvalidInput("I contains the infinity index");
  }
  if (static_cast<long>(I.size()) != k - 1) throw InvalidInput("I must have k - 1 elements");

  ResidueAssignment r;
  r.alpha = Rational(Integer(k), Integer(d));
  r.k = k;
  r.residues.assign(a.d(), -r.alpha);
  r.residues[*a.infinity_index()] = 1 - r.alpha;
  for (auto i : I) r.residues[i] = 1 - r.alpha;
  r.I = std::move(I);
  Rational total = 0;
  for (const auto& x : r.residues) total += x;
  if (!total.is_zero()) throw std::logic_error("residues do not sum to zero");
  return r;
}

AomotoComplex build_aomoto(const Arrangement& a, const std::vector<Rational>& residues) {
  require_rank3_decone(a);
  if (residues.size() != a.d()) throw InvalidInput("one residue per form required");
  const auto g = decone(a);

  AomotoComplex c;
  c.affine = affine_indices(a);
  const std::size_t m = c.affine.size();

  // omega_i ^ omega_j * prod g_l = det(i, j) prod_{l != i, j} g_l.
  std::vector<FormPair> pairs;
  std::vector<BiPoly> polys;
  std::map<Monomial, std::size_t> monomials;
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = s + 1; t < m; ++t) {
      std::size_t i = c.affine[s], j = c.affine[t];
      BiPoly p{{{0, 0}, g[i].x * g[j].y - g[j].x * g[i].y}};
      for (auto l : c.affine)
        if (l != i && l != j) p = times(p, g[l]);
      for (const auto& [mono, coef] : p)
        if (!coef.is_zero()) monomials.emplace(mono, 0);
      pairs.emplace_back(i, j);
      polys.push_back(std::move(p));
    }
  std::size_t next = 0;
  for (auto& [mono, idx] : monomials) idx = next++;

  QMatrix w(monomials.size(), pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col)
    for (const auto& [mono, coef] : polys[col])
      if (!coef.is_zero()) w(monomials.at(mono), col) = coef;
  RowEchelon ech = row_reduce(w);
  const std::size_t dim2 = ech.rank();
  for (auto p : ech.pivots) c.a2_basis.push_back(pairs[p]);
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    QVector coords(dim2);
    for (std::size_t r = 0; r < dim2; ++r) coords[r] = ech.reduced(r, col);
    c.wedge.emplace(pairs[col], std::move(coords));
  }

  c.d0 = QMatrix(m, 1);
  for (std::size_t s = 0; s < m; ++s) c.d0(s, 0) = residues[c.affine[s]];
  c.d1 = QMatrix(dim2, m);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t) {
      if (s == t) continue;
      const Rational& alpha = residues[c.affine[t]];
      if (alpha.is_zero()) continue;
      // omega_t ^ omega_s, stored with the smaller index first.
      const auto& v = c.wedge.at({c.affine[std::min(s, t)], c.affine[std::max(s, t)]});
      const Rational sign = t < s ? Rational(1) : Rational(-1);
      for (std::size_t r = 0; r < dim2; ++r) c.d1(r, s) += sign * alpha * v[r];
    }

  c.dims = {1, m, dim2};
  c.rank_d0 = c.d0.is_zero() ? 0 : 1;
  c.rank_d1 = matrix_rank(c.d1);
  c.h = {1 - static_cast<long>(c.rank_d0),
         static_cast<long>(m) - static_cast<long>(c.rank_d0) - static_cast<long>(c.rank_d1),
         static_cast<long>(dim2) - static_cast<long>(c.rank_d1)};
  return c;
}

AomotoComplex build_aomoto(const Arrangement& a, const ResidueAssignment& r) {
  return build_aomoto(a, r.residues);
}

NonresonanceResult nonresonance_check(const Arrangement& a, const std::vector<Rational>& residues) {
  if (residues.size() != a.d()) throw InvalidInput("one residue per form required");
  NonresonanceResult out;
  for (std::size_t id = 0; id < a.edges().size(); ++id) {
    const Edge& e = a.edge(id);
    if (e.is_center(a.n()) || !e.dense) continue;
    Rational sum = 0;
    for (auto i : e.indices) sum += residues[i];
    if (sum.is_integer() && sum.sign() > 0) out.violating_edges.push_back(id);
  }
  out.ok = out.violating_edges.empty();
  return out;
}

NonresonanceResult nonresonance_check(const Arrangement& a, const ResidueAssignment& r) {
  return nonresonance_check(a, r.residues);
}

VSubspace v_subspace(const AomotoComplex& c, const IndexSet& I) {
  std::vector<QVector> cols;
  for (std::size_t s = 0; s < I.size(); ++s)
    for (std::size_t t = s + 1; t < I.size(); ++t) {
      auto it = c.wedge.find({std::min(I[s], I[t]), std::max(I[s], I[t])});
      if (it == c.wedge.end()) throw InvalidInput("I contains a non-affine index");
      cols.push_back(it->second);
    }
  QMatrix m(c.dims[2], c.d1.cols() + cols.size());
  for (std::size_t r = 0; r < c.dims[2]; ++r) {
    for (std::size_t j = 0; j < c.d1.cols(); ++j) m(r, j) = c.d1(r, j);
    for (std::size_t j = 0; j < cols.size(); ++j) m(r, c.d1.cols() + j) = cols[j][r];
  }
  VSubspace v;
  v.dim = matrix_rank(m) - c.rank_d1;
  v.nonzero = v.dim > 0;
  v.full = static_cast<long>(v.dim) == c.h[2];
  return v;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::In: return "IN";
    case Verdict::NotIn: return "NOT_IN";
    case Verdict::Unknown: break;
  }
  return "UNKNOWN";
}

bool Certification::fired_rule(char rule, bool plus_one) const {
  return std::any_of(fired.begin(), fired.end(), [&](const RuleFiring& f) {
    return f.rule == rule && f.plus_one == plus_one;
  });
}

namespace {

class Certifier {
 public:
  explicit Certifier(Certification& c) : c_(c) {}

  void fire(char rule, bool plus_one, Verdict v, std::string detail) {
    Verdict& slot = plus_one ? c_.alpha_plus_one_verdict : c_.alpha_verdict;
    if (slot != Verdict::Unknown && slot != v)
      throw std::logic_error(std::string("conflicting verdicts at rule (") + rule + ")");
    slot = v;
    if (!c_.fired_rule(rule, plus_one)) c_.fired.push_back({rule, plus_one, v, std::move(detail)});
  }

 private:
  Certification& c_;
};

bool outside_shifted(const Rational& alpha, const RootSet& local) {
  return std::none_of(local.begin(), local.end(),
                      [&](const Rational& r) { return (alpha - r).is_integer(); });
}

}  // namespace

Certification certify_root(const Arrangement& a, long k, const CertifyOptions& options) {
  require_rank3_decone(a);
  if (a.d() <= 3) throw PreconditionError("requires d > n");
  const long d = static_cast<long>(a.d());
  if (k < 1 || k > d) throw InvalidInput("k must lie in 1..d");
  if (!a.edge(a.center_id()).dense) throw PreconditionError("arrangement is decomposable");

  Certification c;
  Certifier cert(c);
  c.k = k;
  c.alpha = Rational(Integer(k), Integer(d));
  c.alpha_prime = alpha_prime(a);
  c.binom = binomial(static_cast<unsigned>(k - 1), 2);
  c.chi = build_aomoto(a, std::vector<Rational>(a.d(), Rational(0))).euler();
  const bool below = c.alpha < c.alpha_prime;

  if (k == d - 1 || k == d) {
    cert.fire('a', false, Verdict::In, "k = d - 1 or k = d");
    cert.fire('a', true, Verdict::NotIn, "k = d - 1 or k = d");
  }
  if (below) {
    if (k >= 3) {
      cert.fire('b', false, Verdict::In, "alpha < alpha' and k >= n");
      c.notes.push_back("criterion (b) read as k >= n; the reading k >= d would exclude this alpha");
    } else
      c.notes.push_back("alpha < alpha' with k < n: criterion (b) gives no exclusion here");
  }
  if (below && Integer(c.chi) == c.binom && outside_shifted(c.alpha, local_roots_union(a)))
    cert.fire('d', true, Verdict::NotIn, "alpha < alpha', alpha not in R' + Z, binom(k-1,2) = chi");

  std::vector<IndexSet> candidates;
  const IndexSet affine = affine_indices(a);
  if (options.I) {
    candidates.push_back(residue_assignment(a, k, *options.I).I);
  } else if (options.search) {
    Integer count = binomial(static_cast<unsigned>(affine.size()), static_cast<unsigned>(k - 1));
    if (count > Integer(options.search_cap)) {
      c.notes.push_back("search skipped: " + count.str() + " residue choices exceed the cap");
    } else {
      const std::size_t r = static_cast<std::size_t>(k - 1);
      std::vector<std::size_t> idx(r);
      for (std::size_t i = 0; i < r; ++i) idx[i] = i;
      while (true) {
        IndexSet I;
        for (auto i : idx) I.push_back(affine[i]);
        candidates.push_back(std::move(I));
        std::size_t i = r;
        while (i > 0 && idx[i - 1] == affine.size() - r + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  } else {
    c.notes.push_back("no residue choice given: criteria (c), (e), (f) not evaluated");
  }

  for (const auto& I : candidates) {
    auto assignment = residue_assignment(a, k, I);
    if (!nonresonance_check(a, assignment).ok) {
      ++c.resonant_skipped;
      continue;
    }
    auto complex = build_aomoto(a, assignment);
    ResidueEvidence ev{I, complex.h, v_subspace(complex, I)};
    if (c.h && *c.h != ev.h) throw std::logic_error("cohomology differs between nonresonant choices");
    c.h = ev.h;
    const std::string tag = "I = " + show(I);
    if (Integer(ev.h[2]) > c.binom)
      cert.fire('c', true, Verdict::In, "binom(k-1,2) < dim H^2, " + tag);
    if (!below && ev.v.nonzero) cert.fire('e', false, Verdict::In, "V(I) != 0, " + tag);
    if (!below && ev.v.full) cert.fire('f', true, Verdict::NotIn, "V(I) = H^2, " + tag);
    c.evidence.push_back(std::move(ev));
  }
  if (!candidates.empty() && c.evidence.empty())
    c.notes.push_back("every residue choice examined is resonant");
  return c;
}

}  // namespace bsroots
