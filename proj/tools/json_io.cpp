#include "json_io.hpp"

#include "bsroots/errors.hpp"

namespace bsroots::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_array()) throw InvalidInput(std::string("field '") + key + "' must be an array");
  return v;
}

std::int64_t integer(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInput(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::size_t positive_size(const Json& j, const char* what) {
  auto v = integer(j, what);
  if (v <= 0) throw InvalidInput(std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

void reject_unknown(const Json& j, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InvalidInput("expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw InvalidInput("unknown field '" + key + "'");
  }
}

Json index_set(const IndexSet& s, std::size_t offset) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + offset);
  return out;
}

Json optional_rational(const std::optional<Rational>& r) {
  return r ? to_json(*r) : Json(nullptr);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InvalidInput("expected a rational as \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const DivisionByZero&) {
    throw InvalidInput("zero denominator in '" + j.get<std::string>() + "'");
  }
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RootSet& s) {
  Json out = Json::array();
  for (const auto& r : s) out.push_back(r.str());
  return out;
}

Json to_json(const RootMultiset& m) {
  Json out = Json::array();
  for (const auto& [r, mult] : m) out.push_back(Json::array({r.str(), mult}));
  return out;
}

Json to_json(const FractionalPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(Json::array({e.str(), c.str()}));
  return out;
}

MonomialIdeal ideal_from_json(const Json& j) {
  reject_unknown(j, {"n", "generators"});
  const std::size_t n = positive_size(field(j, "n"), "n");
  std::vector<ExponentVector> gens;
  for (const auto& g : array_field(j, "generators")) {
    if (!g.is_array()) throw InvalidInput("each generator must be an array of integers");
    ExponentVector u;
    for (const auto& x : g) u.emplace_back(integer(x, "exponent"));
    gens.push_back(std::move(u));
  }
  return MonomialIdeal(n, std::move(gens));
}

Json to_json(const MonomialIdeal& ideal) {
  Json gens = Json::array();
  for (const auto& g : ideal.generators()) {
    Json row = Json::array();
    for (const auto& x : g) row.push_back(static_cast<std::int64_t>(x));
    gens.push_back(std::move(row));
  }
  return Json{{"n", ideal.dim()}, {"generators", std::move(gens)}};
}

std::vector<AffineLine> affine_lines_from_json(const Json& j) {
  reject_unknown(j, {"affine_lines"});
  std::vector<AffineLine> lines;
  for (const auto& l : array_field(j, "affine_lines")) {
    if (!l.is_array() || l.size() != 3) throw InvalidInput("each affine line must be [a, b, c]");
    lines.push_back({rational_from_json(l[0]), rational_from_json(l[1]), rational_from_json(l[2])});
  }
  return lines;
}

Arrangement arrangement_from_json(const Json& j, std::optional<std::size_t> infinity) {
  if (j.is_object() && j.contains("affine_lines")) {
    Arrangement a = cone_over(affine_lines_from_json(j));
    if (infinity) {
      if (*infinity >= a.d()) throw InvalidInput("infinity index out of range");
      a = a.with_infinity(infinity);
    }
    return a;
  }
  reject_unknown(j, {"n", "forms", "infinity_index"});
  const std::size_t n = positive_size(field(j, "n"), "n");
  std::vector<QVector> forms;
  for (const auto& f : array_field(j, "forms")) {
    if (!f.is_array()) throw InvalidInput("each form must be an array");
    QVector row;
    for (const auto& x : f) row.push_back(rational_from_json(x));
    forms.push_back(std::move(row));
  }
  if (!infinity && j.contains("infinity_index") && !j["infinity_index"].is_null()) {
    auto v = integer(j["infinity_index"], "infinity_index");
    if (v < 0) throw InvalidInput("infinity_index must be nonnegative");
    infinity = static_cast<std::size_t>(v);
  }
  return Arrangement(n, std::move(forms), infinity);
}

Json to_json(const Arrangement& a) {
  Json forms = Json::array();
  for (const auto& f : a.forms()) {
    Json row = Json::array();
    for (const auto& x : f) row.push_back(x.str());
    forms.push_back(std::move(row));
  }
  Json out{{"n", a.n()}, {"forms", std::move(forms)}};
  out["infinity_index"] = a.infinity_index() ? Json(*a.infinity_index()) : Json(nullptr);
  return out;
}

Json to_json(const ArrangementReport& r, const Arrangement& a) {
  Json out{{"n", r.n}, {"d", r.d}};
  out["infinity_index"] = a.infinity_index() ? Json(*a.infinity_index()) : Json(nullptr);
  Json edges = Json::array();
  for (const auto& [codim, ids] : r.edges_by_codim)
    for (auto id : ids) {
      const Edge& e = a.edge(id);
      edges.push_back(
          Json{{"indices", index_set(e.indices, 0)}, {"codim", e.codim}, {"m", e.m()}, {"dense", e.dense}});
    }
  out["edges"] = std::move(edges);
  out["dense_edge_count"] = r.dense_edges.size();
  out["generic"] = r.generic;
  if (r.betti) {
    const auto& b = *r.betti;
    out["betti"] = Json::array({b.b0, b.b1, b.b2});
    out["chi"] = b.chi;
    out["nu3"] = b.nu3;
    out["nu2_prime"] = b.nu2_prime;
    out["nu3_prime"] = b.nu3_prime;
  } else {
    out["betti"] = nullptr;
    out["chi"] = nullptr;
    out["nu3"] = r.low_degree ? Json(r.low_degree->nu3) : Json(nullptr);
  }
  out["alpha_prime"] = optional_rational(r.alpha_prime);
  out["alpha_min"] = optional_rational(r.alpha_min);
  out["candidates"] = r.candidates ? to_json(*r.candidates) : Json(nullptr);
  out["r"] = r.low_degree && !r.low_degree->indeterminate ? Json(r.low_degree->r) : Json(nullptr);
  out["indeterminate"] = r.indeterminate;
  if (r.indeterminate && r.low_degree) {
    out["alternatives"] = Json::array();
    for (const auto& alt : r.low_degree->alternatives) out["alternatives"].push_back(to_json(alt));
  }
  out["bfunction"] = r.bfunction ? to_json(*r.bfunction) : Json(nullptr);
  out["method"] = r.bfunction_method.empty() ? Json(nullptr) : Json(r.bfunction_method);
  out["notes"] = r.notes;
  return out;
}

Json to_json(const Certification& c) {
  Json fired = Json::array();
  for (const auto& f : c.fired)
    fired.push_back(Json{{"rule", std::string(1, f.rule)},
                         {"value", (f.plus_one ? c.alpha + 1 : c.alpha).str()},
                         {"verdict", to_string(f.verdict)},
                         {"detail", f.detail}});
  Json evidence = Json::array();
  for (const auto& e : c.evidence)
    evidence.push_back(Json{{"I", index_set(e.I, 1)},
                            {"h", e.h},
                            {"v_dim", e.v.dim},
                            {"v_nonzero", e.v.nonzero},
                            {"v_full", e.v.full}});
  Json diag{{"alpha_prime", c.alpha_prime.str()},
            {"chi", c.chi},
            {"binom_k_minus_1_2", c.binom.str()}};
  diag["h"] = c.h ? Json(*c.h) : Json(nullptr);
  diag["evidence"] = std::move(evidence);
  diag["resonant_skipped"] = c.resonant_skipped;
  diag["notes"] = c.notes;
  return Json{{"alpha", c.alpha.str()},
              {"k", c.k},
              {"alpha_plus_1", (c.alpha + 1).str()},
              {"verdict_alpha", to_string(c.alpha_verdict)},
              {"verdict_alpha_plus_1", to_string(c.alpha_plus_one_verdict)},
              {"rules_fired", std::move(fired)},
              {"diagnostics", std::move(diag)}};
}

}  // namespace bsroots::io
