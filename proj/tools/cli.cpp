#include "cli.hpp"

#include "bsroots/aomoto.hpp"
#include "bsroots/errors.hpp"
#include "bsroots/monomial.hpp"
#include "bsroots/spectrum.hpp"
#include "json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace bsroots::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  bool json = false;
  std::string bound;
  std::string weights;
  long k = 0;
  std::string I;
  bool has_I = false;
  bool search = false;
  std::size_t infinity = 0;
  bool has_infinity = false;
};

// Raised after the result has been printed, to select exit code 3.
struct Indeterminate {
  std::string message;
};

// Aligned "key  value" lines.
class TextReport {
 public:
  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void block(std::string title, std::vector<std::string> lines) {
    blocks_.emplace_back(std::move(title), std::move(lines));
  }

  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) out << std::left << std::setw(int(width) + 3) << k + ":" << v << '\n';
    for (const auto& [title, lines] : blocks_) {
      out << title << ":\n";
      for (const auto& l : lines) out << "  " << l << '\n';
    }
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
  std::vector<std::pair<std::string, std::vector<std::string>>> blocks_;
};

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string show(const RootSet& s) {
  std::vector<std::string> items;
  for (const auto& r : s) items.push_back(r.str());
  return items.empty() ? "(none)" : join(items);
}

std::vector<std::string> multiset_lines(const RootMultiset& m) {
  std::size_t width = 0;
  for (const auto& [r, mult] : m) width = std::max(width, r.str().size());
  std::vector<std::string> lines;
  for (const auto& [r, mult] : m) {
    std::ostringstream os;
    os << std::left << std::setw(int(width) + 2) << r.str() << "x" << mult;
    lines.push_back(os.str());
  }
  return lines;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json read_json(const Options& o) { return io::parse_json(read_file(o.input)); }

std::optional<std::size_t> infinity_override(const Options& o) {
  if (!o.has_infinity) return std::nullopt;
  return o.infinity;
}

void emit(std::ostream& out, const Options& o, const Json& j, const TextReport& text) {
  if (o.json)
    out << j.dump(2) << '\n';
  else
    text.print(out);
}

IndexSet parse_index_csv(const std::string& text) {
  IndexSet out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw InvalidInput("--I must be a comma-separated list of positive integers");
    auto v = std::stoul(item);
    if (v == 0) throw InvalidInput("--I indices are 1-based");
    out.push_back(v - 1);
  }
  if (!text.empty() && text.back() == ',') throw InvalidInput("--I has a trailing comma");
  return out;
}

std::string generators_text(const MonomialIdeal& ideal) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<std::string> c;
    for (const auto& x : g) c.push_back(x.str());
    gens.push_back("(" + join(c, ",") + ")");
  }
  return join(gens, " ");
}

void monomial_roots(const Options& o, std::ostream& out) {
  MonomialIdeal ideal = io::ideal_from_json(read_json(o));
  std::optional<Rational> bound;
  if (!o.bound.empty()) bound = Rational::parse(o.bound);
  RootSet roots;
  bool truncated = false;
  std::string method, method_text;
  if (ideal.dim() == 2 && !bound) {
    roots = roots_dim2(ideal);
    method = "dim2";
    method_text = "Newton polygon face windows (exact, n = 2)";
  } else {
    auto t = bound ? roots_general(ideal, *bound) : roots_general(ideal);
    roots = t.roots;
    truncated = t.truncated;
    method = "general";
    method_text = "face semigroup enumeration up to degree " + t.bound.str();
  }
  const Rational threshold = lct(ideal);

  Json j{{"roots", io::to_json(roots)},
         {"lct", threshold.str()},
         {"truncated", truncated},
         {"method", method}};
  TextReport t;
  t.add("n", std::to_string(ideal.dim()));
  t.add("generators", generators_text(ideal));
  t.add("method", method_text);
  t.add("roots", std::to_string(roots.size()));
  t.add("lct", threshold.str());
  t.add("truncated", truncated ? "yes" : "no");
  std::vector<std::string> lines;
  for (const auto& r : roots) lines.push_back(r == threshold ? r.str() + "  (lct)" : r.str());
  t.block("roots", lines);
  emit(out, o, j, t);
}

void lct_command(const Options& o, std::ostream& out) {
  MonomialIdeal ideal = io::ideal_from_json(read_json(o));
  Rational threshold = lct(ideal);
  TextReport t;
  t.add("n", std::to_string(ideal.dim()));
  t.add("generators", generators_text(ideal));
  t.add("method", "minimal root of the Newton polyhedron root set");
  t.add("lct", threshold.str());
  emit(out, o, Json{{"lct", threshold.str()}}, t);
}

void spectrum_command(const Options& o, std::ostream& out) {
  if (o.weights.empty()) throw InvalidInput("--weights is required");
  WeightVector w = WeightVector::parse(o.weights);
  FractionalPolynomial sp = spectrum_wh(w);
  RootSet ex = exponents(sp);
  Json j{{"spectrum", io::to_json(sp)}, {"exponents", io::to_json(ex)}, {"alpha_tilde", ex.min().str()}};
  TextReport t;
  std::vector<std::string> ws;
  for (const auto& x : w.weights()) ws.push_back(x.str());
  t.add("weights", join(ws));
  t.add("method", "weighted homogeneous product formula");
  t.add("terms", std::to_string(sp.terms().size()));
  t.add("alpha_tilde", ex.min().str());
  t.add("exponents", show(ex));
  std::vector<std::string> lines;
  std::size_t width = 0;
  for (const auto& [e, c] : sp.terms()) width = std::max(width, e.str().size());
  for (const auto& [e, c] : sp.terms()) {
    std::ostringstream os;
    os << std::left << std::setw(int(width) + 2) << e.str() << c.str();
    lines.push_back(os.str());
  }
  t.block("spectrum", lines);
  emit(out, o, j, t);
}

void newton_exponents(const Options& o, std::ostream& out) {
  MonomialIdeal support = io::ideal_from_json(read_json(o));
  FractionalPolynomial e = newton_exponents_dim2(support);
  std::vector<std::string> items;
  for (const auto& [x, c] : e.terms()) items.push_back(x.str());
  Json j{{"exponents", io::to_json(e)}};
  TextReport t;
  t.add("support", generators_text(support));
  t.add("method", "Newton polygon lattice points, reflected about 1");
  t.add("count", std::to_string(items.size()));
  t.add("exponents", join(items));
  emit(out, o, j, t);
}

void arrangement_report_command(const Options& o, std::ostream& out) {
  Arrangement a = io::arrangement_from_json(read_json(o), infinity_override(o));
  ArrangementReport r = arrangement_report(a);
  TextReport t;
  t.add("n", std::to_string(r.n));
  t.add("d", std::to_string(r.d));
  t.add("infinity_index", a.infinity_index() ? std::to_string(*a.infinity_index()) : "none");
  for (const auto& [codim, ids] : r.edges_by_codim) {
    std::size_t dense = 0;
    for (auto id : ids) dense += a.edge(id).dense;
    t.add("edges codim " + std::to_string(codim),
          std::to_string(ids.size()) + " (" + std::to_string(dense) + " dense)");
  }
  t.add("generic", r.generic ? "yes" : "no");
  if (r.betti) {
    const auto& b = *r.betti;
    t.add("betti", std::to_string(b.b0) + ", " + std::to_string(b.b1) + ", " + std::to_string(b.b2));
    t.add("chi", std::to_string(b.chi));
    t.add("nu3", std::to_string(b.nu3));
  }
  if (r.alpha_prime) t.add("alpha_prime", r.alpha_prime->str());
  if (r.alpha_min) t.add("alpha_min", r.alpha_min->str());
  if (r.candidates) t.add("candidates", show(*r.candidates));
  if (r.low_degree && !r.low_degree->indeterminate) t.add("r", std::to_string(r.low_degree->r));
  t.add("method", r.bfunction_method.empty() ? "none" : r.bfunction_method);
  if (r.bfunction) t.block("bfunction roots", multiset_lines(*r.bfunction));
  if (r.indeterminate && r.low_degree) {
    t.add("indeterminate", "yes");
    t.block("alternative r = " + std::to_string(2 * r.d - 2),
            multiset_lines(r.low_degree->alternatives[0]));
    t.block("alternative r = " + std::to_string(2 * r.d - 3),
            multiset_lines(r.low_degree->alternatives[1]));
  }
  if (!r.notes.empty()) t.block("notes", r.notes);
  emit(out, o, io::to_json(r, a), t);
  if (r.indeterminate)
    throw Indeterminate{"b-function not determined by the triple point count"};
}

void generic_b(const Options& o, std::ostream& out) {
  Arrangement a = io::arrangement_from_json(read_json(o), infinity_override(o));
  RootMultiset b = generic_bfunction(a);
  Json j{{"n", a.n()}, {"d", a.d()}, {"bfunction", io::to_json(b)},
         {"method", "generic arrangement formula"}};
  TextReport t;
  t.add("n", std::to_string(a.n()));
  t.add("d", std::to_string(a.d()));
  t.add("method", "generic arrangement formula");
  t.add("degree", std::to_string(b.degree()));
  t.block("bfunction roots", multiset_lines(b));
  emit(out, o, j, t);
}

void certify(const Options& o, std::ostream& out) {
  Arrangement a = io::arrangement_from_json(read_json(o), infinity_override(o));
  CertifyOptions opts;
  opts.search = o.search;
  if (o.has_I) opts.I = parse_index_csv(o.I);
  Certification c = certify_root(a, o.k, opts);
  TextReport t;
  t.add("d", std::to_string(a.d()));
  t.add("k", std::to_string(c.k));
  t.add("method", "membership criteria (a)-(f) with the Aomoto complex");
  auto rules_for = [&](bool plus_one) {
    std::vector<std::string> r;
    for (const auto& f : c.fired)
      if (f.plus_one == plus_one) r.push_back(std::string("(") + f.rule + ")");
    return r.empty() ? std::string() : "  by " + join(r, " ");
  };
  t.add("alpha", c.alpha.str() + "  " + to_string(c.alpha_verdict) + rules_for(false));
  t.add("alpha + 1", (c.alpha + 1).str() + "  " + to_string(c.alpha_plus_one_verdict) + rules_for(true));
  t.add("alpha_prime", c.alpha_prime.str());
  t.add("chi", std::to_string(c.chi));
  t.add("binom(k-1,2)", c.binom.str());
  if (c.h)
    t.add("h", std::to_string((*c.h)[0]) + ", " + std::to_string((*c.h)[1]) + ", " +
                   std::to_string((*c.h)[2]));
  t.add("nonresonant I", std::to_string(c.evidence.size()));
  t.add("resonant I", std::to_string(c.resonant_skipped));
  std::vector<std::string> details;
  for (const auto& f : c.fired)
    details.push_back(std::string("(") + f.rule + ") " + (f.plus_one ? c.alpha + 1 : c.alpha).str() +
                      " " + to_string(f.verdict) + ": " + f.detail);
  if (!details.empty()) t.block("rules", details);
  if (!c.notes.empty()) t.block("notes", c.notes);
  emit(out, o, io::to_json(c), t);
}

void cone(const Options& o, std::ostream& out) {
  Arrangement a = cone_over(io::affine_lines_from_json(read_json(o)));
  out << io::to_json(a).dump(2) << '\n';
}

void report_error(std::ostream& err, const char* kind, int code, const std::string& message) {
  std::string line = message;
  std::replace(line.begin(), line.end(), '\n', ' ');
  err << Json{{"error", kind}, {"exit_code", code}, {"message", line}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root data of Bernstein-Sato polynomials", "bsroots"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub) { sub->add_option("input", o.input, "input JSON file")->required(); };
  auto json = [&](CLI::App* sub) { sub->add_flag("--json", o.json, "machine-readable output"); };
  auto infinity = [&](CLI::App* sub) {
    sub->add_option("--infinity", o.infinity, "0-based index of the infinity form")
        ->each([&](const std::string&) { o.has_infinity = true; });
  };

  auto* mr = app.add_subcommand("monomial-roots", "roots of the b-function of a monomial ideal");
  input(mr);
  json(mr);
  mr->add_option("--bound", o.bound, "degree bound p/q (general enumeration)");
  auto* lc = app.add_subcommand("lct", "log canonical threshold of a monomial ideal");
  input(lc);
  json(lc);
  auto* sp = app.add_subcommand("spectrum", "spectrum of a weighted homogeneous isolated singularity");
  json(sp);
  sp->add_option("--weights", o.weights, "comma-separated weights p/q")->required();
  auto* ne = app.add_subcommand("newton-exponents", "exponents from a plane Newton polygon");
  input(ne);
  json(ne);
  auto* ar = app.add_subcommand("arrangement-report", "lattice, Betti numbers and b-function");
  input(ar);
  json(ar);
  infinity(ar);
  auto* gb = app.add_subcommand("generic-b", "b-function of a generic central arrangement");
  input(gb);
  json(gb);
  infinity(gb);
  auto* ce = app.add_subcommand("certify", "decide k/d and k/d + 1 as roots");
  input(ce);
  json(ce);
  infinity(ce);
  ce->add_option("--k", o.k, "numerator k of alpha = k/d")->required();
  ce->add_option("--I", o.I, "comma-separated 1-based form indices (empty for k = 1)")
      ->each([&](const std::string&) { o.has_I = true; });
  ce->add_flag("--search", o.search, "try every index set I of size k - 1");
  auto* co = app.add_subcommand("cone", "cone over an affine line arrangement");
  input(co);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    report_error(err, "invalid_input", kInvalidInput, e.what());
    return kInvalidInput;
  }

  try {
    if (mr->parsed()) monomial_roots(o, out);
    else if (lc->parsed()) lct_command(o, out);
    else if (sp->parsed()) spectrum_command(o, out);
    else if (ne->parsed()) newton_exponents(o, out);
    else if (ar->parsed()) arrangement_report_command(o, out);
    else if (gb->parsed()) generic_b(o, out);
    else if (ce->parsed()) certify(o, out);
    else if (co->parsed()) cone(o, out);
  } catch (const Indeterminate& e) {
    report_error(err, "indeterminate", kIndeterminate, e.message);
    return kIndeterminate;
  } catch (const PreconditionError& e) {
    report_error(err, "precondition", kPrecondition, e.what());
    return kPrecondition;
  } catch (const InvalidInput& e) {
    report_error(err, "invalid_input", kInvalidInput, e.what());
    return kInvalidInput;
  } catch (const DivisionByZero& e) {
    report_error(err, "invalid_input", kInvalidInput, e.what());
    return kInvalidInput;
  } catch (const std::exception& e) {
    report_error(err, "internal", kInternal, e.what());
    return kInternal;
  }
  return kOk;
}

}  // namespace bsroots::cli
