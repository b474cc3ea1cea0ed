// ctld: command-line front end. Every command writes one JSON document (or an
// NDJSON stream for `enumerate --ndjson`). Exit codes: 0 success, 1 a
// verification failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ctld/serialize.hpp"
#include "ctld/suites.hpp"

using namespace ctld;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int m = 2;
  int n = 4;
  std::string field;
  std::string delta;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  std::uint64_t budget = kDefaultBudget;
  std::string out;
  std::string loop_rule = "formula";
  // command specific
  std::string suite, left, right, lambda;
  bool ndjson = false, elements = false;
};

struct Setup {
  Field field;
  RootList roots;
  EvalContext ctx;
};

Setup setup(const Config& c) {
  if (c.m < 1) throw UsageError("--m must be positive");
  if (c.n < 4 || c.n > kMaxN) throw UsageError("--n must lie in 4.." + std::to_string(kMaxN));
  std::string fs = c.field.empty() ? "Q(zeta_" + std::to_string(c.m) + ")" : c.field;
  Field F(parse_field_spec(fs));
  RootList roots = roots_of_unity(F, c.m);
  std::string d = c.delta;
  if (d.empty()) {
    d = "1";
    for (int i = 1; i < c.m; ++i) d += ",0";
  }
  return Setup{F, roots, EvalContext{parse_parameters(F, c.m, d), parse_loop_rule(c.loop_rule)}};
}

std::uint64_t need_seed(const Config& c) {
  if (!c.seed) throw UsageError("--seed is required for randomized suites");
  return *c.seed;
}

Json context_json(const Config& c, const Setup& s) {
  Json deltas = Json::array();
  for (auto& x : s.ctx.params.deltas()) deltas.push_back(to_json(x));
  return {{"m", c.m},
          {"n", c.n},
          {"field", format_field_spec(s.field.spec())},
          {"delta", deltas},
          {"loopRule", std::string(to_string(s.ctx.rule))}};
}

Json suite_json(const SuiteReport& r) {
  Json out = {{"suite", r.suite},
              {"seed", r.seed},
              {"checked", r.checked},
              {"failed", r.failed},
              {"pass", r.pass()}};
  out["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  return out;
}

Json read_json_arg(const std::string& text) {
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw UsageError("cannot read " + text.substr(1));
    return Json::parse(in);
  }
  return Json::parse(text);
}

int cell_by_name(const CellularBasis& b, const std::string& name) {
  for (std::size_t i = 0; i < b.cells().size(); ++i)
    if (b.cells()[i].to_string() == name) return static_cast<int>(i);
  throw UsageError("unknown cell index " + name);
}

// Returns the exit code; fills `doc` unless streaming.
int dispatch(const std::string& cmd, const Config& c, Json& doc, std::ostream& stream) {
  if (cmd == "dim") {
    if (c.n < 4) throw UsageError("--n must be at least 4");
    auto ce = census(enum_diagrams(c.m, c.n, c.budget), c.m, c.n);
    doc = {{"total", ce.total}, {"typeI", ce.type_one}, {"typeII", ce.type_two}};
    return 0;
  }
  if (cmd == "enumerate") {
    auto ds = enum_diagrams(c.m, c.n, c.budget);
    if (c.ndjson) {
      for (auto& d : ds) stream << to_json(d).dump() << '\n';
      return 0;
    }
    doc = to_json(census(ds, c.m, c.n));
    return 0;
  }

  Setup s = setup(c);
  Json ctxj = context_json(c, s);

  if (cmd == "multiply") {
    if (c.left.empty() || c.right.empty()) throw UsageError("multiply needs --left and --right");
    Diagram a = diagram_from_json(read_json_arg(c.left));
    Diagram b = diagram_from_json(read_json_arg(c.right));
    if (a.n() != b.n() || a.m() != c.m || b.m() != c.m) throw UsageError("diagram sizes do not match --m");
    auto [coef, d] = multiply_diagrams(a, b, s.ctx.params, s.ctx.rule);
    AlgebraElement x(s.field, d.n(), d.m());
    x.add_term(d, coef);
    doc = {{"context", ctxj}, {"product", to_json(x)}};
    return 0;
  }
  if (cmd == "verify") {
    Json body;
    bool pass = false;
    if (c.suite == "relations") {
      if (c.m != 1) throw UsageError("the relations suite runs at --m 1");
      auto r = verify_tl_d_relations(c.n, s.field, s.ctx.params.delta(0), s.ctx.rule);
      body = to_json(r);
      pass = r.all_pass();
    } else if (c.suite == "associativity") {
      auto r = check_associativity(c.m, c.n, s.ctx, need_seed(c), c.samples ? c.samples : 500, c.budget);
      body = suite_json(r);
      pass = r.pass();
    } else if (c.suite == "involution") {
      auto r = check_involution(c.m, c.n, s.ctx, need_seed(c), c.samples ? c.samples : 200, c.budget);
      body = suite_json(r);
      pass = r.pass();
    } else if (c.suite == "counts") {
      auto r = check_counts(c.m, c.n, c.budget);
      body = to_json(r);
      pass = r.all_pass();
    } else if (c.suite == "celldatum") {
      CellularBasis b(c.m, c.n, s.field, s.roots);
      auto r = verify_cell_datum(b, s.ctx, need_seed(c), c.samples ? c.samples : 200, c.budget);
      body = to_json(r);
      body["seed"] = *c.seed;
      body["samples"] = c.samples ? c.samples : 200;
      pass = r.pass();
    } else if (c.suite == "gramlemmas") {
      CellularBasis b(c.m, c.n, s.field, s.roots);
      auto r = check_gram_lemmas(b, s.ctx, c.seed.value_or(1), c.samples ? c.samples : 2);
      body = suite_json(r.summary);
      body["lemmaChecked"] = r.lemma_checked;
      body["lemmaFailed"] = r.lemma_failed;
      body["failures"] = r.lines;
      pass = r.summary.pass();
    } else {
      throw UsageError("unknown suite '" + c.suite + "'");
    }
    doc = {{"context", ctxj}, {"report", body}};
    return pass ? 0 : 1;
  }

  CellularBasis b(c.m, c.n, s.field, s.roots);
  if (cmd == "cellbasis") {
    Json cells = Json::array();
    for (std::size_t i = 0; i < b.cells().size(); ++i) {
      const int cell = static_cast<int>(i);
      const int size = static_cast<int>(b.rows(cell).size());
      Json e = {{"lambda", b.cells()[i].to_string()}, {"size", size}};
      if (c.elements) {
        Json els = Json::array();
        for (int S = 0; S < size; ++S)
          for (int T = 0; T < size; ++T) els.push_back({{"S", S}, {"T", T}, {"element", to_json(b.element(cell, S, T))}});
        e["elements"] = std::move(els);
      }
      cells.push_back(std::move(e));
    }
    Json xi = Json::array();
    for (auto& x : s.roots.xi) xi.push_back(to_json(x));
    doc = {{"context", ctxj}, {"roots", xi}, {"dimension", b.dimension()}, {"cells", cells}};
    return 0;
  }
  if (cmd == "gram") {
    Json grams = Json::array();
    for (std::size_t i = 0; i < b.cells().size(); ++i) {
      if (!c.lambda.empty() && static_cast<int>(i) != cell_by_name(b, c.lambda)) continue;
      auto g = gram(b, static_cast<int>(i), s.ctx);
      Json e = to_json(g);
      e["predicted"] = predicted_simple(g.lambda, c.n, s.roots.p_power, s.ctx.params.all_zero());
      grams.push_back(std::move(e));
    }
    doc = {{"context", ctxj}, {"grams", grams}};
    return 0;
  }
  auto simples = simple_modules(b, s.ctx);
  if (cmd == "simples") {
    Json entries = Json::array();
    for (auto& e : simples.entries) entries.push_back(to_json(e));
    Json mism = Json::array();
    for (auto& l : simples.mismatches()) mism.push_back(l.to_string());
    doc = {{"context", ctxj},
           {"count", simples.simple_count()},
           {"predictedCount", simples.predicted_count()},
           {"matchesPrediction", simples.matches_prediction()},
           {"mismatches", mism},
           {"entries", entries}};
    return simples.matches_prediction() ? 0 : 1;
  }
  if (cmd == "qh") {
    auto q = is_quasi_hereditary(simples, s.field.characteristic(), c.m, s.ctx);
    doc = {{"context", ctxj}, {"qh", to_json(q)}};
    return q.agree() ? 0 : 1;
  }
  if (cmd == "qh-quotient") {
    if (c.n % 2) throw UsageError("qh-quotient needs even --n");
    auto q = quotient_quasi_hereditary(simples, s.field.characteristic(), c.m);
    doc = {{"context", ctxj}, {"qh", to_json(q)}};
    return q.agree() ? 0 : 1;
  }
  throw UsageError("unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclotomic Temperley-Lieb algebras of type D"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub, bool algebra) {
    sub->add_option("--m", c.m, "number of dot values")->check(CLI::PositiveNumber);
    sub->add_option("--n", c.n, "number of strands")->check(CLI::Range(4, kMaxN));
    sub->add_option("--budget", c.budget, "enumeration size limit");
    sub->add_option("--out", c.out, "write JSON here instead of stdout");
    if (!algebra) return;
    sub->add_option("--field", c.field, "Q(zeta_M) or GF(P^R); default Q(zeta_m)");
    sub->add_option("--delta", c.delta, "comma separated delta_0..delta_{m-1}; default 1,0,...");
    sub->add_option("--seed", c.seed, "seed for randomized suites");
    sub->add_option("--samples", c.samples, "sample count for randomized suites");
    sub->add_option("--loop-rule", c.loop_rule, "formula (default) or relations")
        ->check(CLI::IsMember({"formula", "relations"}));
  };

  auto* dim = app.add_subcommand("dim", "diagram counts");
  common(dim, false);
  auto* en = app.add_subcommand("enumerate", "census, or every diagram as NDJSON");
  common(en, false);
  en->add_flag("--ndjson", c.ndjson, "stream diagrams one per line");
  auto* mul = app.add_subcommand("multiply", "product of two diagrams");
  common(mul, true);
  mul->add_option("--left", c.left, "diagram JSON, or @file")->required();
  mul->add_option("--right", c.right, "diagram JSON, or @file")->required();
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  common(ver, true);
  ver->add_option("--suite", c.suite, "relations|associativity|involution|counts|celldatum|gramlemmas")
      ->required()
      ->check(CLI::IsMember({"relations", "associativity", "involution", "counts", "celldatum", "gramlemmas"}));
  auto* cb = app.add_subcommand("cellbasis", "cell indices and their sizes");
  common(cb, true);
  cb->add_flag("--elements", c.elements, "include every cellular basis element");
  auto* gr = app.add_subcommand("gram", "Gram matrices of the cell modules");
  common(gr, true);
  gr->add_option("--lambda", c.lambda, "only this cell, e.g. \"(1,(2,1))+\"");
  common(app.add_subcommand("simples", "simple modules from Gram ranks"), true);
  common(app.add_subcommand("qh", "quasi-heredity decision"), true);
  common(app.add_subcommand("qh-quotient", "quasi-heredity of the k < n/2 quotient"), true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    std::ofstream file;
    if (!c.out.empty()) {
      file.open(c.out);
      if (!file) throw UsageError("cannot write " + c.out);
    }
    std::ostream& os = c.out.empty() ? std::cout : file;
    Json doc;
    int rc = dispatch(cmd, c, doc, os);
    if (!doc.is_null()) os << doc.dump(2) << '\n';
    return rc;
  } catch (const SplittingError& e) {
    std::cerr << "error: " << e.what() << " (needs degree " << e.required_degree() << ")\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {  // FieldError, ParameterError, InvalidDiagram
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
