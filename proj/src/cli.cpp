#include "stal/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "stal/emptiness.hpp"
#include "stal/json_io.hpp"
#include "stal/parse.hpp"

namespace stal {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Options {
  std::string tbox;
  std::string concept_inline;
  std::string concept_file;
  std::string csp_file;
  std::string algebra = "rcc8";
  std::string format = "json";
  int depth = 24;
  int unroll = 1;
  long budget = 200000;
  int seed = 0;  // reserved for scripting symmetry; nothing here is randomized
};

std::string concept_text(const Options& o) {
  if (!o.concept_inline.empty()) return o.concept_inline;
  if (!o.concept_file.empty()) return slurp(o.concept_file);
  throw InputError("a concept is required (--concept or --concept-file)");
}

ValidatedTBox load_tbox(const Options& o) { return validated(parse_tbox(slurp(o.tbox))); }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  if (std::find(allowed.begin(), allowed.end(), o.format) == allowed.end())
    throw InputError("format " + o.format + " does not apply to this subcommand");
}

int do_validate(const Options& o, std::ostream& out, std::ostream& err) {
  require_format(o, {"json", "text"});
  TBox tb = parse_tbox(slurp(o.tbox));
  Validation v = validate(tb);
  if (!v.ok) {
    for (const auto& e : v.errors) err << e << "\n";
    return 3;
  }
  ValidatedTBox vt{std::move(tb), std::move(v.classes)};
  if (o.format == "text") {
    for (const auto& ax : vt.tb.axioms) {
      const AxiomClass& cls = vt.class_of(ax.lhs);
      out << ax.lhs << " " << to_string(cls.kind);
      if (is_cyclic(cls.kind)) out << " role " << cls.role_used << " dual " << cls.dual_of;
      out << "\n";
    }
    return 0;
  }
  out << classification_json(vt);
  return 0;
}

int do_dnf(const Options& o, std::ostream& out) {
  require_format(o, {"json", "text"});
  ValidatedTBox vt = load_tbox(o);
  Concept c = parse_concept(concept_text(o), vt.tb);
  Dnf d1 = dnf1(c, vt);
  Dnf d2 = dnf2(c, vt);
  if (o.format == "text")
    out << "dnf1 " << to_string(d1) << "\ndnf2 " << to_string(d2) << "\n";
  else
    out << dnf_json(d1, d2);
  return 0;
}

int do_closure(const Options& o, std::ostream& out) {
  require_format(o, {"json", "text"});
  ValidatedTBox vt = load_tbox(o);
  ClosedTBox ct = close(vt, parse_concept(concept_text(o), vt.tb));
  if (o.format == "text")
    out << reencode(ct).to_string();
  else
    out << closure_json(ct);
  return 0;
}

int do_automaton(const Options& o, std::ostream& out) {
  require_format(o, {"json", "dot", "text"});
  ValidatedTBox vt = load_tbox(o);
  Waa a = build_automaton(close(vt, parse_concept(concept_text(o), vt.tb)));
  if (o.format == "dot") {
    out << automaton_dot(a);
  } else if (o.format == "text") {
    out << "initial " << a.initial << "\ndirections";
    for (int d = 0; d < a.k(); ++d) out << " " << a.direction_name(d);
    out << "\n";
    for (const auto& [q, clauses] : a.delta)
      out << (a.accepting.count(q) ? "* " : "  ") << q << " := " << to_string(clauses) << "\n";
  } else {
    out << automaton_json(a);
  }
  return 0;
}

int do_csp(const Options& o, std::ostream& out) {
  require_format(o, {"json", "text"});
  Qcsp csp = parse_csp(slurp(o.csp_file), QualitativeAlgebra::load(o.algebra));
  bool ok = csp_consistent(csp);
  if (o.format == "text")
    out << (ok ? "consistent" : "inconsistent") << "\n";
  else
    out << csp_json(csp);
  return ok ? 0 : 1;
}

int do_check(const Options& o, std::ostream& out) {
  require_format(o, {"json", "text"});
  ValidatedTBox vt = load_tbox(o);
  Waa a = build_automaton(close(vt, parse_concept(concept_text(o), vt.tb)));
  SearchResult r = decide_emptiness(a, SearchConfig{o.depth, o.unroll, o.budget});
  if (o.format == "text")
    out << to_string(r.verdict) << "\n";
  else
    out << witness_json(a, r);
  switch (r.verdict) {
    case Verdict::Sat: return 0;
    case Verdict::Unsat: return 1;
    case Verdict::Unknown: return 2;
  }
  return 2;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"satisfiability pipeline for modal concepts over qualitative spatial constraints"};
  app.name("stal");
  Options o;

  auto add_format = [&](CLI::App* s) {
    s->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "dot", "text"}));
  };
  auto add_tbox = [&](CLI::App* s) {
    s->add_option("--tbox", o.tbox, "TBox file")->required();
    add_format(s);
  };
  auto add_concept = [&](CLI::App* s) {
    s->add_option("--concept", o.concept_inline, "concept inline (wins over --concept-file)");
    s->add_option("--concept-file", o.concept_file, "concept from a file");
  };

  CLI::App* validate_cmd = app.add_subcommand("validate", "classify the axioms of a TBox");
  add_tbox(validate_cmd);

  CLI::App* dnf_cmd = app.add_subcommand("dnf", "normal forms of a concept");
  add_tbox(dnf_cmd);
  add_concept(dnf_cmd);

  CLI::App* closure_cmd = app.add_subcommand("closure", "close the TBox around a concept");
  add_tbox(closure_cmd);
  add_concept(closure_cmd);

  CLI::App* automaton_cmd = app.add_subcommand("automaton", "build the alternating automaton");
  add_tbox(automaton_cmd);
  add_concept(automaton_cmd);

  CLI::App* csp_cmd = app.add_subcommand("csp", "decide a constraint network");
  csp_cmd->add_option("file", o.csp_file, "constraint list, lines of \"x y {DC,EC};\"")
      ->required();
  csp_cmd->add_option("--algebra", o.algebra, "algebra name (default rcc8)");
  add_format(csp_cmd);

  CLI::App* check_cmd = app.add_subcommand("check", "decide satisfiability");
  add_tbox(check_cmd);
  add_concept(check_cmd);
  check_cmd->add_option("--depth", o.depth, "search depth bound");
  check_cmd->add_option("--unroll", o.unroll, "extra lasso unrollings checked");
  check_cmd->add_option("--budget", o.budget, "search node cap, 0 for unlimited");
  check_cmd->add_option("--seed", o.seed, "reserved");

  app.require_subcommand(1);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 3;
  }

  try {
    if (validate_cmd->parsed()) return do_validate(o, out, err);
    if (dnf_cmd->parsed()) return do_dnf(o, out);
    if (closure_cmd->parsed()) return do_closure(o, out);
    if (automaton_cmd->parsed()) return do_automaton(o, out);
    if (csp_cmd->parsed()) return do_csp(o, out);
    if (check_cmd->parsed()) return do_check(o, out);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return 3;
  }
  err << "no subcommand\n";
  return 3;
}

}  // namespace stal
