// modsm: a workbench for traditional and modular logic programs.
//
// Subcommands: parse, ground, solve, info, coherence, depgraph, shift,
// project, verify {ce, split, shift, projection}.  All output is
// deterministic; every enumeration cap is a flag and exceeding one is never
// silent.
//
// Exit codes: 0 success or pass, 1 semantic fail (a failed verification, a
// non-coherent program), 2 usage errors / inconclusive results / violated
// preconditions, 3 enumeration bound exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <modsm/ground.hpp>
#include <modsm/modular.hpp>
#include <modsm/parser.hpp>
#include <modsm/rewrite.hpp>
#include <modsm/stable.hpp>
#include <modsm/structure.hpp>
#include <modsm/syntax.hpp>
#include <modsm/verify.hpp>

#ifndef MODSM_VERSION
#define MODSM_VERSION "0.0.0"
#endif

namespace {

using nlohmann::json;
using namespace modsm;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

bool looks_modular(const std::string& path, const std::string& text) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".mlp") return true;
  return text.find("#module") != std::string::npos;
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::string universe_text(const std::vector<Term>& u) {
  std::string out = "{";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(u[i]);
  }
  return out + "}";
}

json universe_json(const std::vector<Term>& u) {
  json out = json::array();
  for (const Term& t : u) out.push_back(to_string(t));
  return out;
}

json model_json(const Interpretation& i) {
  std::vector<std::string> atoms;
  for (const GroundAtom& a : i.true_atoms) atoms.push_back(to_string(a));
  std::sort(atoms.begin(), atoms.end());
  return json(atoms);
}

void print_models(const std::vector<Interpretation>& models, bool as_json) {
  if (as_json) {
    json out;
    out["models"] = json::array();
    for (const Interpretation& m : models) out["models"].push_back(model_json(m));
    std::cout << out.dump(2) << "\n";
    return;
  }
  for (const Interpretation& m : models) std::cout << to_string(m) << "\n";
}

// Constants of the program widened by the --constants flag.
Signature widened(Signature sig, const std::vector<std::string>& extra) {
  for (const std::string& name : extra) {
    auto [it, inserted] = sig.functions.emplace(name, 0);
    if (!inserted && it->second != 0)
      throw Error("--constants name '" + name +
                  "' is already a function symbol of positive arity");
  }
  return sig;
}

struct VerifyFlags {
  std::vector<std::string> constants;
  int extra_constants = 0;
  std::size_t max_atoms = 20;
  bool json_output = false;
};

// The universes a verify command checks: the given constants, then
// cumulative extensions by fresh constants.
std::vector<Universe> verify_universes(const Signature& sig,
                                       const VerifyFlags& flags) {
  Signature sigw = widened(sig, flags.constants);
  std::vector<Term> base = sigw.constants();
  std::set<std::string> taken;
  for (const auto& [name, arity] : sigw.functions) taken.insert(name);

  std::vector<Universe> out;
  if (!base.empty()) out.push_back(base);
  Universe grown = base;
  for (int k = 0; k < flags.extra_constants; ++k) {
    std::string name = fresh_name("c_extra", taken);
    taken.insert(name);
    grown.push_back(Term::constant(name));
    out.push_back(grown);
  }
  if (out.empty())
    throw Error(
        "the program has no object constants; pass --constants or "
        "--extra-constants to fix the universes");
  return out;
}

int report_exit(const Report& r) {
  switch (r.verdict) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::Inconclusive: return kExitUsage;
  }
  return kExitUsage;
}

int print_report(const Report& r, bool as_json) {
  if (as_json) {
    json out;
    out["verdict"] = to_string(r.verdict);
    out["bounded"] = true;
    out["reason"] = r.reason;
    out["universes"] = json::array();
    for (const auto& u : r.universes_checked) out["universes"].push_back(universe_json(u));
    out["stats"] = json::array();
    for (const UniverseStats& s : r.stats)
      out["stats"].push_back({{"universe", universe_json(s.universe)},
                              {"left_models", s.left_models},
                              {"right_models", s.right_models}});
    out["witnesses"] = json::array();
    for (const Witness& w : r.witnesses) {
      json jw;
      jw["clause"] = w.clause;
      jw["universe"] = universe_json(w.universe);
      jw["interpretations"] = json::array();
      for (const Interpretation& i : w.interpretations)
        jw["interpretations"].push_back(model_json(i));
      jw["detail"] = w.detail;
      out["witnesses"].push_back(jw);
    }
    std::cout << out.dump(2) << "\n";
    return report_exit(r);
  }

  std::cout << "verdict: " << to_string(r.verdict)
            << (r.verdict == Verdict::Pass ? " (bounded)" : "") << "\n";
  if (!r.reason.empty()) std::cout << "reason: " << r.reason << "\n";
  if (!r.universes_checked.empty()) {
    std::cout << "universes:";
    for (std::size_t i = 0; i < r.universes_checked.size(); ++i)
      std::cout << (i ? "; " : " ") << universe_text(r.universes_checked[i]);
    std::cout << "\n";
  }
  for (const UniverseStats& s : r.stats)
    std::cout << "universe " << universe_text(s.universe)
              << ": left models = " << s.left_models
              << ", right models = " << s.right_models << "\n";
  for (const Witness& w : r.witnesses) {
    std::cout << "witness (" << w.clause << ") in universe "
              << universe_text(w.universe) << ":";
    for (const Interpretation& i : w.interpretations) std::cout << " " << to_string(i);
    std::cout << " -- " << w.detail << "\n";
  }
  return report_exit(r);
}

// Loads a modular program; a traditional file is wrapped as one def-module
// whose intensional tuple is its whole predicate signature.
ModularProgram load_modular(const std::string& path) {
  std::string text = read_file(path);
  if (looks_modular(path, text)) return parse_modular(text, path);
  Program p = parse_program(text, path);
  PredSet preds = predicate_signature(p);
  ModularProgram mp;
  mp.modules.emplace_back("main", std::vector<std::string>(preds.begin(), preds.end()),
                          std::move(p));
  return mp;
}

int run(int argc, char** argv) {
  CLI::App app{"workbench for traditional and modular logic programs"};
  app.set_version_flag("--version", std::string("modsm ") + MODSM_VERSION);
  app.require_subcommand(1);

  // ---- parse ----
  auto* cmd_parse = app.add_subcommand("parse", "parse a file and print its canonical form");
  std::string parse_file;
  cmd_parse->add_option("file", parse_file, "input program")->required();

  // ---- ground ----
  auto* cmd_ground = app.add_subcommand("ground", "print the ground program");
  std::string ground_file;
  std::string ground_constants;
  std::optional<int> ground_depth;
  cmd_ground->add_option("file", ground_file, "traditional program")->required();
  cmd_ground->add_option("--constants", ground_constants, "extra object constants (comma separated)");
  cmd_ground->add_option("--max-depth", ground_depth, "term depth bound for function symbols");

  // ---- solve ----
  auto* cmd_solve = app.add_subcommand("solve", "enumerate stable models");
  std::string solve_file;
  std::string solve_intensional;
  bool solve_all_intensional = false;
  bool solve_modular = false;
  std::string solve_constants;
  std::optional<int> solve_depth;
  std::size_t solve_max_atoms = 24;
  bool solve_json = false;
  cmd_solve->add_option("file", solve_file, "program")->required();
  auto* solve_tuple_option =
      cmd_solve->add_option("--intensional", solve_intensional,
                            "intensional predicates (comma separated)");
  cmd_solve->add_flag("--all-intensional", solve_all_intensional,
                      "minimize every predicate (the default)")
      ->excludes(solve_tuple_option);
  cmd_solve->add_flag("--modular", solve_modular, "treat the input as a modular program");
  cmd_solve->add_option("--constants", solve_constants, "extra object constants");
  cmd_solve->add_option("--max-depth", solve_depth, "term depth bound");
  cmd_solve->add_option("--max-atoms", solve_max_atoms, "Herbrand base cap (default 24)");
  cmd_solve->add_flag("--json", solve_json, "JSON output");

  // ---- info ----
  auto* cmd_info = app.add_subcommand("info", "print signatures and module tuples");
  std::string info_file;
  cmd_info->add_option("file", info_file, "program")->required();

  // ---- coherence ----
  auto* cmd_coherence = app.add_subcommand("coherence", "check simplicity and coherence");
  std::string coherence_file;
  bool coherence_json = false;
  cmd_coherence->add_option("file", coherence_file, "modular program")->required();
  cmd_coherence->add_flag("--json", coherence_json, "JSON output");

  // ---- depgraph ----
  auto* cmd_depgraph = app.add_subcommand("depgraph", "emit the dependency graph");
  std::string depgraph_file;
  bool depgraph_dot = false;
  cmd_depgraph->add_option("file", depgraph_file, "modular program")->required();
  cmd_depgraph->add_flag("--dot", depgraph_dot, "DOT format (the only format)");

  // ---- shift ----
  auto* cmd_shift = app.add_subcommand("shift", "move non-intensional head atoms into the body");
  std::string shift_file;
  std::string shift_intensional;
  cmd_shift->add_option("file", shift_file, "traditional program")->required();
  cmd_shift->add_option("--intensional", shift_intensional, "predicates kept in heads")->required();

  // ---- project ----
  auto* cmd_project = app.add_subcommand("project", "project variables out of a rule");
  std::string project_file;
  std::optional<std::size_t> project_rule_index;
  std::string project_vars;
  std::string project_pred;
  bool project_auto = false;
  cmd_project->add_option("file", project_file, "traditional program")->required();
  cmd_project->add_option("--rule", project_rule_index, "0-based rule index");
  cmd_project->add_option("--vars", project_vars, "variables to project (comma separated)");
  cmd_project->add_option("--pred", project_pred, "fresh predicate name (default: derived from t)");
  cmd_project->add_flag("--auto", project_auto, "derive the specs automatically");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "check program relationships by enumeration");
  cmd_verify->require_subcommand(1);
  VerifyFlags vflags;
  auto add_verify_flags = [&](CLI::App* sub) {
    sub->add_option("--constants", vflags.constants, "extra object constants")
        ->delimiter(',');
    sub->add_option("--extra-constants", vflags.extra_constants,
                    "also check universes grown by this many fresh constants");
    sub->add_option("--max-atoms", vflags.max_atoms, "Herbrand base cap (default 20)");
    sub->add_flag("--json", vflags.json_output, "JSON output");
  };

  auto* cmd_ce = cmd_verify->add_subcommand("ce", "conservative extension between two files");
  std::string ce_small_file, ce_big_file;
  cmd_ce->add_option("small", ce_small_file, "smaller side (.mlp)")->required();
  cmd_ce->add_option("big", ce_big_file, "larger side (.mlp)")->required();
  add_verify_flags(cmd_ce);

  auto* cmd_split = cmd_verify->add_subcommand("split", "modular models vs. conjunction models");
  std::string split_file;
  cmd_split->add_option("file", split_file, "modular program")->required();
  add_verify_flags(cmd_split);

  auto* cmd_vshift = cmd_verify->add_subcommand("shift", "equivalence of a program and its shift");
  std::string vshift_file, vshift_intensional;
  cmd_vshift->add_option("file", vshift_file, "traditional program")->required();
  cmd_vshift->add_option("--intensional", vshift_intensional, "intensional predicates")->required();
  add_verify_flags(cmd_vshift);

  auto* cmd_vproj = cmd_verify->add_subcommand("projection", "projection yields a conservative extension");
  std::string vproj_file, vproj_vars, vproj_pred;
  std::size_t vproj_rule = 0;
  cmd_vproj->add_option("file", vproj_file, "traditional program")->required();
  cmd_vproj->add_option("--rule", vproj_rule, "0-based rule index")->required();
  cmd_vproj->add_option("--vars", vproj_vars, "variables to project")->required();
  cmd_vproj->add_option("--pred", vproj_pred, "fresh predicate name");
  add_verify_flags(cmd_vproj);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  // parse
  if (cmd_parse->parsed()) {
    std::string text = read_file(parse_file);
    if (looks_modular(parse_file, text))
      std::cout << render(parse_modular(text, parse_file));
    else
      std::cout << render(parse_program(text, parse_file));
    return kExitPass;
  }

  // ground
  if (cmd_ground->parsed()) {
    Program p = parse_program(read_file(ground_file), ground_file);
    Signature sig = widened(signature_of(p), split_names(ground_constants));
    std::vector<Term> universe = herbrand_universe(sig, ground_depth);
    GroundProgram g = ground(p, universe);
    std::vector<std::string> lines;
    for (const GroundRule& r : g.rules) lines.push_back(to_string(r));
    std::sort(lines.begin(), lines.end());
    for (const std::string& line : lines) std::cout << line << "\n";
    return kExitPass;
  }

  // solve
  if (cmd_solve->parsed()) {
    SolveOptions opts;
    opts.max_atoms = solve_max_atoms;
    opts.max_depth = solve_depth;
    std::string text = read_file(solve_file);
    std::vector<Interpretation> models;
    if (solve_modular || looks_modular(solve_file, text)) {
      if (!solve_intensional.empty() || solve_all_intensional)
        throw Error("--intensional/--all-intensional apply to traditional programs only");
      ModularProgram mp = parse_modular(text, solve_file);
      Signature sig = widened(sigma(mp), split_names(solve_constants));
      models = modular_stable_models(mp, sig.constants(), opts);
    } else {
      Program p = parse_program(text, solve_file);
      Signature sig = widened(signature_of(p), split_names(solve_constants));
      std::vector<Term> universe = herbrand_universe(sig, solve_depth);
      PredSet tuple;
      if (!solve_intensional.empty()) {
        for (const std::string& name : split_names(solve_intensional)) tuple.insert(name);
      } else {
        tuple = predicate_signature(p);  // answer sets
      }
      models = p_stable_models(p, tuple, universe, opts);
    }
    print_models(models, solve_json);
    return kExitPass;
  }

  // info
  if (cmd_info->parsed()) {
    std::string text = read_file(info_file);
    auto print_names = [](const std::string& label, const auto& table) {
      std::cout << label << ":";
      bool first = true;
      for (const auto& [name, arity] : table) {
        std::cout << (first ? " " : ", ") << name << "/" << arity;
        first = false;
      }
      std::cout << "\n";
    };
    auto print_signature = [&](const Signature& sig) {
      print_names("functions", sig.functions);
      print_names("predicates", sig.predicates);
    };
    auto print_set = [](const std::string& label, const PredSet& names) {
      std::cout << label << ":";
      bool first = true;
      for (const std::string& name : names) {
        std::cout << (first ? " " : ", ") << name;
        first = false;
      }
      std::cout << "\n";
    };
    if (looks_modular(info_file, text)) {
      ModularProgram mp = parse_modular(text, info_file);
      print_signature(sigma(mp));
      print_set("pi", pi(mp));
      print_set("iota", iota(mp));
      for (const DefModule& m : mp.modules) {
        std::cout << "module " << m.name << ": intensional {";
        for (std::size_t i = 0; i < m.intensional.size(); ++i)
          std::cout << (i ? ", " : "") << m.intensional[i];
        std::cout << "}, rules " << m.program.rules.size() << "\n";
      }
    } else {
      Program p = parse_program(text, info_file);
      print_signature(signature_of(p));
      print_set("pi", predicate_signature(p));
      std::cout << "rules: " << p.rules.size() << "\n";
    }
    return kExitPass;
  }

  // coherence
  if (cmd_coherence->parsed()) {
    ModularProgram mp = load_modular(coherence_file);
    CoherenceDiagnostics d = is_coherent(mp);
    if (coherence_json) {
      json out;
      out["coherent"] = d.coherent;
      out["simple"] = d.simple;
      out["tuples_disjoint"] = d.tuples_disjoint;
      out["sccs_covered"] = d.sccs_covered;
      out["sccs"] = d.sccs;
      out["simplicity_violations"] = json::array();
      for (const SimplicityViolation& v : d.simplicity_violations)
        out["simplicity_violations"].push_back(
            {{"module", v.module}, {"rule", v.rule_index}, {"predicate", v.predicate}});
      out["overlaps"] = json::array();
      for (const auto& [pred, modules] : d.overlaps)
        out["overlaps"].push_back({{"predicate", pred},
                                   {"modules", {modules.first, modules.second}}});
      out["uncovered_sccs"] = d.uncovered_sccs;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "coherent: " << (d.coherent ? "yes" : "no") << "\n";
      if (!d.simple) {
        std::cout << "simple: no\n";
        for (const SimplicityViolation& v : d.simplicity_violations)
          std::cout << "  head predicate '" << v.predicate << "' outside the tuple of module '"
                    << v.module << "' (rule " << v.rule_index << ")\n";
      }
      for (const auto& [pred, modules] : d.overlaps)
        std::cout << "  tuple overlap: '" << pred << "' in modules '" << modules.first
                  << "' and '" << modules.second << "'\n";
      for (const auto& component : d.sccs) {
        std::cout << "scc: {";
        for (std::size_t i = 0; i < component.size(); ++i)
          std::cout << (i ? ", " : "") << component[i];
        std::cout << "}\n";
      }
      for (const auto& component : d.uncovered_sccs) {
        std::cout << "scc not covered by any module: {";
        for (std::size_t i = 0; i < component.size(); ++i)
          std::cout << (i ? ", " : "") << component[i];
        std::cout << "}\n";
      }
    }
    return d.coherent ? kExitPass : kExitFail;
  }

  // depgraph
  if (cmd_depgraph->parsed()) {
    (void)depgraph_dot;  // DOT is the only format
    std::cout << to_dot(dependency_graph(load_modular(depgraph_file)));
    return kExitPass;
  }

  // shift
  if (cmd_shift->parsed()) {
    Program p = parse_program(read_file(shift_file), shift_file);
    PredSet keep;
    for (const std::string& name : split_names(shift_intensional)) keep.insert(name);
    std::cout << render(shift(p, keep));
    return kExitPass;
  }

  // project
  if (cmd_project->parsed()) {
    Program p = parse_program(read_file(project_file), project_file);
    std::vector<ProjectionSpec> specs;
    if (project_auto) {
      specs = auto_projection_specs(p);
    } else {
      if (!project_rule_index || project_vars.empty())
        throw Error("project needs --rule and --vars (or --auto)");
      std::string fresh = project_pred.empty()
                              ? fresh_name("t", predicate_signature(p))
                              : project_pred;
      specs.push_back({*project_rule_index, split_names(project_vars), fresh});
    }
    std::cout << render(project_program(p, specs));
    return kExitPass;
  }

  // verify ce
  if (cmd_ce->parsed()) {
    ModularProgram small = load_modular(ce_small_file);
    ModularProgram big = load_modular(ce_big_file);
    Signature joint = merge(sigma(small), sigma(big));
    std::vector<Universe> universes = verify_universes(joint, vflags);
    VerifyOptions opts;
    opts.max_atoms = vflags.max_atoms;
    Report r;
    if (small.modules.size() == 1 && big.modules.size() == 1)
      r = check_conservative_extension(small.modules[0], big.modules[0],
                                       universes, opts);
    else
      r = modular_conservative_extension(small, big, universes, opts);
    return print_report(r, vflags.json_output);
  }

  // verify split
  if (cmd_split->parsed()) {
    ModularProgram mp = load_modular(split_file);
    std::vector<Universe> universes = verify_universes(sigma(mp), vflags);
    VerifyOptions opts;
    opts.max_atoms = vflags.max_atoms;
    return print_report(check_splitting(mp, universes, opts), vflags.json_output);
  }

  // verify shift
  if (cmd_vshift->parsed()) {
    Program p = parse_program(read_file(vshift_file), vshift_file);
    PredSet keep;
    for (const std::string& name : split_names(vshift_intensional)) keep.insert(name);
    std::vector<std::string> tuple(keep.begin(), keep.end());
    DefModule original("original", tuple, p);
    DefModule shifted("shifted", tuple, shift(p, keep));
    std::vector<Universe> universes = verify_universes(signature_of(p), vflags);
    VerifyOptions opts;
    opts.max_atoms = vflags.max_atoms;
    return print_report(check_equivalence(original, shifted, universes, opts),
                        vflags.json_output);
  }

  // verify projection
  if (cmd_vproj->parsed()) {
    Program p = parse_program(read_file(vproj_file), vproj_file);
    std::string fresh = vproj_pred.empty()
                            ? fresh_name("t", predicate_signature(p))
                            : vproj_pred;
    std::vector<ProjectionSpec> specs = {
        {vproj_rule, split_names(vproj_vars), fresh}};
    std::vector<Universe> universes = verify_universes(signature_of(p), vflags);
    VerifyOptions opts;
    opts.max_atoms = vflags.max_atoms;
    return print_report(check_projection(p, specs, universes, opts),
                        vflags.json_output);
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const BoundError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
