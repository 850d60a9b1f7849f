#include <modsm/verify.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <modsm/structure.hpp>

namespace modsm {

namespace {

Report inconclusive(const std::string& reason) {
  Report r;
  r.verdict = Verdict::Inconclusive;
  r.reason = reason;
  return r;
}

// Witness minimality: fewest true atoms, ties broken canonically.
const Interpretation* pick_minimal(const std::vector<const Interpretation*>& models) {
  const Interpretation* best = nullptr;
  for (const Interpretation* m : models) {
    if (!best || m->true_atoms.size() < best->true_atoms.size() ||
        (m->true_atoms.size() == best->true_atoms.size() &&
         canonical_less(*m, *best)))
      best = m;
  }
  return best;
}

std::vector<Term> normalized(Universe u) {
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

// Bijection clauses for one universe.  Returns true when clean; otherwise
// appends witnesses.
bool bijection_check(const std::vector<Interpretation>& small_models,
                     const std::vector<Interpretation>& big_models,
                     const PredSet& small_preds, const Universe& u,
                     Report& report) {
  bool clean = true;
  std::map<Interpretation, std::vector<const Interpretation*>> by_restriction;
  for (const Interpretation& m : big_models)
    by_restriction[restrict_to(m, small_preds)].push_back(&m);

  std::set<Interpretation> small_set(small_models.begin(), small_models.end());

  std::vector<const Interpretation*> stray;  // big restrictions outside small
  for (const auto& [restriction, sources] : by_restriction) {
    if (!small_set.count(restriction)) stray.push_back(sources.front());
    if (sources.size() > 1) {
      clean = false;
      report.witnesses.push_back(
          {"injectivity", u,
           {*sources[0], *sources[1]},
           "two distinct models of the larger side share the restriction " +
               to_string(restriction)});
    }
  }
  if (!stray.empty()) {
    clean = false;
    const Interpretation* m = pick_minimal(stray);
    report.witnesses.push_back(
        {"model-correspondence", u, {*m, restrict_to(*m, small_preds)},
         "restriction of this model of the larger side is not a model of the "
         "smaller side"});
  }

  std::vector<const Interpretation*> uncovered;
  for (const Interpretation& m : small_models)
    if (!by_restriction.count(m)) uncovered.push_back(&m);
  if (!uncovered.empty()) {
    clean = false;
    report.witnesses.push_back(
        {"model-correspondence", u, {*pick_minimal(uncovered)},
         "no model of the larger side restricts to this model of the smaller "
         "side"});
  }
  return clean;
}

// Set equality with a minimal differing witness.
bool same_model_sets(const std::vector<Interpretation>& left,
                     const std::vector<Interpretation>& right,
                     const Universe& u, const std::string& left_name,
                     const std::string& right_name, Report& report) {
  std::set<Interpretation> ls(left.begin(), left.end());
  std::set<Interpretation> rs(right.begin(), right.end());
  std::vector<const Interpretation*> only_left, only_right;
  for (const Interpretation& m : left)
    if (!rs.count(m)) only_left.push_back(&m);
  for (const Interpretation& m : right)
    if (!ls.count(m)) only_right.push_back(&m);
  if (only_left.empty() && only_right.empty()) return true;

  if (!only_left.empty())
    report.witnesses.push_back({"model-sets-differ", u, {*pick_minimal(only_left)},
                                "model of " + left_name + " only"});
  if (!only_right.empty())
    report.witnesses.push_back({"model-sets-differ", u, {*pick_minimal(only_right)},
                                "model of " + right_name + " only"});
  return false;
}

SolveOptions solve_options(const VerifyOptions& opts) {
  SolveOptions s;
  s.max_atoms = opts.max_atoms;
  return s;
}

// Preconditions shared by the conservative-extension checks; empty string
// when satisfied.
std::string ce_precondition(const DefModule& small, const DefModule& big) {
  PredSet small_preds = predicate_signature(small.program);
  PredSet big_preds = predicate_signature(big.program);
  for (const std::string& p : small_preds)
    if (!big_preds.count(p))
      return "predicate '" + p + "' of the smaller side does not occur in the "
             "larger side";
  if (signature_of(small.program).functions != signature_of(big.program).functions)
    return "the two sides do not share the same function symbols";
  PredSet small_tuple = small.intensional_set();
  PredSet big_tuple = big.intensional_set();
  for (const std::string& p : small_tuple)
    if (!big_tuple.count(p))
      return "intensional predicate '" + p +
             "' of the smaller side is missing from the larger tuple";
  for (const std::string& p : big_tuple) {
    if (small_tuple.count(p)) continue;
    if (small_preds.count(p) || !big_preds.count(p))
      return "extra intensional predicate '" + p +
             "' is not drawn from the larger side's new predicates";
  }
  return "";
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

Report check_equivalence(const DefModule& m1, const DefModule& m2,
                         const std::vector<Universe>& universes,
                         const VerifyOptions& opts) {
  if (m1.intensional_set() != m2.intensional_set())
    return inconclusive("precondition: the def-modules have different "
                        "intensional tuples");
  try {
    merge(signature_of(m1.program), signature_of(m2.program));
  } catch (const ArityConflictError& e) {
    return inconclusive(std::string("precondition: incompatible signatures (") +
                        e.what() + ")");
  }

  Report report;
  report.verdict = Verdict::Pass;
  PredSet tuple = m1.intensional_set();
  for (const Universe& raw : universes) {
    Universe u = normalized(raw);
    report.universes_checked.push_back(u);
    std::vector<Interpretation> s1, s2;
    try {
      s1 = p_stable_models(m1.program, tuple, u, solve_options(opts));
      s2 = p_stable_models(m2.program, tuple, u, solve_options(opts));
    } catch (const BoundError& e) {
      return inconclusive(std::string("bound: ") + e.what());
    }

    // With different predicate signatures the comparison happens over the
    // joint base; atoms absent from one side are unconstrained there.
    PredSet p1 = predicate_signature(m1.program);
    PredSet p2 = predicate_signature(m2.program);
    if (p1 != p2) {
      GroundProgram g1 = ground(m1.program, u);
      GroundProgram g2 = ground(m2.program, u);
      std::set<GroundAtom> base1(g1.atoms.begin(), g1.atoms.end());
      std::set<GroundAtom> base2(g2.atoms.begin(), g2.atoms.end());
      std::set<GroundAtom> joint = base1;
      joint.insert(base2.begin(), base2.end());
      if (joint.size() > opts.max_atoms)
        return inconclusive("bound: the joint Herbrand base has " +
                            std::to_string(joint.size()) + " atoms, above the cap");
      auto extend = [&](std::vector<Interpretation> models,
                        const std::set<GroundAtom>& own) {
        std::vector<GroundAtom> extra;
        for (const GroundAtom& a : joint)
          if (!own.count(a)) extra.push_back(a);
        std::vector<Interpretation> out;
        for (const Interpretation& m : models) {
          std::size_t combinations = std::size_t{1} << extra.size();
          for (std::size_t bits = 0; bits < combinations; ++bits) {
            Interpretation e = m;
            for (std::size_t k = 0; k < extra.size(); ++k)
              if (bits & (std::size_t{1} << k)) e.true_atoms.insert(extra[k]);
            out.push_back(std::move(e));
          }
        }
        return out;
      };
      s1 = extend(std::move(s1), base1);
      s2 = extend(std::move(s2), base2);
    }

    report.stats.push_back({u, s1.size(), s2.size()});
    if (!same_model_sets(s1, s2, u, "the first def-module",
                         "the second def-module", report))
      report.verdict = Verdict::Fail;
  }
  return report;
}

Report modular_conservative_extension(const ModularProgram& small,
                                      const ModularProgram& big,
                                      const std::vector<Universe>& universes,
                                      const VerifyOptions& opts) {
  PredSet small_preds = pi(small);
  PredSet big_preds = pi(big);
  for (const std::string& p : small_preds)
    if (!big_preds.count(p))
      return inconclusive("precondition: predicate '" + p +
                          "' of the smaller side does not occur in the larger "
                          "side");
  if (sigma(small).functions != sigma(big).functions)
    return inconclusive(
        "precondition: the two sides do not share the same function symbols");

  Report report;
  report.verdict = Verdict::Pass;
  for (const Universe& raw : universes) {
    Universe u = normalized(raw);
    report.universes_checked.push_back(u);
    std::vector<Interpretation> s, b;
    try {
      s = modular_stable_models(small, u, solve_options(opts));
      b = modular_stable_models(big, u, solve_options(opts));
    } catch (const BoundError& e) {
      return inconclusive(std::string("bound: ") + e.what());
    }
    report.stats.push_back({u, s.size(), b.size()});
    if (!bijection_check(s, b, small_preds, u, report))
      report.verdict = Verdict::Fail;
  }
  return report;
}

Report check_conservative_extension(const DefModule& small, const DefModule& big,
                                    const std::vector<Universe>& universes,
                                    const VerifyOptions& opts) {
  if (std::string problem = ce_precondition(small, big); !problem.empty())
    return inconclusive("precondition: " + problem);
  ModularProgram s{{small}};
  ModularProgram b{{big}};
  return modular_conservative_extension(s, b, universes, opts);
}

Report check_splitting(const ModularProgram& mp,
                       const std::vector<Universe>& universes,
                       const VerifyOptions& opts) {
  CoherenceDiagnostics d = is_coherent(mp);
  Report report;
  report.verdict = Verdict::Pass;
  if (!d.coherent) {
    report.verdict = Verdict::Inconclusive;
    std::string why;
    if (!d.simple) why = "the program is not simple";
    else if (!d.tuples_disjoint) why = "intensional tuples overlap";
    else {
      why = "a strongly connected component spans modules";
      if (!d.uncovered_sccs.empty()) {
        why += " (";
        const auto& c = d.uncovered_sccs.front();
        for (std::size_t i = 0; i < c.size(); ++i)
          why += (i ? ", " : "") + c[i];
        why += ")";
      }
    }
    report.reason = "precondition: the modular program is not coherent: " + why;
  }

  PredSet tuple = iota(mp);
  Program conj = conjunction(mp);
  for (const Universe& raw : universes) {
    Universe u = normalized(raw);
    report.universes_checked.push_back(u);
    std::vector<Interpretation> left, right;
    try {
      left = modular_stable_models(mp, u, solve_options(opts));
      right = p_stable_models(conj, tuple, u, solve_options(opts));
    } catch (const BoundError& e) {
      return inconclusive(std::string("bound: ") + e.what());
    }
    report.stats.push_back({u, left.size(), right.size()});
    bool same = same_model_sets(left, right, u, "the modular program",
                                "the conjunction", report);
    if (!same && report.verdict == Verdict::Pass) report.verdict = Verdict::Fail;
  }
  return report;
}

Report check_projection(const Program& p, const std::vector<ProjectionSpec>& specs,
                        const std::vector<Universe>& universes,
                        const VerifyOptions& opts) {
  Program projected = project_program(p, specs);
  std::vector<std::string> small_tuple;
  for (const std::string& name : predicate_signature(p))
    small_tuple.push_back(name);
  std::vector<std::string> big_tuple = small_tuple;
  for (const ProjectionSpec& spec : specs) big_tuple.push_back(spec.fresh);

  DefModule small("original", std::move(small_tuple), p);
  DefModule big("projected", std::move(big_tuple), projected);
  return check_conservative_extension(small, big, universes, opts);
}

Report ce_in_context(const DefModule& small, const DefModule& big,
                     const ModularProgram& context,
                     const std::vector<Universe>& universes,
                     const VerifyOptions& opts) {
  if (std::string problem = ce_precondition(small, big); !problem.empty())
    return inconclusive("precondition: " + problem);
  PredSet extras;
  PredSet small_preds = predicate_signature(small.program);
  for (const std::string& p : predicate_signature(big.program))
    if (!small_preds.count(p)) extras.insert(p);
  for (const std::string& p : pi(context))
    if (extras.count(p))
      return inconclusive("precondition: the context mentions '" + p +
                          "', one of the larger side's new predicates");

  ModularProgram with_small = context;
  with_small.modules.push_back(small);
  ModularProgram with_big = context;
  with_big.modules.push_back(big);
  return modular_conservative_extension(with_small, with_big, universes, opts);
}

}  // namespace modsm
