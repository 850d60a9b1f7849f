#include <modsm/modular.hpp>

#include <algorithm>
#include <set>

#include "solve_internal.hpp"

namespace modsm {

DefModule::DefModule(std::string name, std::vector<std::string> intensional,
                     Program program)
    : name(std::move(name)),
      intensional(std::move(intensional)),
      program(std::move(program)) {
  PredSet occurring = predicate_signature(this->program);
  PredSet seen;
  for (const std::string& p : this->intensional) {
    if (!seen.insert(p).second)
      throw SemanticError("module '" + this->name +
                          "': duplicate intensional predicate '" + p + "'");
    if (!occurring.count(p))
      throw SemanticError("module '" + this->name + "': intensional predicate '" +
                          p + "' does not occur in the module's rules");
  }
}

Signature sigma(const ModularProgram& mp) {
  Signature out;
  for (const DefModule& m : mp.modules) out = merge(out, signature_of(m.program));
  return out;
}

PredSet iota(const ModularProgram& mp) {
  PredSet out;
  for (const DefModule& m : mp.modules)
    out.insert(m.intensional.begin(), m.intensional.end());
  return out;
}

PredSet pi(const ModularProgram& mp) {
  PredSet out;
  for (const DefModule& m : mp.modules) {
    PredSet preds = predicate_signature(m.program);
    out.insert(preds.begin(), preds.end());
  }
  return out;
}

Program conjunction(const ModularProgram& mp) {
  Program out;
  for (const DefModule& m : mp.modules)
    out.rules.insert(out.rules.end(), m.program.rules.begin(),
                     m.program.rules.end());
  return out;
}

namespace {

bool mentions_variable(const Program& p) {
  for (const Rule& r : p.rules) {
    RuleVars vars = rule_variables(r);
    if (!vars.head.empty() || !vars.body.empty()) return true;
  }
  return false;
}

std::vector<std::string> sorted_atom_strings(const Interpretation& i) {
  std::vector<std::string> out;
  for (const GroundAtom& a : i.true_atoms) out.push_back(to_string(a));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Interpretation> modular_stable_models(
    const ModularProgram& mp, const std::optional<std::vector<Term>>& universe,
    const SolveOptions& opts) {
  Signature sig = sigma(mp);  // also surfaces cross-module arity conflicts
  std::vector<Term> u = universe ? *universe : sig.constants();
  std::sort(u.begin(), u.end());
  u.erase(std::unique(u.begin(), u.end()), u.end());
  if (u.empty()) {
    for (const DefModule& m : mp.modules)
      if (mentions_variable(m.program))
        throw UniverseError(
            "modular program has rules with variables but no object constant "
            "to ground them over");
  }

  // The joint ground program supplies the base and the classical prefilter;
  // its rule set is the union of the modules' ground rules.
  GroundProgram joint = ground(conjunction(mp), u);
  detail::AtomIndex base(joint.atoms);
  if (joint.atoms.size() > opts.max_atoms)
    throw BoundError(joint.atoms.size(), opts.max_atoms);
  auto joint_clauses = detail::classical_clauses(joint.rules, base);

  struct CompiledModule {
    GroundProgram program;
    detail::AtomIndex base;
    std::vector<char> intensional;
    std::vector<int> from_joint;  // module atom index -> joint atom index
  };
  std::vector<CompiledModule> compiled;
  for (const DefModule& m : mp.modules) {
    GroundProgram g = ground(m.program, u);
    detail::AtomIndex mbase(g.atoms);
    std::vector<char> imask(mbase.atoms.size(), 0);
    PredSet tuple = m.intensional_set();
    std::vector<int> from_joint(mbase.atoms.size(), -1);
    for (std::size_t k = 0; k < mbase.atoms.size(); ++k) {
      if (tuple.count(mbase.atoms[k].predicate)) imask[k] = 1;
      from_joint[k] = base.index_of(mbase.atoms[k]);
    }
    compiled.push_back(
        {std::move(g), std::move(mbase), std::move(imask), std::move(from_joint)});
  }

  std::vector<Interpretation> models;
  detail::enumerate_models(base.size(), joint_clauses,
                           [&](const std::vector<char>& m) {
    for (const CompiledModule& cm : compiled) {
      std::vector<char> local(cm.base.atoms.size(), 0);
      for (std::size_t k = 0; k < local.size(); ++k)
        local[k] = m[static_cast<std::size_t>(cm.from_joint[k])];
      if (detail::exists_smaller_star_model(cm.program.rules, cm.base, local,
                                            cm.intensional))
        return;
    }
    Interpretation i;
    i.universe = joint.universe;
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v]) i.true_atoms.insert(base.atoms[v]);
    models.push_back(std::move(i));
  });

  std::sort(models.begin(), models.end(),
            [](const Interpretation& a, const Interpretation& b) {
              return sorted_atom_strings(a) < sorted_atom_strings(b);
            });
  return models;
}

Interpretation restrict_to(const Interpretation& i, const Signature& sig) {
  PredSet preds;
  for (const auto& [name, arity] : sig.predicates) preds.insert(name);
  return restrict_to(i, preds);
}

Interpretation restrict_to(const Interpretation& i, const PredSet& predicates) {
  Interpretation out;
  out.universe = i.universe;
  for (const GroundAtom& a : i.true_atoms)
    if (predicates.count(a.predicate)) out.true_atoms.insert(a);
  return out;
}

}  // namespace modsm
