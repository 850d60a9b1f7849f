#ifndef MODSM_MODULAR_HPP
#define MODSM_MODULAR_HPP

#include <optional>
#include <string>
#include <vector>

#include <modsm/stable.hpp>
#include <modsm/syntax.hpp>

namespace modsm {

// A def-module: a program paired with its tuple of intensional predicates.
// The module name is metadata only; the semantics depend solely on the
// tuple and the rules.
struct DefModule {
  std::string name;
  std::vector<std::string> intensional;  // ordered, duplicate-free
  Program program;

  DefModule() = default;
  // Throws SemanticError when the tuple repeats a predicate or names one
  // that does not occur in the program.
  DefModule(std::string name, std::vector<std::string> intensional,
            Program program);

  PredSet intensional_set() const {
    return PredSet(intensional.begin(), intensional.end());
  }

  friend bool operator==(const DefModule&, const DefModule&) = default;
};

// A finite set of def-modules.  An interpretation over the joint signature
// is a stable model when its restriction to each module's signature is
// p-stable for that module.
struct ModularProgram {
  std::vector<DefModule> modules;

  friend bool operator==(const ModularProgram&, const ModularProgram&) = default;
};

// sigma: union of the modules' signatures.  Throws ArityConflictError when
// modules disagree on a symbol's arity.
Signature sigma(const ModularProgram& mp);

// iota: union of the intensional tuples.
PredSet iota(const ModularProgram& mp);

// pi: union of the modules' predicate signatures.
PredSet pi(const ModularProgram& mp);

// The conjunction of all module programs, as one rule list.
Program conjunction(const ModularProgram& mp);

// Every module is grounded over the same universe (by default the constants
// of sigma(mp)), since an interpretation over sigma(mp) is restricted to
// each module's signature.
std::vector<Interpretation> modular_stable_models(
    const ModularProgram& mp,
    const std::optional<std::vector<Term>>& universe = {},
    const SolveOptions& opts = {});

// Drops the atoms whose predicate lies outside the signature; the universe
// is left unchanged.
Interpretation restrict_to(const Interpretation& i, const Signature& sig);
Interpretation restrict_to(const Interpretation& i, const PredSet& predicates);

}  // namespace modsm

#endif  // MODSM_MODULAR_HPP
