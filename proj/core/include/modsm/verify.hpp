#ifndef MODSM_VERIFY_HPP
#define MODSM_VERIFY_HPP

#include <string>
#include <vector>

#include <modsm/modular.hpp>
#include <modsm/rewrite.hpp>
#include <modsm/stable.hpp>

namespace modsm {

// Executable checks for the relationships between programs: def-module
// equivalence, conservative extensions, splitting, and projection
// correctness.  All checks enumerate Herbrand interpretations over explicit
// finite universes, so a pass is bounded evidence, not a proof; reports list
// the universes that were checked.

enum class Verdict { Pass, Fail, Inconclusive };

struct Witness {
  std::string clause;  // which clause of the definition failed
  std::vector<Term> universe;
  std::vector<Interpretation> interpretations;
  std::string detail;
};

struct UniverseStats {
  std::vector<Term> universe;
  std::size_t left_models = 0;
  std::size_t right_models = 0;
};

struct Report {
  Verdict verdict = Verdict::Inconclusive;
  std::string reason;  // set for inconclusive verdicts
  std::vector<std::vector<Term>> universes_checked;
  std::vector<Witness> witnesses;
  std::vector<UniverseStats> stats;

  bool passed() const { return verdict == Verdict::Pass; }
};

using Universe = std::vector<Term>;

struct VerifyOptions {
  // Checks whose Herbrand base exceeds this are declared inconclusive.
  std::size_t max_atoms = 20;
};

// Do the two def-modules (same intensional tuple) have the same stable
// models over every given universe?  When the predicate signatures differ,
// both model sets are compared over the joint base, with the absent atoms
// free on each side.
Report check_equivalence(const DefModule& m1, const DefModule& m2,
                         const std::vector<Universe>& universes,
                         const VerifyOptions& opts = {});

// Is restriction to the smaller signature a 1-1 correspondence between the
// stable models of big and those of small?  Checks both clauses: the
// restrictions of big's models are exactly small's models, and no two
// distinct big models share a restriction.
Report check_conservative_extension(const DefModule& small, const DefModule& big,
                                    const std::vector<Universe>& universes,
                                    const VerifyOptions& opts = {});

// Same bijection check between two modular programs, restricting to the
// smaller program's predicates.
Report modular_conservative_extension(const ModularProgram& small,
                                      const ModularProgram& big,
                                      const std::vector<Universe>& universes,
                                      const VerifyOptions& opts = {});

// For a coherent modular program: do the stable models coincide with the
// iota-stable models of the conjunction?  Non-coherent input yields an
// inconclusive precondition report that still lists both sides per universe.
Report check_splitting(const ModularProgram& mp,
                       const std::vector<Universe>& universes,
                       const VerifyOptions& opts = {});

// Projects per the specs and checks that the rewritten program is a
// conservative extension of the original, with intensional tuples pi(p) and
// pi(p) + fresh predicates.  Invalid specs propagate as exceptions.
Report check_projection(const Program& p, const std::vector<ProjectionSpec>& specs,
                        const std::vector<Universe>& universes,
                        const VerifyOptions& opts = {});

// Replacing small by big inside the context: conservative extension between
// context + {small} and context + {big}.  The context may not mention any of
// big's extra predicates.
Report ce_in_context(const DefModule& small, const DefModule& big,
                     const ModularProgram& context,
                     const std::vector<Universe>& universes,
                     const VerifyOptions& opts = {});

std::string to_string(Verdict v);

}  // namespace modsm

#endif  // MODSM_VERIFY_HPP
