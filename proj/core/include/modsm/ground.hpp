#ifndef MODSM_GROUND_HPP
#define MODSM_GROUND_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <modsm/syntax.hpp>

namespace modsm {

// Grounding: (1) replace each rule by all of its instances over a universe of
// ground terms, (2) eliminate ground equality atoms, replacing t1 = t2 by
// true when the terms are identical and by false otherwise.  What remains is
// a variable-free, equality-free program.

// A variable-free, equality-free atom.
struct GroundAtom {
  std::string predicate;
  std::vector<Term> args;

  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

// A fully instantiated, equality-free rule.
struct GroundRule {
  std::vector<GroundAtom> head;
  std::vector<GroundAtom> pos;
  std::vector<GroundAtom> neg;
  std::vector<GroundAtom> negneg;

  friend auto operator<=>(const GroundRule&, const GroundRule&) = default;
};

struct GroundProgram {
  std::vector<GroundRule> rules;  // sorted, duplicates collapsed
  std::vector<GroundAtom> atoms;  // the Herbrand base: all atoms over the
                                  // program's predicates and the universe
  std::vector<Term> universe;

  friend bool operator==(const GroundProgram&, const GroundProgram&) = default;
};

// All ground terms over the signature's function symbols up to the given
// nesting depth.  With no positive-arity function symbols the result is
// exactly the object constants and max_depth is ignored.
//
// Throws UniverseError if the signature has no object constant, or if it has
// positive-arity function symbols and no depth bound was given.
std::vector<Term> herbrand_universe(const Signature& sig,
                                    std::optional<int> max_depth = {});

// Step 1 for a single rule: one instance per total substitution of the
// rule's variables by universe elements.  Equality atoms are still present;
// the result size is |universe|^v for v distinct variables.
std::vector<Rule> instances(const Rule& r, const std::vector<Term>& universe);

// Step 2 for a single variable-free rule.  Returns the equality-free rule,
// or nullopt when the rule became vacuously satisfied (an equality made the
// body false) and is dropped.
std::optional<GroundRule> simplify_equalities(const Rule& ground_rule);

// Both steps over a whole program.  The Herbrand base covers every predicate
// of p over the universe, whether or not it survives simplification.
GroundProgram ground(const Program& p, const std::vector<Term>& universe);

// Ground atoms in model output use the compact form "q(1,2)".
std::string to_string(const GroundAtom& a);
// Ground rules render in .lp syntax, like their non-ground counterparts.
std::string to_string(const GroundRule& r);

Atom to_atom(const GroundAtom& a);
Rule to_rule(const GroundRule& r);

}  // namespace modsm

#endif  // MODSM_GROUND_HPP
