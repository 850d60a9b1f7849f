#ifndef MODSM_STABLE_HPP
#define MODSM_STABLE_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <modsm/ground.hpp>
#include <modsm/syntax.hpp>

namespace modsm {

// The semantic core.  A ground program is read as a conjunction of formulas
//
//   pos_1 & ... & -neg_1 & ... & --negneg_1 & ... -> head_1 | ... | head_k
//
// over the primitives bottom, and, or, implies; -F abbreviates F -> bottom
// and top abbreviates bottom -> bottom.  An interpretation i is p-stable for
// intensional predicates p when it satisfies the conjunction and no
// assignment u strictly below i on the p-atoms satisfies the transformed
// conjunction F*(u), where
//
//   a*          = u(a)            for intensional atoms a
//   a*          = a               for any other atom
//   (F & G)*    = F* & G*         (and likewise for or)
//   (F -> G)*   = (F* -> G*) & (F -> G)
//
// Answer sets of a program are its pi(program)-stable Herbrand models.

struct GroundFormula {
  enum class Kind { Bottom, Atom, And, Or, Implies };

  Kind kind = Kind::Bottom;
  GroundAtom atom;                      // Kind::Atom only
  std::vector<GroundFormula> children;  // And/Or: any arity; Implies: exactly 2

  static GroundFormula bottom() { return {}; }
  static GroundFormula top();  // bottom -> bottom
  static GroundFormula atom_ref(GroundAtom a);
  static GroundFormula implies(GroundFormula antecedent, GroundFormula consequent);
  static GroundFormula negation(GroundFormula f);  // f -> bottom
  // n-ary connectives; an empty conjunction is top, an empty disjunction is
  // bottom, and a single operand collapses to itself.
  static GroundFormula conjunction(std::vector<GroundFormula> fs);
  static GroundFormula disjunction(std::vector<GroundFormula> fs);

  bool is_top() const;

  friend bool operator==(const GroundFormula&, const GroundFormula&) = default;
};

// A Herbrand interpretation: the set of ground atoms it makes true, over a
// fixed universe of ground terms.
struct Interpretation {
  std::vector<Term> universe;
  std::set<GroundAtom> true_atoms;

  bool contains(const GroundAtom& a) const { return true_atoms.count(a) > 0; }

  friend auto operator<=>(const Interpretation&, const Interpretation&) = default;
};

// Truth values for the intensional atoms (the u predicate variables).
struct StarAssignment {
  std::map<GroundAtom, bool> values;

  // Throws Error if the atom was never assigned.
  bool value(const GroundAtom& a) const;
};

GroundFormula rule_to_formula(const GroundRule& g);

// Classical satisfaction.
bool satisfies(const Interpretation& i, const GroundFormula& f);

// Value of f*(u) under interpretation i and assignment u.  u must be defined
// on every intensional atom of f.
bool star_eval(const GroundFormula& f, const Interpretation& i,
               const StarAssignment& u, const PredSet& intensional);

struct SolveOptions {
  // Model enumeration refuses Herbrand bases larger than this.
  std::size_t max_atoms = 24;
  // Term depth bound for programs with positive-arity function symbols.
  std::optional<int> max_depth;
};

// Decides the stability condition for one candidate: i satisfies g and no u
// strictly below i on the intensional atoms (atoms false in i stay false in
// u) satisfies the transformed conjunction.  The search over u is exhaustive;
// it is pruned by unit propagation but cannot miss a counter-assignment.
bool is_p_stable(const Interpretation& i, const GroundProgram& g,
                 const PredSet& intensional, const SolveOptions& opts = {});

// All p-stable Herbrand models of the program grounded over the universe,
// in canonical order (lexicographic on the sorted atom renderings).
std::vector<Interpretation> p_stable_models(const Program& p,
                                            const PredSet& intensional,
                                            const std::vector<Term>& universe,
                                            const SolveOptions& opts = {});

// Answer sets: pi(p)-stable models over the program's own Herbrand universe.
std::vector<Interpretation> answer_sets(const Program& p,
                                        const SolveOptions& opts = {});

// "{a(1), b(2)}" with atoms in canonical order.
std::string to_string(const Interpretation& i);

// Canonical model order used everywhere models are listed.
bool canonical_less(const Interpretation& a, const Interpretation& b);

}  // namespace modsm

#endif  // MODSM_STABLE_HPP
