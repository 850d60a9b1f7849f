#ifndef MODSM_SOLVE_INTERNAL_HPP
#define MODSM_SOLVE_INTERNAL_HPP

// Clause-level machinery shared by the model enumeration paths.  Not
// installed; everything here is an implementation detail of the core
// library.

#include <functional>
#include <vector>

#include <modsm/ground.hpp>

namespace modsm::detail {

// Literal encoding: variable v as v+1 (positive) or -(v+1) (negative).
using Clause = std::vector<int>;

struct AtomIndex {
  std::vector<GroundAtom> atoms;  // sorted ascending

  explicit AtomIndex(std::vector<GroundAtom> sorted_atoms)
      : atoms(std::move(sorted_atoms)) {}

  int size() const { return static_cast<int>(atoms.size()); }
  // Index of the atom, or -1 when it is not part of the base.
  int index_of(const GroundAtom& a) const;
};

// One classical clause per rule: not-pos | neg | not-negneg | head.
// Tautological clauses are dropped.
std::vector<Clause> classical_clauses(const std::vector<GroundRule>& rules,
                                      const AtomIndex& base);

bool clause_satisfied(const Clause& c, const std::vector<char>& model);
bool all_satisfied(const std::vector<Clause>& clauses,
                   const std::vector<char>& model);

// Complete backtracking enumeration of every total assignment satisfying the
// clauses.  Deterministic: branches on the lowest unassigned variable, false
// before true.
void enumerate_models(int nvars, const std::vector<Clause>& clauses,
                      const std::function<void(const std::vector<char>&)>& emit);

// Satisfiability with unit propagation; fills *model_out when satisfiable.
bool satisfiable(int nvars, const std::vector<Clause>& clauses,
                 std::vector<char>* model_out = nullptr);

// Core of the stability condition.  Given a classical model of the rules,
// decides whether some assignment u strictly below the model on the
// intensional atoms satisfies the transformed conjunction F*(u).  Under
// u <= model the transform collapses per rule to a positive implication over
// the true intensional atoms, which is searched exhaustively as a clause set.
bool exists_smaller_star_model(const std::vector<GroundRule>& rules,
                               const AtomIndex& base,
                               const std::vector<char>& model,
                               const std::vector<char>& intensional);

}  // namespace modsm::detail

#endif  // MODSM_SOLVE_INTERNAL_HPP
