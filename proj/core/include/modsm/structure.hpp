#ifndef MODSM_STRUCTURE_HPP
#define MODSM_STRUCTURE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <modsm/modular.hpp>

namespace modsm {

// The dependency graph of a simple modular program: one vertex per predicate
// of the intensional signature, and an edge p -> q whenever some module has
// a rule with p in the head and q in the positive part of the body.
// Negative and doubly negated body atoms and equality atoms contribute no
// edges.
struct DepGraph {
  std::set<std::string> vertices;
  std::set<std::pair<std::string, std::string>> edges;

  friend bool operator==(const DepGraph&, const DepGraph&) = default;
};

struct SimplicityViolation {
  std::string module;
  std::size_t rule_index;  // within the module
  std::string predicate;   // in the head but not in the tuple
};

struct CoherenceDiagnostics {
  bool coherent = false;
  bool simple = false;
  std::vector<SimplicityViolation> simplicity_violations;
  // condition (i): intensional tuples pairwise disjoint
  bool tuples_disjoint = false;
  std::vector<std::pair<std::string, std::pair<std::string, std::string>>>
      overlaps;  // predicate shared by two modules
  // condition (ii): every strongly connected component inside one tuple
  bool sccs_covered = false;
  std::vector<std::vector<std::string>> uncovered_sccs;
  // full component listing (populated when the program is simple)
  std::vector<std::vector<std::string>> sccs;
};

// True when every head predicate of every module occurs in that module's
// intensional tuple.  Violations are appended to *out when given.
bool is_simple(const ModularProgram& mp,
               std::vector<SimplicityViolation>* out = nullptr);

// Requires is_simple(mp); throws PreconditionError otherwise.
DepGraph dependency_graph(const ModularProgram& mp);

// Strongly connected components, each sorted, listed by smallest member.
std::vector<std::vector<std::string>> sccs(const DepGraph& g);

// Simplicity + condition (i) + condition (ii), with diagnostics.
CoherenceDiagnostics is_coherent(const ModularProgram& mp);

// DOT rendering of the dependency graph, vertices and edges sorted.
std::string to_dot(const DepGraph& g);

}  // namespace modsm

#endif  // MODSM_STRUCTURE_HPP
