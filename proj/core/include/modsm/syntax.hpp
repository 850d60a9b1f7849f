#ifndef MODSM_SYNTAX_HPP
#define MODSM_SYNTAX_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <modsm/errors.hpp>

namespace modsm {

// Abstract syntax of traditional and modular programs.
//
// A rule keeps its atoms in four buckets
//
//   h1 ; ... ; hk :- p1, ..., pl, not n1, ..., not nm, not not d1, ..., not not dn.
//
// (head / pos / neg / negneg).  Equality atoms may appear in pos and neg but
// never in head or negneg; that restriction is enforced when a Rule is
// constructed and surfaces as a parse error for textual input.

// A term: variable, object constant, or positive-arity function application.
// Arity-0 function symbols are represented as Constant.
struct Term {
  enum class Kind { Variable, Constant, Function };

  Kind kind = Kind::Constant;
  std::string name;
  std::vector<Term> args;  // non-empty only for Kind::Function

  static Term variable(std::string name) { return {Kind::Variable, std::move(name), {}}; }
  static Term constant(std::string name) { return {Kind::Constant, std::move(name), {}}; }
  static Term function(std::string name, std::vector<Term> args);

  // hand-written: a defaulted comparison cannot see through the recursion
  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);
};

// A predicate atom p(t1, ..., tn) or an equality atom t1 = t2.
// Equality atoms have an empty predicate name and exactly two args.
struct Atom {
  std::string predicate;
  std::vector<Term> args;
  bool equality = false;

  static Atom pred(std::string name, std::vector<Term> args = {}) {
    return {std::move(name), std::move(args), false};
  }
  static Atom eq(Term lhs, Term rhs) {
    return {std::string(), {std::move(lhs), std::move(rhs)}, true};
  }

  const Term& lhs() const { return args[0]; }
  const Term& rhs() const { return args[1]; }

  friend auto operator<=>(const Atom&, const Atom&) = default;
};

struct Rule {
  std::vector<Atom> head;    // may not contain equality
  std::vector<Atom> pos;
  std::vector<Atom> neg;
  std::vector<Atom> negneg;  // may not contain equality

  Rule() = default;
  // Validating constructor: throws SemanticError if an equality atom sits in
  // head or negneg.
  Rule(std::vector<Atom> head, std::vector<Atom> pos, std::vector<Atom> neg,
       std::vector<Atom> negneg);

  bool is_fact() const { return pos.empty() && neg.empty() && negneg.empty(); }
  bool is_constraint() const { return head.empty(); }

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

// Rules are kept in source order for rendering and rule-indexed addressing;
// every semantic operation treats the list as a set.
struct Program {
  std::vector<Rule> rules;

  friend auto operator<=>(const Program&, const Program&) = default;
};

// Function and predicate symbols with their arities.  Equality is never a
// member.  Arity-0 function symbols are the object constants.
struct Signature {
  std::map<std::string, int> functions;
  std::map<std::string, int> predicates;

  // Object constants as ground terms, in name order.
  std::vector<Term> constants() const;
  bool has_positive_arity_function() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

using PredSet = std::set<std::string>;

// All function and predicate symbols occurring in the program, with arities.
// Throws ArityConflictError if a symbol occurs with two arities.
Signature signature_of(const Program& p);

// Merge two signatures; throws ArityConflictError on disagreement.
Signature merge(Signature a, const Signature& b);

// pi: the predicate symbols of the program (equality excluded).
PredSet predicate_signature(const Program& p);

struct RuleVars {
  std::set<std::string> head;
  std::set<std::string> body;
};

// Variables of the head atoms and of the body atoms (pos, neg, negneg).
RuleVars rule_variables(const Rule& r);

bool is_ground(const Term& t);
bool is_ground(const Atom& a);
bool is_ground(const Rule& r);

// Variables of a term / atom appended to `out` in first-occurrence order.
void collect_variables(const Term& t, std::vector<std::string>& out);
void collect_variables(const Atom& a, std::vector<std::string>& out);

// Plain text forms.  Terms render as written; atoms use ", " between
// arguments ("q(X, Y)"); equality renders as "X = Y".
std::string to_string(const Term& t);
std::string to_string(const Atom& a);

// Rule in .lp syntax, ending in ".".  Negated equality renders as "t1 != t2";
// other negated atoms as "not a" and "not not a".
std::string to_string(const Rule& r);

}  // namespace modsm

#endif  // MODSM_SYNTAX_HPP
