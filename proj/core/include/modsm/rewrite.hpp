#ifndef MODSM_REWRITE_HPP
#define MODSM_REWRITE_HPP

#include <set>
#include <string>
#include <utility>
#include <vector>

#include <modsm/syntax.hpp>

namespace modsm {

// Source-to-source transformations: shifting non-intensional head atoms into
// the body, and projecting body-only variables out of a rule through a fresh
// predicate.

// Per rule, every head atom whose predicate is not in `keep` moves to the
// body under negation; everything else is untouched.
Program shift(const Program& f, const PredSet& keep);

enum class Polarity { Pos, Neg, NegNeg };

struct BodyLiteral {
  Atom atom;
  Polarity polarity = Polarity::Pos;

  friend bool operator==(const BodyLiteral&, const BodyLiteral&) = default;
};

// The alpha / beta / gamma split of a rule for projection variables x:
// alpha holds the body literals containing at least one x-variable (with
// their polarities), beta the remaining body literals, gamma the head.  y
// lists the non-x variables of alpha in first-occurrence order over the
// body (pos, then neg, then negneg).
struct ProjectionParts {
  std::vector<BodyLiteral> alpha;
  std::vector<BodyLiteral> beta;
  std::vector<std::string> y;
  std::vector<Atom> gamma;
};

// Throws PreconditionError when x is empty, an x-variable occurs in the
// head, or an x-variable does not occur in the body.
ProjectionParts decompose(const Rule& r, const std::vector<std::string>& x);

// The two replacement rules:  gamma :- fresh(y), beta.  and
// fresh(y) :- alpha.  Body literals keep their polarities.  The fresh
// predicate must not occur in the rule.
std::pair<Rule, Rule> project_rule(const Rule& r,
                                   const std::vector<std::string>& x,
                                   const std::string& fresh);

struct ProjectionSpec {
  std::size_t rule_index = 0;            // into the evolving program
  std::vector<std::string> vars;         // x: non-empty, body-only
  std::string fresh;                     // unused predicate symbol

  friend bool operator==(const ProjectionSpec&, const ProjectionSpec&) = default;
};

// Applies the specs in order.  Each step replaces the target rule in place
// with the first replacement rule and appends the second at the end, so
// earlier indices stay valid for later specs.  Throws PreconditionError on a
// stale index and SemanticError when a fresh name is already a predicate of
// the evolving program.
Program project_program(const Program& p, const std::vector<ProjectionSpec>& specs);

// base, base_1, base_2, ... — first name not in `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

// Convenience: per rule, one spec for each maximal group of body-only
// variables connected by literal co-occurrence, kept only when the group's
// literals share no variable with the rest of the body.  Fresh predicates
// are derived from "t".
std::vector<ProjectionSpec> auto_projection_specs(const Program& p);

}  // namespace modsm

#endif  // MODSM_REWRITE_HPP
