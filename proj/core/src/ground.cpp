#include <modsm/ground.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace modsm {

std::vector<Term> herbrand_universe(const Signature& sig,
                                    std::optional<int> max_depth) {
  std::vector<Term> terms = sig.constants();
  if (terms.empty())
    throw UniverseError(
        "signature has no object constant; a non-empty Herbrand universe "
        "requires at least one");
  if (!sig.has_positive_arity_function()) return terms;
  if (!max_depth)
    throw UniverseError(
        "signature has positive-arity function symbols; the Herbrand "
        "universe is infinite unless a term depth bound is given");

  std::set<Term> seen(terms.begin(), terms.end());
  std::vector<Term> frontier = terms;  // everything built so far
  for (int depth = 1; depth <= *max_depth; ++depth) {
    std::vector<Term> grown = frontier;
    for (const auto& [name, arity] : sig.functions) {
      if (arity == 0) continue;
      // every arity-tuple over the terms of depth < current
      std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
      while (true) {
        std::vector<Term> args;
        args.reserve(pick.size());
        for (std::size_t i : pick) args.push_back(frontier[i]);
        Term t = Term::function(name, std::move(args));
        if (seen.insert(t).second) grown.push_back(std::move(t));
        std::size_t k = pick.size();
        while (k > 0 && ++pick[k - 1] == frontier.size()) pick[--k] = 0;
        if (k == 0) break;
      }
    }
    frontier = std::move(grown);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

namespace {

using Substitution = std::map<std::string, Term>;

Term substitute(const Term& t, const Substitution& s) {
  switch (t.kind) {
    case Term::Kind::Variable:
      return s.at(t.name);
    case Term::Kind::Constant:
      return t;
    case Term::Kind::Function: {
      std::vector<Term> args;
      args.reserve(t.args.size());
      for (const Term& a : t.args) args.push_back(substitute(a, s));
      return Term::function(t.name, std::move(args));
    }
  }
  return t;
}

Atom substitute(const Atom& a, const Substitution& s) {
  Atom out = a;
  for (Term& t : out.args) t = substitute(t, s);
  return out;
}

std::vector<Atom> substitute(const std::vector<Atom>& atoms, const Substitution& s) {
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const Atom& a : atoms) out.push_back(substitute(a, s));
  return out;
}

GroundAtom to_ground(const Atom& a) { return {a.predicate, a.args}; }

}  // namespace

std::vector<Rule> instances(const Rule& r, const std::vector<Term>& universe) {
  std::vector<std::string> vars;
  for (const auto* bucket : {&r.head, &r.pos, &r.neg, &r.negneg})
    for (const Atom& a : *bucket) collect_variables(a, vars);

  if (vars.empty()) return {r};
  if (universe.empty()) return {};

  std::vector<Rule> out;
  std::vector<std::size_t> pick(vars.size(), 0);
  while (true) {
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s.emplace(vars[i], universe[pick[i]]);
    out.emplace_back(substitute(r.head, s), substitute(r.pos, s), substitute(r.neg, s),
                     substitute(r.negneg, s));
    std::size_t k = pick.size();
    while (k > 0 && ++pick[k - 1] == universe.size()) pick[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

std::optional<GroundRule> simplify_equalities(const Rule& ground_rule) {
  GroundRule out;
  for (const Atom& a : ground_rule.head) out.head.push_back(to_ground(a));
  for (const Atom& a : ground_rule.negneg) out.negneg.push_back(to_ground(a));
  // pos: a true equality is dropped, a false one makes the body false
  for (const Atom& a : ground_rule.pos) {
    if (!a.equality) {
      out.pos.push_back(to_ground(a));
      continue;
    }
    if (a.lhs() != a.rhs()) return std::nullopt;
  }
  // neg: "not t1 = t2" is false when the terms are identical
  for (const Atom& a : ground_rule.neg) {
    if (!a.equality) {
      out.neg.push_back(to_ground(a));
      continue;
    }
    if (a.lhs() == a.rhs()) return std::nullopt;
  }
  return out;
}

GroundProgram ground(const Program& p, const std::vector<Term>& universe) {
  GroundProgram out;
  out.universe = universe;
  std::sort(out.universe.begin(), out.universe.end());
  out.universe.erase(std::unique(out.universe.begin(), out.universe.end()),
                     out.universe.end());

  std::set<GroundRule> rules;
  for (const Rule& r : p.rules)
    for (const Rule& inst : instances(r, out.universe))
      if (auto g = simplify_equalities(inst)) rules.insert(std::move(*g));
  out.rules.assign(rules.begin(), rules.end());

  // Herbrand base: every predicate over every argument tuple, plus any rule
  // atom whose arguments nest deeper than the universe (these arise when a
  // rule applies a function symbol to universe terms).
  Signature sig = signature_of(p);
  std::set<GroundAtom> base;
  for (const GroundRule& r : out.rules)
    for (const auto* bucket : {&r.head, &r.pos, &r.neg, &r.negneg})
      for (const GroundAtom& a : *bucket) base.insert(a);
  for (const auto& [pred, arity] : sig.predicates) {
    if (arity == 0) {
      base.insert({pred, {}});
      continue;
    }
    if (out.universe.empty()) continue;
    std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
    while (true) {
      std::vector<Term> args;
      args.reserve(pick.size());
      for (std::size_t i : pick) args.push_back(out.universe[i]);
      base.insert({pred, std::move(args)});
      std::size_t k = pick.size();
      while (k > 0 && ++pick[k - 1] == out.universe.size()) pick[--k] = 0;
      if (k == 0) break;
    }
  }
  out.atoms.assign(base.begin(), base.end());
  return out;
}

std::string to_string(const GroundAtom& a) {
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ",";
    out += to_string(a.args[i]);
  }
  return out + ")";
}

std::string to_string(const GroundRule& r) { return to_string(to_rule(r)); }

Atom to_atom(const GroundAtom& a) { return Atom::pred(a.predicate, a.args); }

Rule to_rule(const GroundRule& r) {
  Rule out;
  for (const GroundAtom& a : r.head) out.head.push_back(to_atom(a));
  for (const GroundAtom& a : r.pos) out.pos.push_back(to_atom(a));
  for (const GroundAtom& a : r.neg) out.neg.push_back(to_atom(a));
  for (const GroundAtom& a : r.negneg) out.negneg.push_back(to_atom(a));
  return out;
}

}  // namespace modsm
