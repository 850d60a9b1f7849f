#include <modsm/rewrite.hpp>

#include <algorithm>
#include <functional>
#include <map>

namespace modsm {

Program shift(const Program& f, const PredSet& keep) {
  Program out;
  out.rules.reserve(f.rules.size());
  for (const Rule& r : f.rules) {
    std::vector<Atom> head, neg = r.neg;
    for (const Atom& a : r.head) {
      if (keep.count(a.predicate))
        head.push_back(a);
      else
        neg.push_back(a);
    }
    out.rules.emplace_back(std::move(head), r.pos, std::move(neg), r.negneg);
  }
  return out;
}

namespace {

std::vector<BodyLiteral> body_literals(const Rule& r) {
  std::vector<BodyLiteral> out;
  for (const Atom& a : r.pos) out.push_back({a, Polarity::Pos});
  for (const Atom& a : r.neg) out.push_back({a, Polarity::Neg});
  for (const Atom& a : r.negneg) out.push_back({a, Polarity::NegNeg});
  return out;
}

bool contains_any(const Atom& a, const std::set<std::string>& vars) {
  std::vector<std::string> found;
  collect_variables(a, found);
  return std::any_of(found.begin(), found.end(),
                     [&](const std::string& v) { return vars.count(v) > 0; });
}

Rule from_parts(std::vector<Atom> head, const std::vector<BodyLiteral>& front,
                const std::vector<BodyLiteral>& rest) {
  std::vector<Atom> pos, neg, negneg;
  auto place = [&](const BodyLiteral& lit) {
    switch (lit.polarity) {
      case Polarity::Pos: pos.push_back(lit.atom); break;
      case Polarity::Neg: neg.push_back(lit.atom); break;
      case Polarity::NegNeg: negneg.push_back(lit.atom); break;
    }
  };
  for (const BodyLiteral& lit : front) place(lit);
  for (const BodyLiteral& lit : rest) place(lit);
  return Rule(std::move(head), std::move(pos), std::move(neg), std::move(negneg));
}

}  // namespace

ProjectionParts decompose(const Rule& r, const std::vector<std::string>& x) {
  if (x.empty())
    throw PreconditionError("projection requires a non-empty variable tuple");
  RuleVars vars = rule_variables(r);
  std::set<std::string> xs(x.begin(), x.end());
  for (const std::string& v : x) {
    if (vars.head.count(v))
      throw PreconditionError("variable '" + v +
                              "' occurs in the rule head and cannot be projected");
    if (!vars.body.count(v))
      throw PreconditionError("variable '" + v +
                              "' does not occur in the rule body");
  }

  ProjectionParts parts;
  parts.gamma = r.head;
  std::vector<std::string> alpha_vars;
  for (const BodyLiteral& lit : body_literals(r)) {
    if (contains_any(lit.atom, xs)) {
      parts.alpha.push_back(lit);
      collect_variables(lit.atom, alpha_vars);
    } else {
      parts.beta.push_back(lit);
    }
  }
  for (const std::string& v : alpha_vars)
    if (!xs.count(v)) parts.y.push_back(v);
  return parts;
}

std::pair<Rule, Rule> project_rule(const Rule& r, const std::vector<std::string>& x,
                                   const std::string& fresh) {
  PredSet used = predicate_signature(Program{{r}});
  if (used.count(fresh))
    throw SemanticError("fresh predicate '" + fresh +
                        "' already occurs in the rule being projected");
  ProjectionParts parts = decompose(r, x);
  std::vector<Term> y_terms;
  y_terms.reserve(parts.y.size());
  for (const std::string& v : parts.y) y_terms.push_back(Term::variable(v));
  Atom fresh_atom = Atom::pred(fresh, std::move(y_terms));

  Rule rule1 = from_parts(parts.gamma, {{fresh_atom, Polarity::Pos}}, parts.beta);
  Rule rule2 = from_parts({fresh_atom}, parts.alpha, {});
  return {std::move(rule1), std::move(rule2)};
}

Program project_program(const Program& p, const std::vector<ProjectionSpec>& specs) {
  Program out = p;
  for (const ProjectionSpec& spec : specs) {
    if (spec.rule_index >= out.rules.size())
      throw PreconditionError("projection spec targets rule " +
                              std::to_string(spec.rule_index) +
                              " but the program has " +
                              std::to_string(out.rules.size()) + " rules");
    if (predicate_signature(out).count(spec.fresh))
      throw SemanticError("fresh predicate '" + spec.fresh +
                          "' already occurs in the program");
    auto [rule1, rule2] = project_rule(out.rules[spec.rule_index], spec.vars,
                                       spec.fresh);
    out.rules[spec.rule_index] = std::move(rule1);
    out.rules.push_back(std::move(rule2));
  }
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (int k = 1;; ++k) {
    std::string candidate = base + "_" + std::to_string(k);
    if (!taken.count(candidate)) return candidate;
  }
}

std::vector<ProjectionSpec> auto_projection_specs(const Program& p) {
  std::vector<ProjectionSpec> specs;
  std::set<std::string> taken = predicate_signature(p);
  for (std::size_t idx = 0; idx < p.rules.size(); ++idx) {
    const Rule& r = p.rules[idx];
    RuleVars vars = rule_variables(r);
    std::vector<std::string> candidates;
    for (const auto* bucket : {&r.pos, &r.neg, &r.negneg})
      for (const Atom& a : *bucket) collect_variables(a, candidates);
    std::erase_if(candidates, [&](const std::string& v) {
      return vars.head.count(v) > 0;
    });
    if (candidates.empty()) continue;

    // union body-only variables that co-occur in a literal
    std::map<std::string, std::string> parent;
    for (const std::string& v : candidates) parent[v] = v;
    std::function<std::string(const std::string&)> find =
        [&](const std::string& v) -> std::string {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (const BodyLiteral& lit : body_literals(r)) {
      std::vector<std::string> in_lit;
      collect_variables(lit.atom, in_lit);
      std::erase_if(in_lit, [&](const std::string& v) { return !parent.count(v); });
      for (std::size_t k = 1; k < in_lit.size(); ++k)
        parent[find(in_lit[0])] = find(in_lit[k]);
    }
    std::map<std::string, std::vector<std::string>> groups;
    for (const std::string& v : candidates) groups[find(v)].push_back(v);

    // keep groups in first-occurrence order of their variables
    std::vector<std::vector<std::string>> ordered;
    std::set<std::string> emitted;
    for (const std::string& v : candidates) {
      std::string root = find(v);
      if (emitted.insert(root).second) ordered.push_back(groups[root]);
    }

    for (const std::vector<std::string>& group : ordered) {
      std::set<std::string> xs(group.begin(), group.end());
      std::set<std::string> alpha_vars, beta_vars;
      for (const BodyLiteral& lit : body_literals(r)) {
        std::vector<std::string> in_lit;
        collect_variables(lit.atom, in_lit);
        bool in_alpha = std::any_of(in_lit.begin(), in_lit.end(),
                                    [&](const std::string& v) { return xs.count(v); });
        (in_alpha ? alpha_vars : beta_vars).insert(in_lit.begin(), in_lit.end());
      }
      bool disjoint = std::none_of(alpha_vars.begin(), alpha_vars.end(),
                                   [&](const std::string& v) {
                                     return beta_vars.count(v) > 0;
                                   });
      if (!disjoint) continue;
      std::string fresh = fresh_name("t", taken);
      taken.insert(fresh);
      specs.push_back({idx, group, fresh});
    }
  }
  return specs;
}

}  // namespace modsm
