#include <modsm/syntax.hpp>

#include <algorithm>

namespace modsm {

Term Term::function(std::string name, std::vector<Term> args) {
  if (args.empty()) return constant(std::move(name));
  return {Kind::Function, std::move(name), std::move(args)};
}

bool operator==(const Term& a, const Term& b) {
  return a.kind == b.kind && a.name == b.name && a.args == b.args;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind <=> b.kind; c != 0) return c;
  if (auto c = a.name <=> b.name; c != 0) return c;
  return std::lexicographical_compare_three_way(a.args.begin(), a.args.end(),
                                                b.args.begin(), b.args.end());
}

Rule::Rule(std::vector<Atom> head, std::vector<Atom> pos, std::vector<Atom> neg,
           std::vector<Atom> negneg)
    : head(std::move(head)),
      pos(std::move(pos)),
      neg(std::move(neg)),
      negneg(std::move(negneg)) {
  for (const Atom& a : this->head)
    if (a.equality)
      throw SemanticError("equality atom '" + to_string(a) +
                          "' may not appear in a rule head");
  for (const Atom& a : this->negneg)
    if (a.equality)
      throw SemanticError("equality atom '" + to_string(a) +
                          "' may not appear under double negation");
}

std::vector<Term> Signature::constants() const {
  std::vector<Term> out;
  for (const auto& [name, arity] : functions)
    if (arity == 0) out.push_back(Term::constant(name));
  return out;
}

bool Signature::has_positive_arity_function() const {
  return std::any_of(functions.begin(), functions.end(),
                     [](const auto& f) { return f.second > 0; });
}

namespace {

void record(std::map<std::string, int>& table, const std::string& name, int arity) {
  auto [it, inserted] = table.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw ArityConflictError(name, it->second, arity);
}

void add_term(Signature& sig, const Term& t) {
  switch (t.kind) {
    case Term::Kind::Variable:
      break;
    case Term::Kind::Constant:
      record(sig.functions, t.name, 0);
      break;
    case Term::Kind::Function:
      record(sig.functions, t.name, static_cast<int>(t.args.size()));
      for (const Term& arg : t.args) add_term(sig, arg);
      break;
  }
}

void add_atom(Signature& sig, const Atom& a) {
  if (!a.equality) record(sig.predicates, a.predicate, static_cast<int>(a.args.size()));
  for (const Term& t : a.args) add_term(sig, t);
}

}  // namespace

Signature signature_of(const Program& p) {
  Signature sig;
  for (const Rule& r : p.rules)
    for (const auto* bucket : {&r.head, &r.pos, &r.neg, &r.negneg})
      for (const Atom& a : *bucket) add_atom(sig, a);
  return sig;
}

Signature merge(Signature a, const Signature& b) {
  for (const auto& [name, arity] : b.functions) record(a.functions, name, arity);
  for (const auto& [name, arity] : b.predicates) record(a.predicates, name, arity);
  return a;
}

PredSet predicate_signature(const Program& p) {
  PredSet out;
  for (const Rule& r : p.rules)
    for (const auto* bucket : {&r.head, &r.pos, &r.neg, &r.negneg})
      for (const Atom& a : *bucket)
        if (!a.equality) out.insert(a.predicate);
  return out;
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.kind == Term::Kind::Variable) {
    if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
    return;
  }
  for (const Term& arg : t.args) collect_variables(arg, out);
}

void collect_variables(const Atom& a, std::vector<std::string>& out) {
  for (const Term& t : a.args) collect_variables(t, out);
}

RuleVars rule_variables(const Rule& r) {
  RuleVars vars;
  std::vector<std::string> scratch;
  for (const Atom& a : r.head) collect_variables(a, scratch);
  vars.head.insert(scratch.begin(), scratch.end());
  scratch.clear();
  for (const auto* bucket : {&r.pos, &r.neg, &r.negneg})
    for (const Atom& a : *bucket) collect_variables(a, scratch);
  vars.body.insert(scratch.begin(), scratch.end());
  return vars;
}

bool is_ground(const Term& t) {
  if (t.kind == Term::Kind::Variable) return false;
  return std::all_of(t.args.begin(), t.args.end(),
                     [](const Term& a) { return is_ground(a); });
}

bool is_ground(const Atom& a) {
  return std::all_of(a.args.begin(), a.args.end(),
                     [](const Term& t) { return is_ground(t); });
}

bool is_ground(const Rule& r) {
  for (const auto* bucket : {&r.head, &r.pos, &r.neg, &r.negneg})
    for (const Atom& a : *bucket)
      if (!is_ground(a)) return false;
  return true;
}

std::string to_string(const Term& t) {
  if (t.kind != Term::Kind::Function) return t.name;
  std::string out = t.name + "(";
  for (std::size_t i = 0; i < t.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(t.args[i]);
  }
  return out + ")";
}

std::string to_string(const Atom& a) {
  if (a.equality) return to_string(a.lhs()) + " = " + to_string(a.rhs());
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(a.args[i]);
  }
  return out + ")";
}

std::string to_string(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.head.size(); ++i) {
    if (i > 0) out += " ; ";
    out += to_string(r.head[i]);
  }
  if (r.is_fact()) return r.head.empty() ? ":-." : out + ".";
  out += r.head.empty() ? ":-" : " :-";
  bool first = true;
  auto sep = [&] {
    out += first ? " " : ", ";
    first = false;
  };
  for (const Atom& a : r.pos) {
    sep();
    out += to_string(a);
  }
  for (const Atom& a : r.neg) {
    sep();
    if (a.equality)
      out += to_string(a.lhs()) + " != " + to_string(a.rhs());
    else
      out += "not " + to_string(a);
  }
  for (const Atom& a : r.negneg) {
    sep();
    out += "not not " + to_string(a);
  }
  return out + ".";
}

}  // namespace modsm
