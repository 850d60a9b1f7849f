#include <modsm/stable.hpp>

#include <algorithm>

#include "solve_internal.hpp"

namespace modsm {

GroundFormula GroundFormula::top() {
  GroundFormula t;
  t.kind = Kind::Implies;
  t.children = {bottom(), bottom()};
  return t;
}

GroundFormula GroundFormula::atom_ref(GroundAtom a) {
  GroundFormula f;
  f.kind = Kind::Atom;
  f.atom = std::move(a);
  return f;
}

GroundFormula GroundFormula::implies(GroundFormula antecedent,
                                     GroundFormula consequent) {
  GroundFormula f;
  f.kind = Kind::Implies;
  f.children = {std::move(antecedent), std::move(consequent)};
  return f;
}

GroundFormula GroundFormula::negation(GroundFormula f) {
  return implies(std::move(f), bottom());
}

GroundFormula GroundFormula::conjunction(std::vector<GroundFormula> fs) {
  if (fs.empty()) return top();
  if (fs.size() == 1) return std::move(fs.front());
  GroundFormula f;
  f.kind = Kind::And;
  f.children = std::move(fs);
  return f;
}

GroundFormula GroundFormula::disjunction(std::vector<GroundFormula> fs) {
  if (fs.empty()) return bottom();
  if (fs.size() == 1) return std::move(fs.front());
  GroundFormula f;
  f.kind = Kind::Or;
  f.children = std::move(fs);
  return f;
}

bool GroundFormula::is_top() const {
  return kind == Kind::Implies && children[0].kind == Kind::Bottom &&
         children[1].kind == Kind::Bottom;
}

bool StarAssignment::value(const GroundAtom& a) const {
  auto it = values.find(a);
  if (it == values.end())
    throw Error("star assignment is undefined on atom '" + to_string(a) + "'");
  return it->second;
}

GroundFormula rule_to_formula(const GroundRule& g) {
  std::vector<GroundFormula> body;
  for (const GroundAtom& a : g.pos) body.push_back(GroundFormula::atom_ref(a));
  for (const GroundAtom& a : g.neg)
    body.push_back(GroundFormula::negation(GroundFormula::atom_ref(a)));
  for (const GroundAtom& a : g.negneg)
    body.push_back(GroundFormula::negation(
        GroundFormula::negation(GroundFormula::atom_ref(a))));
  std::vector<GroundFormula> head;
  for (const GroundAtom& a : g.head) head.push_back(GroundFormula::atom_ref(a));
  return GroundFormula::implies(GroundFormula::conjunction(std::move(body)),
                                GroundFormula::disjunction(std::move(head)));
}

bool satisfies(const Interpretation& i, const GroundFormula& f) {
  switch (f.kind) {
    case GroundFormula::Kind::Bottom:
      return false;
    case GroundFormula::Kind::Atom:
      return i.contains(f.atom);
    case GroundFormula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(),
                         [&](const GroundFormula& c) { return satisfies(i, c); });
    case GroundFormula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(),
                         [&](const GroundFormula& c) { return satisfies(i, c); });
    case GroundFormula::Kind::Implies:
      return !satisfies(i, f.children[0]) || satisfies(i, f.children[1]);
  }
  return false;
}

bool star_eval(const GroundFormula& f, const Interpretation& i,
               const StarAssignment& u, const PredSet& intensional) {
  switch (f.kind) {
    case GroundFormula::Kind::Bottom:
      return false;
    case GroundFormula::Kind::Atom:
      return intensional.count(f.atom.predicate) ? u.value(f.atom)
                                                 : i.contains(f.atom);
    case GroundFormula::Kind::And:
      return std::all_of(f.children.begin(), f.children.end(),
                         [&](const GroundFormula& c) {
                           return star_eval(c, i, u, intensional);
                         });
    case GroundFormula::Kind::Or:
      return std::any_of(f.children.begin(), f.children.end(),
                         [&](const GroundFormula& c) {
                           return star_eval(c, i, u, intensional);
                         });
    case GroundFormula::Kind::Implies:
      // (F -> G)* = (F* -> G*) & (F -> G)
      return (!star_eval(f.children[0], i, u, intensional) ||
              star_eval(f.children[1], i, u, intensional)) &&
             (!satisfies(i, f.children[0]) || satisfies(i, f.children[1]));
  }
  return false;
}

namespace {

std::vector<char> to_mask(const Interpretation& i, const detail::AtomIndex& base) {
  std::vector<char> mask(base.atoms.size(), 0);
  for (const GroundAtom& a : i.true_atoms) {
    int idx = base.index_of(a);
    if (idx < 0)
      throw Error("interpretation contains atom '" + to_string(a) +
                  "' outside the Herbrand base");
    mask[static_cast<std::size_t>(idx)] = 1;
  }
  return mask;
}

std::vector<char> intensional_mask(const detail::AtomIndex& base,
                                   const PredSet& intensional) {
  std::vector<char> mask(base.atoms.size(), 0);
  for (std::size_t i = 0; i < base.atoms.size(); ++i)
    if (intensional.count(base.atoms[i].predicate)) mask[i] = 1;
  return mask;
}

Interpretation from_mask(const std::vector<char>& mask,
                         const detail::AtomIndex& base,
                         const std::vector<Term>& universe) {
  Interpretation i;
  i.universe = universe;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) i.true_atoms.insert(base.atoms[v]);
  return i;
}

std::vector<std::string> sorted_renderings(const Interpretation& i) {
  std::vector<std::string> out;
  out.reserve(i.true_atoms.size());
  for (const GroundAtom& a : i.true_atoms) out.push_back(to_string(a));
  std::sort(out.begin(), out.end());
  return out;
}

void sort_canonically(std::vector<Interpretation>& models) {
  std::vector<std::pair<std::vector<std::string>, Interpretation>> keyed;
  keyed.reserve(models.size());
  for (Interpretation& m : models)
    keyed.emplace_back(sorted_renderings(m), std::move(m));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  models.clear();
  for (auto& [key, m] : keyed) models.push_back(std::move(m));
}

}  // namespace

bool is_p_stable(const Interpretation& i, const GroundProgram& g,
                 const PredSet& intensional, const SolveOptions& opts) {
  detail::AtomIndex base(g.atoms);
  if (base.atoms.size() > opts.max_atoms)
    throw BoundError(base.atoms.size(), opts.max_atoms);
  std::vector<char> model = to_mask(i, base);
  auto clauses = detail::classical_clauses(g.rules, base);
  if (!detail::all_satisfied(clauses, model)) return false;
  return !detail::exists_smaller_star_model(
      g.rules, base, model, intensional_mask(base, intensional));
}

std::vector<Interpretation> p_stable_models(const Program& p,
                                            const PredSet& intensional,
                                            const std::vector<Term>& universe,
                                            const SolveOptions& opts) {
  PredSet known = predicate_signature(p);
  for (const std::string& name : intensional)
    if (!known.count(name))
      throw SemanticError("intensional predicate '" + name +
                          "' does not occur in the program");

  GroundProgram g = ground(p, universe);
  detail::AtomIndex base(g.atoms);
  if (base.atoms.size() > opts.max_atoms)
    throw BoundError(base.atoms.size(), opts.max_atoms);
  auto clauses = detail::classical_clauses(g.rules, base);
  std::vector<char> imask = intensional_mask(base, intensional);

  std::vector<Interpretation> models;
  detail::enumerate_models(base.size(), clauses, [&](const std::vector<char>& m) {
    if (!detail::exists_smaller_star_model(g.rules, base, m, imask))
      models.push_back(from_mask(m, base, g.universe));
  });
  sort_canonically(models);
  return models;
}

std::vector<Interpretation> answer_sets(const Program& p,
                                        const SolveOptions& opts) {
  Signature sig = signature_of(p);
  std::vector<Term> universe = herbrand_universe(sig, opts.max_depth);
  return p_stable_models(p, predicate_signature(p), universe, opts);
}

std::string to_string(const Interpretation& i) {
  std::string out = "{";
  std::vector<std::string> atoms = sorted_renderings(i);
  for (std::size_t k = 0; k < atoms.size(); ++k) {
    if (k > 0) out += ", ";
    out += atoms[k];
  }
  return out + "}";
}

bool canonical_less(const Interpretation& a, const Interpretation& b) {
  return sorted_renderings(a) < sorted_renderings(b);
}

}  // namespace modsm
