#include "solve_internal.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace modsm::detail {

int AtomIndex::index_of(const GroundAtom& a) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
  if (it == atoms.end() || *it != a) return -1;
  return static_cast<int>(it - atoms.begin());
}

namespace {

// Appends the literal unless the clause is already a tautology; returns
// false when adding it would make one.
bool add_literal(Clause& c, int lit) {
  for (int l : c) {
    if (l == -lit) return false;
    if (l == lit) return true;
  }
  c.push_back(lit);
  return true;
}

}  // namespace

std::vector<Clause> classical_clauses(const std::vector<GroundRule>& rules,
                                      const AtomIndex& base) {
  std::vector<Clause> out;
  out.reserve(rules.size());
  for (const GroundRule& r : rules) {
    Clause c;
    bool tautology = false;
    auto push = [&](const std::vector<GroundAtom>& atoms, int sign) {
      for (const GroundAtom& a : atoms) {
        int idx = base.index_of(a);
        assert(idx >= 0);
        if (!add_literal(c, sign * (idx + 1))) {
          tautology = true;
          return;
        }
      }
    };
    push(r.pos, -1);
    if (!tautology) push(r.neg, +1);
    if (!tautology) push(r.negneg, -1);
    if (!tautology) push(r.head, +1);
    if (!tautology) out.push_back(std::move(c));
  }
  return out;
}

bool clause_satisfied(const Clause& c, const std::vector<char>& model) {
  for (int lit : c) {
    int v = std::abs(lit) - 1;
    if ((lit > 0) == (model[v] != 0)) return true;
  }
  return false;
}

bool all_satisfied(const std::vector<Clause>& clauses,
                   const std::vector<char>& model) {
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const Clause& c) { return clause_satisfied(c, model); });
}

namespace {

constexpr char kUnassigned = 2;

// Unit propagation to fixpoint; false on conflict.
bool propagate(std::vector<char>& assign, const std::vector<Clause>& clauses) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Clause& c : clauses) {
      int unassigned_lit = 0;
      int unassigned_count = 0;
      bool satisfied = false;
      for (int lit : c) {
        int v = std::abs(lit) - 1;
        char val = assign[v];
        if (val == kUnassigned) {
          ++unassigned_count;
          unassigned_lit = lit;
          if (unassigned_count > 1) break;
        } else if ((lit > 0) == (val != 0)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned_count == 0) return false;
      if (unassigned_count == 1) {
        assign[std::abs(unassigned_lit) - 1] = unassigned_lit > 0 ? 1 : 0;
        changed = true;
      }
    }
  }
  return true;
}

struct SearchConfig {
  const std::vector<Clause>* clauses;
  const std::function<void(const std::vector<char>&)>* emit;
  bool stop_after_first = false;
  bool found = false;
  std::vector<char>* first_model = nullptr;
};

void search(std::vector<char> assign, SearchConfig& cfg) {
  if (cfg.found && cfg.stop_after_first) return;
  if (!propagate(assign, *cfg.clauses)) return;
  auto it = std::find(assign.begin(), assign.end(), kUnassigned);
  if (it == assign.end()) {
    if (cfg.stop_after_first) {
      cfg.found = true;
      if (cfg.first_model) *cfg.first_model = assign;
    } else {
      (*cfg.emit)(assign);
    }
    return;
  }
  std::size_t v = static_cast<std::size_t>(it - assign.begin());
  std::vector<char> low = assign;
  low[v] = 0;
  search(std::move(low), cfg);
  if (cfg.found && cfg.stop_after_first) return;
  assign[v] = 1;
  search(std::move(assign), cfg);
}

}  // namespace

void enumerate_models(int nvars, const std::vector<Clause>& clauses,
                      const std::function<void(const std::vector<char>&)>& emit) {
  for (const Clause& c : clauses)
    if (c.empty()) return;
  SearchConfig cfg{&clauses, &emit};
  search(std::vector<char>(static_cast<std::size_t>(nvars), kUnassigned), cfg);
}

bool satisfiable(int nvars, const std::vector<Clause>& clauses,
                 std::vector<char>* model_out) {
  for (const Clause& c : clauses)
    if (c.empty()) return false;
  SearchConfig cfg{&clauses, nullptr, /*stop_after_first=*/true};
  cfg.first_model = model_out;
  search(std::vector<char>(static_cast<std::size_t>(nvars), kUnassigned), cfg);
  return cfg.found;
}

bool exists_smaller_star_model(const std::vector<GroundRule>& rules,
                               const AtomIndex& base,
                               const std::vector<char>& model,
                               const std::vector<char>& intensional) {
  // u ranges over subsets of the true intensional atoms; everything false in
  // the model is pinned false in u.
  std::vector<int> uvar(base.atoms.size(), -1);
  int nvars = 0;
  for (std::size_t i = 0; i < base.atoms.size(); ++i)
    if (model[i] && intensional[i]) uvar[i] = nvars++;
  if (nvars == 0) return false;  // nothing strictly below the model

  // Per rule, F*(u) collapses to: (conjunction of u over true intensional
  // pos atoms) -> (disjunction of u over true intensional head atoms), with
  // rules whose remaining constant parts already decide them skipped.
  std::vector<Clause> clauses;
  for (const GroundRule& r : rules) {
    bool skip = false;
    Clause c;
    bool tautology = false;
    for (const GroundAtom& a : r.pos) {
      int idx = base.index_of(a);
      if (!model[idx]) {  // antecedent constant false
        skip = true;
        break;
      }
      if (uvar[idx] >= 0 && !add_literal(c, -(uvar[idx] + 1))) tautology = true;
    }
    if (skip || tautology) continue;
    for (const GroundAtom& a : r.neg)
      if (model[base.index_of(a)]) {  // (-a)* constant false
        skip = true;
        break;
      }
    if (skip) continue;
    for (const GroundAtom& a : r.negneg)
      if (!model[base.index_of(a)]) {  // (--a)* evaluates to the model's value
        skip = true;
        break;
      }
    if (skip) continue;
    for (const GroundAtom& a : r.head) {
      int idx = base.index_of(a);
      if (!model[idx]) continue;  // contributes bottom
      if (uvar[idx] < 0) {        // extensional atom true in the model
        skip = true;
        break;
      }
      if (!add_literal(c, uvar[idx] + 1)) {
        tautology = true;
        break;
      }
    }
    if (skip || tautology) continue;
    clauses.push_back(std::move(c));
  }

  Clause strict;
  strict.reserve(static_cast<std::size_t>(nvars));
  for (int v = 0; v < nvars; ++v) strict.push_back(-(v + 1));
  clauses.push_back(std::move(strict));

  return satisfiable(nvars, clauses);
}

}  // namespace modsm::detail
