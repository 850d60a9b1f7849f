#include <modsm/structure.hpp>

#include <algorithm>
#include <map>

namespace modsm {

bool is_simple(const ModularProgram& mp, std::vector<SimplicityViolation>* out) {
  bool simple = true;
  for (const DefModule& m : mp.modules) {
    PredSet tuple = m.intensional_set();
    for (std::size_t r = 0; r < m.program.rules.size(); ++r) {
      for (const Atom& a : m.program.rules[r].head) {
        if (tuple.count(a.predicate)) continue;
        simple = false;
        if (out) out->push_back({m.name, r, a.predicate});
      }
    }
  }
  return simple;
}

DepGraph dependency_graph(const ModularProgram& mp) {
  if (!is_simple(mp))
    throw PreconditionError(
        "dependency graph is only defined for simple modular programs");
  DepGraph g;
  g.vertices = iota(mp);
  for (const DefModule& m : mp.modules) {
    for (const Rule& r : m.program.rules) {
      for (const Atom& h : r.head) {
        if (!g.vertices.count(h.predicate)) continue;
        for (const Atom& b : r.pos) {
          if (b.equality) continue;
          if (g.vertices.count(b.predicate))
            g.edges.emplace(h.predicate, b.predicate);
        }
      }
    }
  }
  return g;
}

std::vector<std::vector<std::string>> sccs(const DepGraph& g) {
  // Tarjan, with the vertex order and the output order pinned for
  // deterministic diagnostics.
  std::vector<std::string> verts(g.vertices.begin(), g.vertices.end());
  std::map<std::string, int> id;
  for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> succ(verts.size());
  for (const auto& [from, to] : g.edges) succ[id[from]].push_back(id[to]);

  const int n = static_cast<int>(verts.size());
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<std::string>> components;
  int counter = 0;

  // iterative DFS to keep deep graphs safe
  struct Frame {
    int v;
    std::size_t next_child = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_child < succ[f.v].size()) {
        int w = succ[f.v][f.next_child++];
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w});
        } else if (on_stack[w]) {
          low[f.v] = std::min(low[f.v], index[w]);
        }
      } else {
        if (low[f.v] == index[f.v]) {
          std::vector<std::string> component;
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            component.push_back(verts[w]);
            if (w == f.v) break;
          }
          std::sort(component.begin(), component.end());
          components.push_back(std::move(component));
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

CoherenceDiagnostics is_coherent(const ModularProgram& mp) {
  CoherenceDiagnostics d;
  d.simple = is_simple(mp, &d.simplicity_violations);

  d.tuples_disjoint = true;
  std::map<std::string, std::string> owner;
  for (const DefModule& m : mp.modules) {
    for (const std::string& p : m.intensional) {
      auto [it, inserted] = owner.emplace(p, m.name);
      if (!inserted && it->second != m.name) {
        d.tuples_disjoint = false;
        d.overlaps.push_back({p, {it->second, m.name}});
      }
    }
  }

  d.sccs_covered = true;
  if (d.simple) {
    d.sccs = sccs(dependency_graph(mp));
    for (const auto& component : d.sccs) {
      bool covered = false;
      for (const DefModule& m : mp.modules) {
        PredSet tuple = m.intensional_set();
        if (std::all_of(component.begin(), component.end(),
                        [&](const std::string& v) { return tuple.count(v) > 0; })) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        d.sccs_covered = false;
        d.uncovered_sccs.push_back(component);
      }
    }
  }

  d.coherent = d.simple && d.tuples_disjoint && d.sccs_covered;
  return d;
}

std::string to_dot(const DepGraph& g) {
  std::string out = "digraph dependencies {\n";
  for (const std::string& v : g.vertices) out += "  \"" + v + "\";\n";
  for (const auto& [from, to] : g.edges)
    out += "  \"" + from + "\" -> \"" + to + "\";\n";
  return out + "}\n";
}

}  // namespace modsm
