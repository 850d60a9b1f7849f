#ifndef MODSM_TESTS_CORPUS_HPP
#define MODSM_TESTS_CORPUS_HPP

// The worked examples shared by the unit and acceptance suites.

#include <string>
#include <vector>

namespace modsm::testing {

// s/p/q/r program: one rule and seven facts; its unique answer set has
// eight atoms.
inline const std::string kSpqr =
    "s(X, Z) :- p(Z), q(X, Y), r(X, Y).\n"
    "p(2). q(1, 1). q(1, 2). q(2, 2).\n"
    "r(1, 1). r(1, 2). r(2, 1).\n";

inline const std::vector<std::string> kSpqrModel = {
    "p(2)", "q(1,1)", "q(1,2)", "q(2,2)", "r(1,1)", "r(1,2)", "r(2,1)", "s(1,2)"};

// The same split into four def-modules.
inline const std::string kSpqrModular =
    "#module facts_p {p}.\n"
    "p(2).\n"
    "#end.\n"
    "#module facts_q {q}.\n"
    "q(1, 1). q(1, 2). q(2, 2).\n"
    "#end.\n"
    "#module facts_r {r}.\n"
    "r(1, 1). r(1, 2). r(2, 1).\n"
    "#end.\n"
    "#module def_s {s}.\n"
    "s(X, Z) :- p(Z), q(X, Y), r(X, Y).\n"
    "#end.\n";

// Two rules forming a positive cycle across modules; the modular reading
// and the traditional reading disagree on {p(1), q(1)}.
inline const std::string kNonCoherent =
    "#module def_p {p}.\n"
    "p(1) :- q(1).\n"
    "#end.\n"
    "#module def_q {q}.\n"
    "q(1) :- p(1).\n"
    "#end.\n";

// Hamiltonian cycle, traditional form, parameterized by the edge facts.
inline std::string hamiltonian_lp(const std::string& edge_facts) {
  return edge_facts +
         "edge(X, Y) :- edge(Y, X).\n"
         "{in(X, Y)} :- edge(X, Y).\n"
         ":- in(X, Y), in(X, Z), Y != Z.\n"
         ":- in(X, Z), in(Y, Z), X != Y.\n"
         ":- in(X, Y), in(Y, X).\n"
         "r(X, Y) :- in(X, Y).\n"
         "r(X, Y) :- r(X, Z), r(Z, Y).\n"
         ":- not r(X, Y), edge(X, Z), edge(Zp, Y).\n";
}

// Hamiltonian cycle as five def-modules.
inline std::string hamiltonian_mlp(const std::string& edge_facts) {
  return "#module graph {edge}.\n" + edge_facts +
         "edge(X, Y) :- edge(Y, X).\n"
         "#end.\n"
         "#module pick {in}.\n"
         "{in(X, Y)} :- edge(X, Y).\n"
         "#end.\n"
         "#module pick_constraints {}.\n"
         ":- in(X, Y), in(X, Z), Y != Z.\n"
         ":- in(X, Z), in(Y, Z), X != Y.\n"
         ":- in(X, Y), in(Y, X).\n"
         "#end.\n"
         "#module reach {r}.\n"
         "r(X, Y) :- in(X, Y).\n"
         "r(X, Y) :- r(X, Z), r(Z, Y).\n"
         "#end.\n"
         "#module reach_constraint {}.\n"
         ":- not r(X, Y), edge(X, Z), edge(Zp, Y).\n"
         "#end.\n";
}

inline const std::string kTriangleFacts =
    "edge(a, b). edge(b, c). edge(c, a).\n";

inline const std::string kSquareDiagonalFacts =
    "edge(a, b). edge(b, c). edge(c, d). edge(d, a). edge(a, c).\n";

}  // namespace modsm::testing

#endif  // MODSM_TESTS_CORPUS_HPP
