#include <doctest.h>

#include <algorithm>

#include <modsm/ground.hpp>
#include <modsm/parser.hpp>
#include <modsm/stable.hpp>

#include "corpus.hpp"
#include "oracles.hpp"

using namespace modsm;

namespace {

GroundAtom ga(const std::string& pred, std::initializer_list<std::string> args) {
  GroundAtom a;
  a.predicate = pred;
  for (const std::string& s : args) a.args.push_back(Term::constant(s));
  return a;
}

std::vector<Term> consts(std::initializer_list<std::string> names) {
  std::vector<Term> out;
  for (const std::string& n : names) out.push_back(Term::constant(n));
  return out;
}

Interpretation spqr_answer_set() {
  Interpretation i;
  i.universe = consts({"1", "2"});
  i.true_atoms = {ga("p", {"2"}),      ga("q", {"1", "1"}), ga("q", {"1", "2"}),
                  ga("q", {"2", "2"}), ga("r", {"1", "1"}), ga("r", {"1", "2"}),
                  ga("r", {"2", "1"}), ga("s", {"1", "2"})};
  return i;
}

}  // namespace

TEST_CASE("rule to formula") {
  auto one = [](const std::string& text) {
    Program p = parse_program(text);
    return *simplify_equalities(p.rules[0]);
  };

  GroundFormula fact = rule_to_formula(one("p(2)."));
  CHECK(fact == GroundFormula::implies(GroundFormula::top(),
                                       GroundFormula::atom_ref(ga("p", {"2"}))));

  GroundFormula constraint = rule_to_formula(one(":- q(1)."));
  CHECK(constraint == GroundFormula::implies(
                          GroundFormula::atom_ref(ga("q", {"1"})),
                          GroundFormula::bottom()));

  GroundFormula choice =
      rule_to_formula(one("in(a, b) :- edge(a, b), not not in(a, b)."));
  GroundFormula in = GroundFormula::atom_ref(ga("in", {"a", "b"}));
  GroundFormula expected = GroundFormula::implies(
      GroundFormula::conjunction(
          {GroundFormula::atom_ref(ga("edge", {"a", "b"})),
           GroundFormula::negation(GroundFormula::negation(in))}),
      in);
  CHECK(choice == expected);
}

TEST_CASE("classical satisfaction") {
  Program p = parse_program(testing::kSpqr);
  GroundProgram g = ground(p, consts({"1", "2"}));
  Interpretation model = spqr_answer_set();
  for (const GroundRule& r : g.rules) CHECK(satisfies(model, rule_to_formula(r)));

  GroundFormula f = GroundFormula::implies(GroundFormula::atom_ref(ga("q", {"1"})),
                                           GroundFormula::bottom());
  Interpretation empty{consts({"1"}), {}};
  Interpretation holds{consts({"1"}), {ga("q", {"1"})}};
  CHECK(satisfies(empty, f));
  CHECK(!satisfies(holds, f));
}

TEST_CASE("star evaluation of a fact formula") {
  GroundFormula f = GroundFormula::implies(GroundFormula::top(),
                                           GroundFormula::atom_ref(ga("p", {"2"})));
  Interpretation i{consts({"2"}), {ga("p", {"2"})}};
  StarAssignment u;
  u.values[ga("p", {"2"})] = false;
  CHECK(!star_eval(f, i, u, {"p"}));  // u must derive the fact
}

TEST_CASE("star evaluation of the choice-rule formula: full truth table") {
  // (not not in(a,b) and edge(a,b)) -> in(a,b), with in intensional and
  // edge(a,b) true.  Expected values computed with the syntactic transform
  // oracle over all four (i, u) combinations: the transform of the double
  // negation evaluates from the interpretation, so the only falsifying
  // combination is i(in) = true with u(in) = false.
  GroundAtom in = ga("in", {"a", "b"});
  GroundAtom edge = ga("edge", {"a", "b"});
  GroundFormula f = GroundFormula::implies(
      GroundFormula::conjunction(
          {GroundFormula::negation(
               GroundFormula::negation(GroundFormula::atom_ref(in))),
           GroundFormula::atom_ref(edge)}),
      GroundFormula::atom_ref(in));

  const bool expected[2][2] = {{true, true},    // i(in) = false: u = false, true
                               {false, true}};  // i(in) = true:  u = false, true
  for (int iv = 0; iv <= 1; ++iv) {
    for (int uv = 0; uv <= 1; ++uv) {
      Interpretation i{consts({"a", "b"}), {edge}};
      if (iv) i.true_atoms.insert(in);
      StarAssignment u;
      u.values[in] = uv != 0;
      CAPTURE(iv);
      CAPTURE(uv);
      bool mine = star_eval(f, i, u, {"in"});
      CHECK(mine == testing::oracle_star_eval(f, i, u, {"in"}));
      CHECK(mine == expected[iv][uv]);
    }
  }
}

TEST_CASE("star evaluation without intensional atoms is classical") {
  testing::Gen gen(23);
  std::vector<Term> u2 = consts({"1", "2"});
  for (int k = 0; k < 10; ++k) {
    Program p = gen.ground_program();
    GroundProgram g = ground(p, u2);
    StarAssignment empty_u;
    for (std::size_t mask = 0; mask < 16; ++mask) {
      Interpretation i{u2, {}};
      for (std::size_t b = 0; b < std::min<std::size_t>(4, g.atoms.size()); ++b)
        if (mask & (std::size_t{1} << b)) i.true_atoms.insert(g.atoms[b]);
      for (const GroundRule& r : g.rules) {
        GroundFormula f = rule_to_formula(r);
        CHECK(star_eval(f, i, empty_u, {}) == satisfies(i, f));
      }
    }
  }
}

TEST_CASE("star evaluation matches the syntactic transform oracle") {
  testing::Gen gen(29);
  std::vector<Term> u2 = consts({"1", "2"});
  for (int k = 0; k < 25; ++k) {
    Program p = gen.ground_program();
    GroundProgram g = ground(p, u2);
    if (g.atoms.size() > 8) continue;
    PredSet intensional;
    for (const GroundAtom& a : g.atoms)
      if (gen.coin()) intensional.insert(a.predicate);
    for (int trial = 0; trial < 8; ++trial) {
      Interpretation i{u2, {}};
      StarAssignment u;
      for (const GroundAtom& a : g.atoms) {
        if (gen.coin()) i.true_atoms.insert(a);
        if (intensional.count(a.predicate)) u.values[a] = gen.coin();
      }
      for (const GroundRule& r : g.rules) {
        GroundFormula f = rule_to_formula(r);
        CHECK(star_eval(f, i, u, intensional) ==
              testing::oracle_star_eval(f, i, u, intensional));
      }
    }
  }
}

TEST_CASE("the full assignment never defeats stability") {
  testing::Gen gen(31);
  std::vector<Term> u2 = consts({"1", "2"});
  for (int k = 0; k < 20; ++k) {
    Program p = gen.ground_program();
    GroundProgram g = ground(p, u2);
    PredSet all = predicate_signature(p);
    for (std::size_t mask = 0; mask < (std::size_t{1} << std::min<std::size_t>(
                                           g.atoms.size(), 10));
         ++mask) {
      Interpretation i{u2, {}};
      StarAssignment full;
      for (std::size_t b = 0; b < g.atoms.size(); ++b) {
        bool value = (b < 10) && (mask & (std::size_t{1} << b));
        if (value) i.true_atoms.insert(g.atoms[b]);
        full.values[g.atoms[b]] = value;
      }
      bool classical = true;
      bool starred = true;
      for (const GroundRule& r : g.rules) {
        GroundFormula f = rule_to_formula(r);
        classical = classical && satisfies(i, f);
        starred = starred && star_eval(f, i, full, all);
      }
      CHECK(starred == classical);  // F*(p) collapses to F
    }
  }
}

TEST_CASE("p-stability on the worked examples") {
  Program spqr = parse_program(testing::kSpqr);
  GroundProgram g = ground(spqr, consts({"1", "2"}));
  CHECK(is_p_stable(spqr_answer_set(), g, {"p", "q", "r", "s"}));

  Program cyc = parse_program("p(1) :- q(1).");
  GroundProgram gc = ground(cyc, consts({"1"}));
  Interpretation empty{consts({"1"}), {}};
  Interpretation both{consts({"1"}), {ga("p", {"1"}), ga("q", {"1"})}};
  Interpretation only_p{consts({"1"}), {ga("p", {"1"})}};
  CHECK(is_p_stable(empty, gc, {"p"}));
  CHECK(is_p_stable(both, gc, {"p"}));
  CHECK(!is_p_stable(only_p, gc, {"p"}));
}

TEST_CASE("is_p_stable agrees with the enumeration of counter-assignments") {
  testing::Gen gen(37);
  std::vector<Term> u2 = consts({"1", "2"});
  for (int k = 0; k < 40; ++k) {
    Program p = gen.ground_program();
    GroundProgram g = ground(p, u2);
    if (g.atoms.size() > 8) continue;
    PredSet intensional;
    for (const std::string& name : predicate_signature(p))
      if (gen.coin()) intensional.insert(name);
    for (std::size_t mask = 0; mask < (std::size_t{1} << g.atoms.size()); ++mask) {
      Interpretation i{u2, {}};
      for (std::size_t b = 0; b < g.atoms.size(); ++b)
        if (mask & (std::size_t{1} << b)) i.true_atoms.insert(g.atoms[b]);
      CHECK(is_p_stable(i, g, intensional) ==
            testing::naive_is_p_stable(i, g, intensional));
    }
  }
}

TEST_CASE("p-stable models with only s intensional") {
  Program s_only = parse_program("s(X, Z) :- p(Z), q(X, Y), r(X, Y).");
  std::vector<Interpretation> models =
      p_stable_models(s_only, {"s"}, consts({"1", "2"}));

  // the model whose extensional part matches the fact base has s = {s(1,2)}
  std::set<GroundAtom> facts = {ga("p", {"2"}),      ga("q", {"1", "1"}),
                                ga("q", {"1", "2"}), ga("q", {"2", "2"}),
                                ga("r", {"1", "1"}), ga("r", {"1", "2"}),
                                ga("r", {"2", "1"})};
  int found = 0;
  for (const Interpretation& m : models) {
    std::set<GroundAtom> extensional, s_part;
    for (const GroundAtom& a : m.true_atoms)
      (a.predicate == "s" ? s_part : extensional).insert(a);
    if (extensional == facts) {
      ++found;
      CHECK(s_part == std::set<GroundAtom>{ga("s", {"1", "2"})});
    }
  }
  CHECK(found == 1);
}

TEST_CASE("empty intensional tuple yields the classical models") {
  Program p = parse_program("a :- b. :- c, not a.");
  std::vector<Interpretation> models = p_stable_models(p, {}, consts({"1"}));
  GroundProgram g = ground(p, consts({"1"}));
  std::size_t classical = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << g.atoms.size()); ++mask) {
    Interpretation i{consts({"1"}), {}};
    for (std::size_t b = 0; b < g.atoms.size(); ++b)
      if (mask & (std::size_t{1} << b)) i.true_atoms.insert(g.atoms[b]);
    bool ok = true;
    for (const GroundRule& r : g.rules) ok = ok && satisfies(i, rule_to_formula(r));
    if (ok) {
      ++classical;
      CHECK(std::find(models.begin(), models.end(), i) != models.end());
    }
  }
  CHECK(models.size() == classical);
}

TEST_CASE("choice rule has both models") {
  Program p = parse_program("p :- not not p.");
  std::vector<Interpretation> models = p_stable_models(p, {"p"}, consts({"c"}));
  REQUIRE(models.size() == 2);
  CHECK(models[0].true_atoms.empty());
  CHECK(models[1].true_atoms == std::set<GroundAtom>{ga("p", {})});
}

TEST_CASE("answer sets of the worked examples") {
  std::vector<Interpretation> spqr = answer_sets(parse_program(testing::kSpqr));
  REQUIRE(spqr.size() == 1);
  CHECK(spqr[0] == spqr_answer_set());

  std::vector<Interpretation> cyc =
      answer_sets(parse_program("p(1) :- q(1). q(1) :- p(1)."));
  REQUIRE(cyc.size() == 1);
  CHECK(cyc[0].true_atoms.empty());
}

TEST_CASE("answer sets of the triangle instance") {
  Program p = parse_program(testing::hamiltonian_lp(testing::kTriangleFacts));
  SolveOptions opts;
  opts.max_atoms = 32;
  std::vector<Interpretation> models = answer_sets(p, opts);
  CHECK(models.size() == 2);
  // each model's in-relation is one orientation of the 3-cycle
  std::set<std::set<GroundAtom>> orientations;
  for (const Interpretation& m : models) {
    std::set<GroundAtom> in_part;
    for (const GroundAtom& a : m.true_atoms)
      if (a.predicate == "in") in_part.insert(a);
    orientations.insert(in_part);
  }
  std::set<std::set<GroundAtom>> expected = {
      {ga("in", {"a", "b"}), ga("in", {"b", "c"}), ga("in", {"c", "a"})},
      {ga("in", {"b", "a"}), ga("in", {"c", "b"}), ga("in", {"a", "c"})}};
  CHECK(orientations == expected);
}

TEST_CASE("answer sets match the reduct oracle") {
  testing::Gen gen(41);
  for (int k = 0; k < 30; ++k) {
    Program p = gen.ground_program();
    std::vector<Term> u = herbrand_universe(signature_of(p));
    if (ground(p, u).atoms.size() > 10) continue;
    CHECK(answer_sets(p) == testing::oracle_answer_sets(p, u));
  }
}

TEST_CASE("choice facts behave like their desugared reading") {
  testing::Gen gen(43);
  for (int k = 0; k < 15; ++k) {
    Program with_choice = gen.ground_program(4);
    for (Rule& r : parse_program("{w(1)}.").rules) with_choice.rules.push_back(r);
    std::vector<Term> u = herbrand_universe(signature_of(with_choice));
    if (ground(with_choice, u).atoms.size() > 8) continue;
    CHECK(answer_sets(with_choice) ==
          testing::oracle_answer_sets(with_choice, u));
  }
}

TEST_CASE("stable models form an anti-chain when everything is intensional") {
  testing::Gen gen(47);
  for (int k = 0; k < 30; ++k) {
    Program p = gen.ground_program();
    std::vector<Interpretation> models = answer_sets(p);
    for (const Interpretation& a : models)
      for (const Interpretation& b : models) {
        if (a == b) continue;
        CHECK(!std::includes(b.true_atoms.begin(), b.true_atoms.end(),
                             a.true_atoms.begin(), a.true_atoms.end()));
      }
  }
}

TEST_CASE("every stable model is a classical model") {
  testing::Gen gen(53);
  std::vector<Term> u2 = consts({"1", "2"});
  for (int k = 0; k < 20; ++k) {
    Program p = gen.ground_program();
    GroundProgram g = ground(p, u2);
    for (const Interpretation& m : answer_sets(p))
      for (const GroundRule& r : g.rules)
        CHECK(satisfies(m, rule_to_formula(r)));
  }
}

TEST_CASE("enumeration cap") {
  Program p = parse_program("{q(X, Y, Z)} :- p(X), p(Y), p(Z). p(1). p(2). p(3).");
  CHECK_THROWS_AS(answer_sets(p), BoundError);  // 27 + 3 atoms over the default
  CHECK_THROWS_AS(p_stable_models(p, {"q"}, consts({"1", "2", "3"})), BoundError);
}

TEST_CASE("answer sets need an object constant") {
  CHECK_THROWS_AS(answer_sets(parse_program("p :- not not p.")), UniverseError);
}

TEST_CASE("intensional names must occur in the program") {
  CHECK_THROWS_AS(p_stable_models(parse_program("p(1)."), {"zz"}, consts({"1"})),
                  SemanticError);
}

TEST_CASE("star assignments must cover the intensional atoms") {
  GroundFormula f = GroundFormula::atom_ref(ga("p", {"1"}));
  Interpretation i{consts({"1"}), {}};
  StarAssignment empty_u;
  CHECK_THROWS_AS(star_eval(f, i, empty_u, {"p"}), Error);
}

TEST_CASE("model output is canonical") {
  Interpretation i{consts({"1", "2"}), {ga("q", {"1", "2"}), ga("p", {"2"})}};
  CHECK(to_string(i) == "{p(2), q(1,2)}");
  Interpretation empty{consts({"1"}), {}};
  CHECK(to_string(empty) == "{}");
}
