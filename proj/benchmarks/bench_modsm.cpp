#include <benchmark/benchmark.h>

#include <modsm/ground.hpp>
#include <modsm/modular.hpp>
#include <modsm/parser.hpp>
#include <modsm/rewrite.hpp>
#include <modsm/stable.hpp>
#include <modsm/verify.hpp>

namespace {

using namespace modsm;

const std::string kSpqr =
    "s(X, Z) :- p(Z), q(X, Y), r(X, Y).\n"
    "p(2). q(1, 1). q(1, 2). q(2, 2). r(1, 1). r(1, 2). r(2, 1).\n";

std::string hamiltonian() {
  return "edge(a, b). edge(b, c). edge(c, a).\n"
         "edge(X, Y) :- edge(Y, X).\n"
         "{in(X, Y)} :- edge(X, Y).\n"
         ":- in(X, Y), in(X, Z), Y != Z.\n"
         ":- in(X, Z), in(Y, Z), X != Y.\n"
         ":- in(X, Y), in(Y, X).\n"
         "r(X, Y) :- in(X, Y).\n"
         "r(X, Y) :- r(X, Z), r(Z, Y).\n"
         ":- not r(X, Y), edge(X, Z), edge(Zp, Y).\n";
}

void BM_ParseHamiltonian(benchmark::State& state) {
  std::string text = hamiltonian();
  for (auto _ : state) benchmark::DoNotOptimize(parse_program(text));
}
BENCHMARK(BM_ParseHamiltonian);

void BM_GroundHamiltonian(benchmark::State& state) {
  Program p = parse_program(hamiltonian());
  std::vector<Term> u = herbrand_universe(signature_of(p));
  for (auto _ : state) benchmark::DoNotOptimize(ground(p, u));
}
BENCHMARK(BM_GroundHamiltonian);

void BM_AnswerSetsSpqr(benchmark::State& state) {
  Program p = parse_program(kSpqr);
  for (auto _ : state) benchmark::DoNotOptimize(answer_sets(p));
}
BENCHMARK(BM_AnswerSetsSpqr);

void BM_AnswerSetsHamiltonian(benchmark::State& state) {
  Program p = parse_program(hamiltonian());
  SolveOptions opts;
  opts.max_atoms = 32;
  for (auto _ : state) benchmark::DoNotOptimize(answer_sets(p, opts));
}
BENCHMARK(BM_AnswerSetsHamiltonian);

void BM_StabilityCheck(benchmark::State& state) {
  Program p = parse_program(kSpqr);
  std::vector<Term> u = herbrand_universe(signature_of(p));
  GroundProgram g = ground(p, u);
  Interpretation model = answer_sets(p).front();
  PredSet tuple = predicate_signature(p);
  for (auto _ : state)
    benchmark::DoNotOptimize(is_p_stable(model, g, tuple));
}
BENCHMARK(BM_StabilityCheck);

void BM_CheckProjection(benchmark::State& state) {
  Program p = parse_program(kSpqr);
  std::vector<Universe> universes = {
      {Term::constant("1"), Term::constant("2")}};
  for (auto _ : state)
    benchmark::DoNotOptimize(check_projection(p, {{0, {"Y"}, "t"}}, universes));
}
BENCHMARK(BM_CheckProjection);

}  // namespace

BENCHMARK_MAIN();
