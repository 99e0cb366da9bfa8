#include <benchmark/benchmark.h>

#include "spborel/mapcone.hpp"
#include "spborel/pborel.hpp"

using namespace spborel;

static void BM_BorelClosure(benchmark::State& state) {
  Monomial seed = parse_monomial("c^7", 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_borel_closure({seed}, 2, 3));
  }
}
BENCHMARK(BM_BorelClosure);

static void BM_BorelClosureFiveVars(benchmark::State& state) {
  std::vector<Monomial> seeds = {parse_monomial("a*c*e^2", 5), parse_monomial("b^2*e^2", 5),
                                 parse_monomial("b*c*d^2", 5), parse_monomial("b*c^2*d", 5)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(p_borel_closure(seeds, 2, 5));
  }
}
BENCHMARK(BM_BorelClosureFiveVars);

static void BM_IteratedMapcone(benchmark::State& state) {
  std::vector<Monomial> order;
  for (const char* t : {"a^3", "a^2b", "ab^2", "b^3", "a^2c", "b^2c", "ac^2", "bc^2"})
    order.push_back(parse_monomial(t, 3));
  for (auto _ : state) {
    OracleCache cache;
    benchmark::DoNotOptimize(iterated_mapcone(order, FieldChar(2), &cache));
  }
}
BENCHMARK(BM_IteratedMapcone);
