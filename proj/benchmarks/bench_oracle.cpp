#include <benchmark/benchmark.h>

#include "spborel/oracle.hpp"
#include "spborel/pborel.hpp"
#include "spborel/special.hpp"

using namespace spborel;

static void BM_BettiProductIdeal(benchmark::State& state) {
  MonomialIdeal J = parse_ideal("a^3,a^2b,ab^2,b^3,a^2c,b^2c,ac^2,bc^2,c^3", 3);
  FieldChar F(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_table(J, F));
  }
}
BENCHMARK(BM_BettiProductIdeal)->Arg(0)->Arg(2);

static void BM_BettiFiveVariables(benchmark::State& state) {
  MonomialIdeal B = p_borel_closure(
      {parse_monomial("a*c*e^2", 5), parse_monomial("b^2*e^2", 5),
       parse_monomial("b*c*d^2", 5), parse_monomial("b*c^2*d", 5)},
      2, 5);
  FieldChar F(2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(betti_table(B, F));
  }
}
BENCHMARK(BM_BettiFiveVariables);

static void BM_SpecialRecursion(benchmark::State& state) {
  SpecialIdealParams params = SpecialIdealParams::parse("n=3; l=3,3,2; a=1,1,2; p=1,2,8");
  for (auto _ : state) {
    benchmark::DoNotOptimize(special_betti(params));
  }
}
BENCHMARK(BM_SpecialRecursion);

static void BM_RankRational(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<std::vector<BigInt>> M(static_cast<size_t>(n),
                                     std::vector<BigInt>(static_cast<size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      M[static_cast<size_t>(r)][static_cast<size_t>(c)] = ((r * 31 + c * 17) % 5) - 2;
  for (auto _ : state) {
    auto copy = M;
    benchmark::DoNotOptimize(rank_rational(std::move(copy)));
  }
}
BENCHMARK(BM_RankRational)->Arg(16)->Arg(48);
