#include <benchmark/benchmark.h>

#include "fibfull/degeneration.hpp"
#include "fibfull/resolution.hpp"
#include "fibfull/strata.hpp"

using namespace fibfull;

namespace {

Ideal make(const std::vector<std::string>& gens, std::size_t n) {
  std::vector<Poly> ps;
  for (const auto& g : gens) ps.push_back(parse_poly(g, variable_names(n)));
  return Ideal(n, Field::rationals(), std::move(ps));
}

Ideal twisted_cubic() { return make({"x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"}, 4); }

Ideal rational_quartic() {
  return make({"x1*x2 - x0*x3", "x0*x2^2 - x1^2*x3", "x1^3 - x0^2*x2", "x2^3 - x1*x3^2"}, 4);
}

Ideal minors_2x3() { return make({"x0*x4 - x1*x3", "x0*x5 - x2*x3", "x1*x5 - x2*x4"}, 6); }

void BM_GroebnerLex(benchmark::State& st) {
  for (auto _ : st) {
    Ideal I = rational_quartic();
    benchmark::DoNotOptimize(I.groebner(MonomialOrder::lex()));
  }
}
BENCHMARK(BM_GroebnerLex)->Unit(benchmark::kMillisecond);

void BM_Resolution(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(free_resolution(minors_2x3()));
}
BENCHMARK(BM_Resolution)->Unit(benchmark::kMillisecond);

void BM_SheafTable(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(sheaf_cohomology_table(rational_quartic()));
}
BENCHMARK(BM_SheafTable)->Unit(benchmark::kMillisecond);

void BM_LexEngine(benchmark::State& st) {
  for (auto _ : st) {
    for (const auto& l : IntegerPartition::enumerate(4, 3))
      benchmark::DoNotOptimize(sheaf_cohomology_table(lex_ideal(l, 3).ideal));
  }
}
BENCHMARK(BM_LexEngine)->Unit(benchmark::kMillisecond);

void BM_FiberFullCheck(benchmark::State& st) {
  FamilyIdeal F = homogenize_ideal(twisted_cubic(), MonomialOrder::lex());
  for (auto _ : st) benchmark::DoNotOptimize(fiber_full_family_check(F, st.range(0)));
}
BENCHMARK(BM_FiberFullCheck)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
