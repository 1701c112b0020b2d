#include <benchmark/benchmark.h>

#include <sdres/io.hpp>

using namespace sdres;

namespace {

const char* kQuadPair = "u00 + u01*y1^2; u10*y1@1 + u11*y1";
const char* kPipeline =
    "u00 + u01*y1@1^2*y2@1^2*y3 + u02*y1^2*y2*y3;"
    "u10 + u11*y1@2^4*y2@2^4*y3@1^2 + u12*y1@1^2*y2@1*y3@1;"
    "u20 + u21*y1@1^2*y2@1^2*y3 + u22*y1^2*y2*y3;"
    "u30 + u31*y1@1*y3";

void bm_rank_qx(benchmark::State& state)
{
  // support-matrix shape: few monomial terms per entry, small exponents
  Rng rng(5);
  SymbolicSupportMatrix m;
  m.cols = 5;
  for (int i = 0; i < 6; ++i) {
    SupportVector sv;
    for (int j = 0; j < 5; ++j) {
      UPoly e;
      if (rng.integer(0, 2))
        e = e + UPoly::x_power(static_cast<int>(rng.integer(0, 3)), Rat(rng.integer(-3, 3)));
      sv.push_back(std::move(e));
    }
    m.rows.push_back(std::move(sv));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(rank_qx(m));
}
BENCHMARK(bm_rank_qx);

void bm_jacobi_assignment(benchmark::State& state)
{
  Rng rng(6);
  JacobiInput a;
  for (int i = 0; i < 12; ++i) {
    std::vector<ExtInt> row;
    for (int j = 0; j < 12; ++j)
      row.push_back(rng.integer(0, 4) == 0 ? ExtInt::neg_inf() : ExtInt(rng.integer(0, 9)));
    a.entries.push_back(std::move(row));
  }
  for (auto _ : state)
    benchmark::DoNotOptimize(jacobi_number_assignment(a));
}
BENCHMARK(bm_jacobi_assignment);

void bm_search_quad_pair(benchmark::State& state)
{
  GenericSystem sys = parse_system(kQuadPair);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_resultant(sys));
}
BENCHMARK(bm_search_quad_pair);

void bm_reduction_pipeline(benchmark::State& state)
{
  GenericSystem sys = parse_system(kPipeline);
  for (auto _ : state)
    benchmark::DoNotOptimize(resultant_via_reduction(sys));
}
BENCHMARK(bm_reduction_pipeline);

void bm_mixed_volume(benchmark::State& state)
{
  std::vector<Point> t0{{Rat(0), Rat(0), Rat(0)}, {Rat(2), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}};
  std::vector<Point> t1{{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(2), Rat(0)}, {Rat(0), Rat(0), Rat(2)}};
  Polytope q0 = make_polytope(3, t0), q1 = make_polytope(3, t1);
  for (auto _ : state)
    benchmark::DoNotOptimize(mixed_volume({q1, q1, q0}));
}
BENCHMARK(bm_mixed_volume);

}  // namespace

BENCHMARK_MAIN();
