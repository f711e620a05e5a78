#include <benchmark/benchmark.h>

#include "artin/asai/asai.hpp"
#include "artin/chr/table.hpp"
#include "artin/grp/named.hpp"
#include "artin/lfn/lfunction.hpp"
#include "artin/nt/quartic.hpp"
#include "artin/par/parallel.hpp"

using namespace artin;

namespace {

par::Exec exec_of(const benchmark::State& st) { return st.range(0) ? par::Exec::openmp : par::Exec::serial; }

nt::ZPoly quartic() { return {mpz_class(-1), mpz_class(-1), mpz_class(0), mpz_class(0), mpz_class(1)}; }

void BM_CharacterTable(benchmark::State& st) {
  auto g = grp::named_group("GL(2,3)");
  for (auto _ : st) benchmark::DoNotOptimize(chr::character_table(g, {exec_of(st)}));
}

void BM_FrobeniusSampling(benchmark::State& st) {
  auto f = quartic();
  for (auto _ : st) benchmark::DoNotOptimize(nt::frobenius_sampling(f, 1000, exec_of(st)));
}

void BM_VerifyDedekind(benchmark::State& st) {
  auto d = lfn::galois_data(quartic());
  for (auto _ : st) benchmark::DoNotOptimize(lfn::verify_dedekind(d, 10000, std::nullopt, exec_of(st)));
}

void BM_LocalFormulaSweep(benchmark::State& st) {
  auto setups = asai::all_setups(grp::named_group("GL(2,3)"), true);
  for (auto _ : st) {
    std::vector<std::size_t> failed(setups.size());
    par::for_each_index(
        setups.size(), [&](std::size_t i) { failed[i] = asai::local_formulas(setups[i]).failed(); }, exec_of(st));
    benchmark::DoNotOptimize(failed);
  }
}

void BM_FactorPoly(benchmark::State& st) {
  auto f = nt::Fq::quadratic(101, 2);
  nt::FqPoly a;
  for (std::uint64_t i = 0; i < 24; ++i) a.push_back({(i * 37 + 5) % 101, (i * 11) % 101});
  a.push_back({1, 0});
  for (auto _ : st) benchmark::DoNotOptimize(nt::factor_poly(f, a));
}

}  // namespace

// Argument 0 runs the serial reference, 1 the OpenMP path.
BENCHMARK(BM_CharacterTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FrobeniusSampling)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyDedekind)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LocalFormulaSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FactorPoly)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
