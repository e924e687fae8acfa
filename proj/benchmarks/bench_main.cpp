#include <benchmark/benchmark.h>

#include "stz/builtins.hpp"
#include "stz/chartable.hpp"
#include "stz/homology.hpp"
#include "stz/lyapunov.hpp"
#include "stz/monodromy.hpp"
#include "stz/sostar.hpp"

namespace {

void BM_canonical_pair_24(benchmark::State& state) {
  stz::PermPair pair = stz::builtin_ltilde().pair();
  for (auto _ : state) benchmark::DoNotOptimize(stz::canonical_pair(pair));
}
BENCHMARK(BM_canonical_pair_24);

void BM_orbit_ltilde(benchmark::State& state) {
  stz::Origami lt = stz::builtin_ltilde();
  for (auto _ : state) benchmark::DoNotOptimize(stz::orbit(lt));
}
BENCHMARK(BM_orbit_ltilde);

void BM_ekz_l0(benchmark::State& state) {
  stz::Origami l0 = stz::builtin_l0();
  for (auto _ : state) benchmark::DoNotOptimize(stz::ekz_sum(l0));
}
BENCHMARK(BM_ekz_l0);

void BM_character_table_q8(benchmark::State& state) {
  stz::FiniteGroup g = stz::quaternion_group().group;
  for (auto _ : state) benchmark::DoNotOptimize(stz::character_table(g));
}
BENCHMARK(BM_character_table_q8);

void BM_character_table_heis27(benchmark::State& state) {
  stz::FiniteGroup g = stz::heisenberg_group_27().group;
  for (auto _ : state) benchmark::DoNotOptimize(stz::character_table(g));
}
BENCHMARK(BM_character_table_heis27);

void BM_absolute_h1_ltilde(benchmark::State& state) {
  stz::Origami lt = stz::builtin_ltilde();
  for (auto _ : state) benchmark::DoNotOptimize(stz::absolute_h1(lt));
}
BENCHMARK(BM_absolute_h1_ltilde);

void BM_isotypic_ltilde(benchmark::State& state) {
  stz::HomologySpace space = stz::absolute_h1(stz::builtin_ltilde());
  for (auto _ : state) benchmark::DoNotOptimize(stz::isotypic_decomposition(space));
}
BENCHMARK(BM_isotypic_ltilde);

void BM_affine_lifts_A(benchmark::State& state) {
  stz::HomologySpace space = stz::absolute_h1(stz::builtin_ltilde());
  stz::Sl2Mat a{4, -3, 3, -2};
  for (auto _ : state) benchmark::DoNotOptimize(stz::affine_lifts(space, a));
}
BENCHMARK(BM_affine_lifts_A);

void BM_char_poly_12(benchmark::State& state) {
  stz::HomologySpace space = stz::absolute_h1(stz::builtin_ltilde());
  stz::IsotypicDecomposition dec = stz::isotypic_decomposition(space);
  const stz::IntMat& w = dec.pieces[dec.quaternionic_piece()].basis;
  stz::IntMat m =
      stz::restrict_to(stz::affine_lifts(space, stz::Sl2Mat{4, -3, 3, -2})[0].matrix, w);
  for (auto _ : state) benchmark::DoNotOptimize(stz::char_poly(m));
}
BENCHMARK(BM_char_poly_12);

void BM_verify_dichotomy(benchmark::State& state) {
  stz::Origami lt = stz::builtin_ltilde();
  for (auto _ : state) benchmark::DoNotOptimize(stz::verify_dichotomy(lt));
}
BENCHMARK(BM_verify_dichotomy);

void BM_lie_algebra_dim_3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(stz::lie_algebra_dim(3));
}
BENCHMARK(BM_lie_algebra_dim_3);

}  // namespace

BENCHMARK_MAIN();
