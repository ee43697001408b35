// Serial reference kernels against their OpenMP twins.

#include <benchmark/benchmark.h>

#include <memory>
#include <random>

#include "rackrep/kernels.hpp"
#include "rackrep/reps.hpp"

using namespace rackrep;

namespace {

const Rack &p5() {
  static const Rack r = builtin::permutation_quandle(5);
  return r;
}

std::vector<Permutation> lefts(const Rack &r) {
  std::vector<Permutation> out;
  for (Index x = 0; x < r.size(); ++x)
    out.push_back(left_mult(r, x));
  return out;
}

template <auto Fn> void distributivity(benchmark::State &state) {
  const auto r = builtin::conj(groups::symmetric(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(r.flat_table(), r.size()));
}

template <auto Fn> void stabilizing(benchmark::State &state) {
  const auto l = lefts(p5());
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(l, static_cast<std::size_t>(state.range(0))));
}

template <auto Fn> void axiom_residual(benchmark::State &state) {
  const auto rack = std::make_shared<const Rack>(builtin::conj(groups::symmetric(4)));
  const auto rep = regular_rep(rack);
  std::vector<CMatrix> inv;
  for (const auto &m : rep.matrices)
    inv.push_back(m.inverse());
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(rack->flat_table(), rack->size(), rep.matrices, inv));
}

template <auto Fn> void average(benchmark::State &state) {
  const auto g = std::make_shared<const FiniteGroup>(groups::symmetric(5));
  const auto rep = regular_group_rep(g);
  std::vector<CMatrix> inv;
  for (const auto &m : rep.matrices)
    inv.push_back(m.inverse());
  std::mt19937_64 rng(42);
  const CMatrix x = random_hermitian(120, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(Fn(rep.matrices, inv, x));
}

} // namespace

BENCHMARK(distributivity<serial::first_distributivity_violation>)->Arg(4)->Arg(5);
BENCHMARK(distributivity<par::first_distributivity_violation>)->Arg(4)->Arg(5);
BENCHMARK(stabilizing<serial::stabilizing_words>)->Arg(4)->Arg(5);
BENCHMARK(stabilizing<par::stabilizing_words>)->Arg(4)->Arg(5);
BENCHMARK(axiom_residual<serial::rack_axiom_residual>);
BENCHMARK(axiom_residual<par::rack_axiom_residual>);
BENCHMARK(average<serial::group_average>);
BENCHMARK(average<par::group_average>);

BENCHMARK_MAIN();
