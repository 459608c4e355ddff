#include <benchmark/benchmark.h>

#include <vector>

#include "solenoid/classify.hpp"
#include "solenoid/ktheory.hpp"
#include "solenoid/multiplier.hpp"
#include "solenoid/oracle.hpp"

using namespace solenoid;

namespace {

XiElement lattice62() { return xi_new(5, make_rat(1, 62), NadicInteger::from_rational(5, make_rat(-1, 62))); }

void BM_zn_at(benchmark::State& state) {
  NadicInteger j = NadicInteger::from_rational(5, make_rat(-1, 62));
  auto k = static_cast<unsigned long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zn_at(j, k));
}
BENCHMARK(BM_zn_at)->Arg(8)->Arg(64)->Arg(512);

void BM_xi_cocycle(benchmark::State& state) {
  Modulus n = static_cast<Modulus>(state.range(0));
  NadicInteger j = NadicInteger::from_rational(n, make_rat(-3, 7));
  QnSampler s(n, 1);
  std::vector<std::pair<QnRational, QnRational>> pairs;
  for (int i = 0; i < 256; ++i) {
    QnRational x = s.next();
    pairs.push_back({x, s.partner(x)});
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [x, y] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(xi_cocycle(j, x, y));
  }
}
BENCHMARK(BM_xi_cocycle)->Arg(2)->Arg(3)->Arg(12);

void BM_psi(benchmark::State& state) {
  XiElement a = lattice62();
  QnSampler s(5, 2);
  std::vector<std::pair<QnPoint, QnPoint>> pairs;
  for (int i = 0; i < 256; ++i) pairs.push_back({qn_point(s.next(), s.next()), qn_point(s.next(), s.next())});
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [g, h] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(psi(a, g, h));
  }
}
BENCHMARK(BM_psi);

void BM_symmetrizer(benchmark::State& state) {
  XiElement a = lattice62();
  for (auto _ : state) benchmark::DoNotOptimize(symmetrizer(a));
}
BENCHMARK(BM_symmetrizer);

void BM_isomorphic(benchmark::State& state) {
  XiElement a = xi_new(2, make_rat(1, 3), NadicInteger::from_rational(2, make_rat(-1, 3)));
  XiElement b = xi_constant(4, make_rat(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(isomorphic(a, b, 32));
}
BENCHMARK(BM_isomorphic);

void BM_brute_symmetrizer(benchmark::State& state) {
  XiElement a = lattice62();
  for (auto _ : state) benchmark::DoNotOptimize(brute_symmetrizer(a, state.range(0), 2));
}
BENCHMARK(BM_brute_symmetrizer)->Arg(40)->Arg(130)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
