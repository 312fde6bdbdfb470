#include <benchmark/benchmark.h>

#include "numwalk/classify.hpp"
#include "numwalk/digits.hpp"
#include "numwalk/equivalence.hpp"
#include "numwalk/survey.hpp"
#include "numwalk/topology.hpp"
#include "numwalk/walk.hpp"

namespace {

using namespace numwalk;

void BM_ExpandShortPeriod(benchmark::State& state) {
  const Rational r(1, (Int(1) << 20) - 1);  // period divides 20
  for (auto _ : state) benchmark::DoNotOptimize(expand(r, 2));
}
BENCHMARK(BM_ExpandShortPeriod);

void BM_ExpandLongPeriod(benchmark::State& state) {
  const Rational r(1, 99991);  // prime denominator, period in the tens of thousands
  for (auto _ : state) benchmark::DoNotOptimize(expand(r, 2));
}
BENCHMARK(BM_ExpandLongPeriod);

void BM_Classify(benchmark::State& state) {
  const TurnMap tm = TurnMap::standard(2);
  const Rational r(1, 99991);
  for (auto _ : state) benchmark::DoNotOptimize(classify(r, tm));
}
BENCHMARK(BM_Classify);

void BM_WalkPrefix(benchmark::State& state) {
  const TurnMap tm = TurnMap::standard(2);
  const DigitExpansion d = expand(Rational(6, 7), 2);
  for (auto _ : state) benchmark::DoNotOptimize(walk_prefix(d, 100000, tm));
}
BENCHMARK(BM_WalkPrefix);

void BM_WindingProfile(benchmark::State& state) {
  const TurnMap tm = TurnMap::standard(2);
  const Path p = walk_prefix(expand(Rational(6, 7), 2), 100000, tm);
  const auto pts = positions(p);
  for (auto _ : state) benchmark::DoNotOptimize(winding_profile(pts, Point{40, 40}, p.grid()));
}
BENCHMARK(BM_WindingProfile);

void BM_TailsAgree(benchmark::State& state) {
  const TurnMap tm = TurnMap::standard(2);
  const Rational r1(2, 3);
  const Rational r2 = insert_run(r1, 3, 0, tm);
  for (auto _ : state) benchmark::DoNotOptimize(tails_agree(r1, r2, tm, 64));
}
BENCHMARK(BM_TailsAgree);

void BM_Survey(benchmark::State& state) {
  SurveyOptions opt;
  opt.max_q = 30;
  for (auto _ : state) benchmark::DoNotOptimize(survey(opt));
}
BENCHMARK(BM_Survey);

}  // namespace

BENCHMARK_MAIN();
