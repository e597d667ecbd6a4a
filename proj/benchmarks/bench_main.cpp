// Copyright 2026 The nipr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include "nipr/analysis.hpp"
#include "nipr/interconnect.hpp"
#include "nipr/ni_lemma.hpp"
#include "nipr/rational.hpp"
#include "nipr/statespace.hpp"
#include "nipr/transforms.hpp"

namespace {

using nipr::Domain;
using nipr::Polynomial;
using nipr::RationalMatrix;
using nipr::RationalScalar;

// Sum of k lightly damped modes times a rank-one direction, plus an integrator.
RationalMatrix flexible(int modes, Domain d) {
  nipr::Mat v(2, 2);
  v << 1.0, 0.4, 0.4, 0.6;
  RationalMatrix g = RationalMatrix::scaled(RationalScalar(Polynomial{1.0}, Polynomial{0.0, 1.0}), v, Domain::CT);
  for (int k = 1; k <= modes; ++k) {
    const double w = 0.7 * k;
    g = g + RationalMatrix::scaled(RationalScalar(Polynomial{1.0}, Polynomial{w * w, 0.04 * w, 1.0}),
                                   nipr::Mat::Identity(2, 2), Domain::CT);
  }
  return d == Domain::CT ? g : nipr::cayley_ct_to_dt(g);
}

void BM_ClassifyCni(benchmark::State& st) {
  const RationalMatrix g = flexible(static_cast<int>(st.range(0)), Domain::CT);
  for (auto _ : st) benchmark::DoNotOptimize(nipr::classify_cni(g).verdict);
}
BENCHMARK(BM_ClassifyCni)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ClassifyDni(benchmark::State& st) {
  const RationalMatrix g = flexible(static_cast<int>(st.range(0)), Domain::DT);
  for (auto _ : st) benchmark::DoNotOptimize(nipr::classify_dni(g).verdict);
}
BENCHMARK(BM_ClassifyDni)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Poles(benchmark::State& st) {
  const RationalMatrix g = flexible(static_cast<int>(st.range(0)), Domain::CT);
  for (auto _ : st) benchmark::DoNotOptimize(nipr::poles(g).size());
}
BENCHMARK(BM_Poles)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_MinimalRealization(benchmark::State& st) {
  const RationalMatrix g = flexible(static_cast<int>(st.range(0)), Domain::DT);
  for (auto _ : st) benchmark::DoNotOptimize(nipr::minimal_realization(g).n());
}
BENCHMARK(BM_MinimalRealization)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_DniLemma(benchmark::State& st) {
  nipr::StateSpace ss;
  const int n = static_cast<int>(st.range(0));
  ss.domain = Domain::DT;
  ss.A = nipr::Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) ss.A(i, i) = -0.8 + 1.6 * (i + 0.5) / n;
  ss.B = nipr::Mat::Ones(n, 1);
  // C = -B^T (A^T - I)^-1 X (A + I) with X = I.
  ss.C = -ss.B.transpose() * (ss.A.transpose() - nipr::Mat::Identity(n, n)).inverse() *
         (ss.A + nipr::Mat::Identity(n, n));
  ss.D = nipr::Mat::Zero(1, 1);
  for (auto _ : st) benchmark::DoNotOptimize(nipr::dni_lemma_check(ss).status);
}
BENCHMARK(BM_DniLemma)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_InternalStability(benchmark::State& st) {
  const nipr::StateSpace p = nipr::minimal_realization(flexible(static_cast<int>(st.range(0)), Domain::DT));
  const nipr::StateSpace q = nipr::StateSpace::static_gain(-0.1 * nipr::Mat::Identity(2, 2), Domain::DT);
  for (auto _ : st) benchmark::DoNotOptimize(nipr::internal_stability(p, q).internally_stable);
}
BENCHMARK(BM_InternalStability)->Arg(2)->Arg(4)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
