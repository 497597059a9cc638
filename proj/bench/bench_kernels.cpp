// Copyright 2026 The OFS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP versions. Thread count comes
// from OMP_NUM_THREADS as usual.
#include <benchmark/benchmark.h>

#include "ofs/kernels/modq.hpp"
#include "ofs/kernels/statevec.hpp"
#include "ofs/kernels/trials.hpp"
#include "ofs/lattice/gaussian.hpp"
#include "ofs/rng.hpp"

namespace {

using namespace ofs;
using namespace ofs::kernels;

std::vector<Amplitude> amps_for(unsigned qubits) {
  Rng rng(1);
  std::vector<Amplitude> v(std::size_t{1} << qubits);
  for (auto& a : v) a = Amplitude(rng.standard_normal(), rng.standard_normal());
  return v;
}

const Gate2x2 kHadamard{Amplitude(M_SQRT1_2), Amplitude(M_SQRT1_2), Amplitude(M_SQRT1_2), Amplitude(-M_SQRT1_2)};

template <bool Parallel>
void BM_Apply1q(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  auto v = amps_for(q);
  for (auto _ : state) {
    for (unsigned t = 0; t < q; ++t) {
      if constexpr (Parallel) omp::apply_1q(v, t, kHadamard);
      else serial::apply_1q(v, t, kHadamard);
    }
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * q * static_cast<std::int64_t>(v.size()));
}

template <bool Parallel>
void BM_XorOracle(benchmark::State& state) {
  const auto q = static_cast<unsigned>(state.range(0));
  auto v = amps_for(q);
  const unsigned a = q / 2, b = q - a;
  Rng rng(2);
  std::vector<std::uint32_t> table(std::size_t{1} << a);
  for (auto& t : table) t = static_cast<std::uint32_t>(rng.uniform(std::uint64_t{1} << b));
  for (auto _ : state) {
    if constexpr (Parallel) omp::apply_xor_oracle(v, a, b, table);
    else serial::apply_xor_oracle(v, a, b, table);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}

template <bool Parallel>
void BM_MatmulModQ(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  ResidueMatrix a(n, 4 * n);
  for (auto& x : a.data()) x = static_cast<Residue>(rng.uniform(1024));
  Matrix<std::int64_t> b(4 * n, n);
  for (auto& x : b.data()) x = static_cast<std::int64_t>(rng.uniform(3)) - 1;
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(omp::matmul_mod_q(a, b, 1024));
    else benchmark::DoNotOptimize(serial::matmul_mod_q(a, b, 1024));
  }
}

template <bool Parallel>
void BM_RunTrials(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto trial = [](std::size_t i) {
    Rng rng = Rng::derive(7, i);
    return lattice::squared_norm(lattice::gaussian_vector(160, 608.0, rng));
  };
  for (auto _ : state) {
    if constexpr (Parallel) benchmark::DoNotOptimize(omp::run_trials<double>(n, trial));
    else benchmark::DoNotOptimize(serial::run_trials<double>(n, trial));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

BENCHMARK(BM_Apply1q<false>)->Name("apply_1q/serial")->DenseRange(12, 16, 2);
BENCHMARK(BM_Apply1q<true>)->Name("apply_1q/omp")->DenseRange(12, 16, 2);
BENCHMARK(BM_XorOracle<false>)->Name("xor_oracle/serial")->DenseRange(12, 16, 2);
BENCHMARK(BM_XorOracle<true>)->Name("xor_oracle/omp")->DenseRange(12, 16, 2);
BENCHMARK(BM_MatmulModQ<false>)->Name("matmul_mod_q/serial")->Arg(32)->Arg(128);
BENCHMARK(BM_MatmulModQ<true>)->Name("matmul_mod_q/omp")->Arg(32)->Arg(128);
BENCHMARK(BM_RunTrials<false>)->Name("run_trials/serial")->Arg(256)->Arg(4096);
BENCHMARK(BM_RunTrials<true>)->Name("run_trials/omp")->Arg(256)->Arg(4096);

}  // namespace

BENCHMARK_MAIN();
