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

#include <gtest/gtest.h>

#include <omp.h>

#include "ofs/kernels/modq.hpp"
#include "ofs/kernels/statevec.hpp"
#include "ofs/kernels/trials.hpp"
#include "ofs/rng.hpp"

namespace ofs::kernels {
namespace {

// Large enough to cross the OpenMP threshold.
constexpr unsigned kQubits = 15;

std::vector<Amplitude> random_amps(std::size_t n, Rng& rng) {
  std::vector<Amplitude> v(n);
  for (auto& a : v) a = Amplitude(rng.standard_normal(), rng.standard_normal());
  return v;
}

class KernelThreads : public ::testing::Test {
 protected:
  void SetUp() override {
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
  }
  void TearDown() override { omp_set_num_threads(saved_); }
  int saved_ = 1;
};

TEST_F(KernelThreads, Apply1qMatchesSerial) {
  Rng rng(1);
  auto a = random_amps(std::size_t{1} << kQubits, rng);
  auto b = a;
  const Gate2x2 g{Amplitude(0.6, 0.0), Amplitude(0.0, 0.8), Amplitude(0.0, 0.8), Amplitude(0.6, 0.0)};
  for (unsigned t : {0u, 7u, kQubits - 1}) {
    serial::apply_1q(a, t, g);
    omp::apply_1q(b, t, g);
  }
  EXPECT_EQ(a, b);
}

TEST_F(KernelThreads, McxAndOracleMatchSerial) {
  Rng rng(2);
  auto a = random_amps(std::size_t{1} << kQubits, rng);
  auto b = a;
  serial::apply_mcx(a, 0b1011, 9);
  omp::apply_mcx(b, 0b1011, 9);
  EXPECT_EQ(a, b);
  std::vector<std::uint32_t> table(1 << 6);
  for (auto& v : table) v = static_cast<std::uint32_t>(rng.uniform(1 << 5));
  serial::apply_xor_oracle(a, 6, 5, table);
  omp::apply_xor_oracle(b, 6, 5, table);
  EXPECT_EQ(a, b);
}

TEST_F(KernelThreads, NormAgreesWithinRounding) {
  Rng rng(3);
  const auto a = random_amps(std::size_t{1} << kQubits, rng);
  EXPECT_NEAR(serial::norm_squared(a), omp::norm_squared(a), 1e-9 * serial::norm_squared(a));
}

TEST_F(KernelThreads, ModQMatchesSerial) {
  Rng rng(4);
  ResidueMatrix a(40, 300);
  for (auto& v : a.data()) v = static_cast<Residue>(rng.uniform(1024));
  Matrix<std::int64_t> b(300, 12);
  for (auto& v : b.data()) v = static_cast<std::int64_t>(rng.uniform(21)) - 10;
  std::vector<std::int64_t> x(300);
  for (auto& v : x) v = static_cast<std::int64_t>(rng.uniform(2001)) - 1000;
  EXPECT_EQ(serial::matvec_mod_q(a, x, 1024), omp::matvec_mod_q(a, x, 1024));
  EXPECT_EQ(serial::matmul_mod_q(a, b, 1024), omp::matmul_mod_q(a, b, 1024));
}

TEST(ModQ, MatvecAgainstNaive) {
  ResidueMatrix a(2, 3);
  const Residue vals[] = {1, 2, 3, 4, 5, 6};
  std::copy(std::begin(vals), std::end(vals), a.data().begin());
  const std::vector<std::int64_t> x{-1, 0, 7};
  // (-1 + 21, -4 + 42) mod 16
  EXPECT_EQ(matvec_mod_q(a, x, 16), (std::vector<Residue>{4, 6}));
  EXPECT_EQ(reduce_mod(-1, 16), 15u);
}

TEST_F(KernelThreads, TrialsKeepIndexOrder) {
  auto fn = [](std::size_t i) { return Rng::derive(77, i).next_u64(); };
  EXPECT_EQ(serial::run_trials<std::uint64_t>(500, fn), omp::run_trials<std::uint64_t>(500, fn));
}

TEST_F(KernelThreads, TrialsPropagateExceptions) {
  auto fn = [](std::size_t i) -> int {
    if (i == 17) throw std::runtime_error("boom");
    return 0;
  };
  EXPECT_THROW(omp::run_trials<int>(100, fn), std::runtime_error);
}

}  // namespace
}  // namespace ofs::kernels
