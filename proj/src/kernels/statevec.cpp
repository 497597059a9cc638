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

#include "ofs/kernels/statevec.hpp"

#include <utility>

namespace ofs::kernels {

namespace {

inline std::uint64_t oracle_partner(std::uint64_t i, unsigned input_bits, unsigned answer_bits,
                                    std::span<const std::uint32_t> table) {
  const std::uint64_t x = i & ((std::uint64_t{1} << input_bits) - 1);
  const std::uint64_t answer_mask = (std::uint64_t{1} << answer_bits) - 1;
  return i ^ ((static_cast<std::uint64_t>(table[x]) & answer_mask) << input_bits);
}

inline void update_pair(std::span<Amplitude> amps, std::uint64_t i0, std::uint64_t i1,
                        const Gate2x2& g) {
  const Amplitude a0 = amps[i0];
  const Amplitude a1 = amps[i1];
  amps[i0] = g[0] * a0 + g[1] * a1;
  amps[i1] = g[2] * a0 + g[3] * a1;
}

// Insert a zero bit at position `target` into `k`.
inline std::uint64_t spread(std::uint64_t k, unsigned target) {
  const std::uint64_t low = k & ((std::uint64_t{1} << target) - 1);
  return ((k >> target) << (target + 1)) | low;
}

}  // namespace

namespace serial {

void apply_1q(std::span<Amplitude> amps, unsigned target, const Gate2x2& g) {
  const std::uint64_t half = amps.size() / 2;
  const std::uint64_t bit = std::uint64_t{1} << target;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = spread(k, target);
    update_pair(amps, i0, i0 | bit, g);
  }
}

void apply_mcx(std::span<Amplitude> amps, std::uint64_t control_mask, unsigned target) {
  const std::uint64_t half = amps.size() / 2;
  const std::uint64_t bit = std::uint64_t{1} << target;
  for (std::uint64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = spread(k, target);
    if ((i0 & control_mask) == control_mask) std::swap(amps[i0], amps[i0 | bit]);
  }
}

void apply_xor_oracle(std::span<Amplitude> amps, unsigned input_bits, unsigned answer_bits,
                      std::span<const std::uint32_t> table) {
  for (std::uint64_t i = 0; i < amps.size(); ++i) {
    const std::uint64_t j = oracle_partner(i, input_bits, answer_bits, table);
    if (j > i) std::swap(amps[i], amps[j]);
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  double acc = 0.0;
  for (const Amplitude& a : amps) acc += std::norm(a);
  return acc;
}

}  // namespace serial

namespace omp {

// Below this many amplitudes the fork/join overhead dominates.
constexpr std::int64_t kParallelThreshold = 1 << 12;

void apply_1q(std::span<Amplitude> amps, unsigned target, const Gate2x2& g) {
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  const std::uint64_t bit = std::uint64_t{1} << target;
#pragma omp parallel for schedule(static) if (half > kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = spread(static_cast<std::uint64_t>(k), target);
    update_pair(amps, i0, i0 | bit, g);
  }
}

void apply_mcx(std::span<Amplitude> amps, std::uint64_t control_mask, unsigned target) {
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  const std::uint64_t bit = std::uint64_t{1} << target;
#pragma omp parallel for schedule(static) if (half > kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::uint64_t i0 = spread(static_cast<std::uint64_t>(k), target);
    if ((i0 & control_mask) == control_mask) std::swap(amps[i0], amps[i0 | bit]);
  }
}

void apply_xor_oracle(std::span<Amplitude> amps, unsigned input_bits, unsigned answer_bits,
                      std::span<const std::uint32_t> table) {
  const auto n = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto ui = static_cast<std::uint64_t>(i);
    const std::uint64_t j = oracle_partner(ui, input_bits, answer_bits, table);
    if (j > ui) std::swap(amps[ui], amps[j]);
  }
}

double norm_squared(std::span<const Amplitude> amps) {
  const auto n = static_cast<std::int64_t>(amps.size());
  double acc = 0.0;
#pragma omp parallel for reduction(+ : acc) schedule(static) if (n > kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) acc += std::norm(amps[i]);
  return acc;
}

}  // namespace omp

}  // namespace ofs::kernels
