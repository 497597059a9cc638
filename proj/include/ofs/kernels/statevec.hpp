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

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>

// Amplitude-update kernels for a dense statevector. Qubit i is bit i of the
// basis-state index.
namespace ofs::kernels {

using Amplitude = std::complex<double>;
using Gate2x2 = std::array<Amplitude, 4>;  // row-major {m00, m01, m10, m11}

namespace serial {
void apply_1q(std::span<Amplitude> amps, unsigned target, const Gate2x2& g);
// Flip `target` on basis states where every bit of `control_mask` is set.
void apply_mcx(std::span<Amplitude> amps, std::uint64_t control_mask, unsigned target);
// |x>|y>|w> -> |x>|y xor table[x]>|w>, x on the low `input_bits` qubits and y
// on the next `answer_bits`.
void apply_xor_oracle(std::span<Amplitude> amps, unsigned input_bits, unsigned answer_bits,
                      std::span<const std::uint32_t> table);
double norm_squared(std::span<const Amplitude> amps);
}  // namespace serial

namespace omp {
void apply_1q(std::span<Amplitude> amps, unsigned target, const Gate2x2& g);
void apply_mcx(std::span<Amplitude> amps, std::uint64_t control_mask, unsigned target);
void apply_xor_oracle(std::span<Amplitude> amps, unsigned input_bits, unsigned answer_bits,
                      std::span<const std::uint32_t> table);
double norm_squared(std::span<const Amplitude> amps);
}  // namespace omp

using omp::apply_1q;
using omp::apply_mcx;
using omp::apply_xor_oracle;
using omp::norm_squared;

}  // namespace ofs::kernels
