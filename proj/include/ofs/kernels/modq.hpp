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

#include <cstdint>
#include <span>
#include <vector>

#include "ofs/matrix.hpp"

// Arithmetic over Z_q for matrices of residues in [0, q). Every kernel has a
// serial reference and an OpenMP version producing identical results.
namespace ofs::kernels {

using Residue = std::uint32_t;
using ResidueMatrix = Matrix<Residue>;

constexpr Residue reduce_mod(std::int64_t v, std::uint32_t q) {
  std::int64_t r = v % static_cast<std::int64_t>(q);
  return static_cast<Residue>(r < 0 ? r + q : r);
}

namespace serial {
// A * x mod q for a signed integer vector x.
std::vector<Residue> matvec_mod_q(const ResidueMatrix& a, std::span<const std::int64_t> x,
                                  std::uint32_t q);
// A * B mod q for a signed integer matrix B.
ResidueMatrix matmul_mod_q(const ResidueMatrix& a, const Matrix<std::int64_t>& b, std::uint32_t q);
}  // namespace serial

namespace omp {
std::vector<Residue> matvec_mod_q(const ResidueMatrix& a, std::span<const std::int64_t> x,
                                  std::uint32_t q);
ResidueMatrix matmul_mod_q(const ResidueMatrix& a, const Matrix<std::int64_t>& b, std::uint32_t q);
}  // namespace omp

using omp::matmul_mod_q;
using omp::matvec_mod_q;

}  // namespace ofs::kernels
