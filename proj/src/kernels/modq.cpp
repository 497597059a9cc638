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

#include "ofs/kernels/modq.hpp"

#include <stdexcept>

namespace ofs::kernels {

namespace {
void check_shapes(std::size_t cols, std::size_t len) {
  if (cols != len) throw std::invalid_argument("matvec_mod_q: dimension mismatch");
}

// Products of two residues are below 2^64, so a 128-bit accumulator is exact.
Residue dot_mod_q(std::span<const Residue> row, std::span<const std::int64_t> x, std::uint32_t q) {
  unsigned __int128 acc = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    acc += static_cast<unsigned __int128>(row[j]) * reduce_mod(x[j], q);
  }
  return static_cast<Residue>(acc % q);
}
}  // namespace

namespace serial {

std::vector<Residue> matvec_mod_q(const ResidueMatrix& a, std::span<const std::int64_t> x,
                                  std::uint32_t q) {
  check_shapes(a.cols(), x.size());
  std::vector<Residue> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = dot_mod_q(a.row(i), x, q);
  return out;
}

ResidueMatrix matmul_mod_q(const ResidueMatrix& a, const Matrix<std::int64_t>& b, std::uint32_t q) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul_mod_q: dimension mismatch");
  ResidueMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) {
        acc += static_cast<unsigned __int128>(a(i, t)) * reduce_mod(b(t, j), q);
      }
      out(i, j) = static_cast<Residue>(acc % q);
    }
  }
  return out;
}

}  // namespace serial

namespace omp {

std::vector<Residue> matvec_mod_q(const ResidueMatrix& a, std::span<const std::int64_t> x,
                                  std::uint32_t q) {
  check_shapes(a.cols(), x.size());
  std::vector<Residue> out(a.rows());
  const auto rows = static_cast<std::int64_t>(a.rows());
#pragma omp parallel for schedule(static) if (rows * static_cast<std::int64_t>(a.cols()) > 65536)
  for (std::int64_t i = 0; i < rows; ++i) out[i] = dot_mod_q(a.row(i), x, q);
  return out;
}

ResidueMatrix matmul_mod_q(const ResidueMatrix& a, const Matrix<std::int64_t>& b, std::uint32_t q) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul_mod_q: dimension mismatch");
  ResidueMatrix out(a.rows(), b.cols());
  const auto rows = static_cast<std::int64_t>(a.rows());
  const auto cols = static_cast<std::int64_t>(b.cols());
#pragma omp parallel for collapse(2) schedule(static)
  for (std::int64_t i = 0; i < rows; ++i) {
    for (std::int64_t j = 0; j < cols; ++j) {
      unsigned __int128 acc = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) {
        acc += static_cast<unsigned __int128>(a(i, t)) * reduce_mod(b(t, j), q);
      }
      out(i, j) = static_cast<Residue>(acc % q);
    }
  }
  return out;
}

}  // namespace omp

}  // namespace ofs::kernels
