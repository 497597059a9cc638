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
#include <memory>
#include <vector>

#include "ofs/kernels/modq.hpp"
#include "ofs/lattice/params.hpp"
#include "ofs/matrix.hpp"
#include "ofs/rng.hpp"

namespace ofs::lattice {

using kernels::ResidueMatrix;
using IntMatrix = Matrix<std::int64_t>;
using IntVector = std::vector<std::int64_t>;
using ResidueVector = std::vector<kernels::Residue>;

// Short basis of the kernel lattice {x : A x = 0 mod q} together with its
// Gram-Schmidt data, as needed by the randomized nearest-plane sampler.
struct ShortBasis {
  std::vector<IntVector> columns;          // b_1 .. b_m
  std::vector<std::vector<double>> gs;     // Gram-Schmidt vectors b~_i
  std::vector<double> gs_sqnorm;           // |b~_i|^2

  double max_gs_norm() const;
  double max_column_norm() const;
};

// Gadget trapdoor: A = [Abar | G - Abar Rbar] with G = I_n (x) (1, 2, ..., q/2),
// so that A [Rbar; I] = G. The short basis is assembled from Rbar, the
// decomposition of -Abar and the basis of the kernel of G.
class LatticeTrapdoorKey {
 public:
  LatticeTrapdoorKey(const LatticeParams& params, ResidueMatrix a, IntMatrix rbar);

  const ResidueMatrix& a() const noexcept { return a_; }
  const IntMatrix& rbar() const noexcept { return rbar_; }
  const ShortBasis& basis() const noexcept { return *basis_; }
  std::uint32_t q() const noexcept { return q_; }
  std::uint32_t log_q() const noexcept { return log_q_; }

  // Every basis column b satisfies |b| <= 1 + (|Rbar|_F + 1) sqrt(n log q).
  double column_norm_bound() const;
  // Smallest s accepted by sample_preimage: eta_eps(Z) * max |b~_i| with eps = 2^-64.
  double quality_threshold() const;

  // x with A x = y mod q (not short).
  IntVector particular_solution(const ResidueVector& y) const;

 private:
  std::uint32_t q_;
  std::uint32_t log_q_;
  std::uint32_t n_;
  ResidueMatrix a_;
  IntMatrix rbar_;
  std::shared_ptr<const ShortBasis> basis_;
};

// Smoothing parameter of Z for eps = 2^-64: sqrt(ln(2 (1 + 1/eps)) / pi).
double integer_smoothing_parameter();

LatticeTrapdoorKey gen_trap(const LatticeParams& params, Rng& rng);

// Sample from D_{L, s, center} for the lattice L spanned by `basis`
// (Klein / GPV randomized nearest plane).
IntVector sample_lattice_gaussian(const ShortBasis& basis, double s, const std::vector<double>& center,
                                  Rng& rng);

// y' with A y' = y mod q, distributed as the discrete Gaussian of parameter s
// over that coset. Throws QualityViolation if s is below the trapdoor threshold.
IntVector sample_preimage(const LatticeTrapdoorKey& trapdoor, const ResidueVector& y, double s,
                          Rng& rng);

}  // namespace ofs::lattice
