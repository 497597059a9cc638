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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>

#include "ofs/bytes.hpp"

namespace ofs::lattice {

// Rejection-sampling constant M = exp(1 + 1/288).
inline const double kRepetitionM = std::exp(1.0 + 1.0 / 288.0);

struct LatticeParams {
  std::uint32_t n = 0;       // rows of A
  std::uint32_t q = 0;       // modulus, a power of two
  std::uint32_t m = 0;       // columns of A
  std::uint32_t k = 0;       // columns of the secret S
  std::uint32_t d = 0;       // |S_ij| <= d
  std::uint32_t kappa = 0;   // challenge weight bound
  double s = 0.0;            // Gaussian parameter, rho_s(x) = exp(-pi |x|^2 / s^2)
  double eta = 1.1;          // verification slack
  std::uint32_t lambda = 0;  // security parameter (bits of signing randomness)

  std::uint32_t log_q() const;
  // Columns of A not covered by the gadget block: m - n log q.
  std::uint32_t mbar() const { return m - n * log_q(); }
  double norm_bound() const { return eta * s * std::sqrt(static_cast<double>(m)); }

  friend bool operator==(const LatticeParams&, const LatticeParams&) = default;
};

// Outcome of the three parameter relations, kept for reporting.
struct ParamCheck {
  bool dimension_ok = false;      // m >= ceil(2 n log2 q)
  bool challenge_space_ok = false;  // 2^kappa * C(k, kappa) >= 2^lambda
  bool gaussian_ok = false;       // s >= 12 d kappa sqrt(m)
  std::string describe() const;
  bool all() const { return dimension_ok && challenge_space_ok && gaussian_ok; }
};

ParamCheck check_params(const LatticeParams& p);

// Throws UnsupportedParameters unless the structural constraints (q power of
// two, positive dimensions, kappa <= k) and all three relations hold.
void validate_params(const LatticeParams& p);

Bytes encode_params(const LatticeParams& p);
LatticeParams decode_params(ByteView bytes);

}  // namespace ofs::lattice
