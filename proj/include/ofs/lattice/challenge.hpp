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
#include <vector>

#include "ofs/bytes.hpp"
#include "ofs/lattice/params.hpp"
#include "ofs/rng.hpp"

namespace ofs::lattice {

// c in {-1, 0, 1}^k with |c|_1 <= kappa.
struct LatticeChallenge {
  std::vector<std::int8_t> c;

  std::uint32_t weight() const;
  friend bool operator==(const LatticeChallenge&, const LatticeChallenge&) = default;
};

// |V| = sum_{j <= kappa} C(k, j) 2^j. Throws UnsupportedParameters if it does
// not fit in 64 bits.
std::uint64_t challenge_space_size(std::uint32_t k, std::uint32_t kappa);

// Bijection [0, |V|) <-> V. Elements are ordered by weight, then by the
// lexicographic rank of the support, then by the sign pattern (bit i set means
// the i-th support position is -1).
std::uint64_t rank_challenge(const LatticeChallenge& c, std::uint32_t kappa);
LatticeChallenge unrank_challenge(std::uint64_t rank, std::uint32_t k, std::uint32_t kappa);

// Seed length: enough bytes for |V| plus 64 bits, so that reducing the
// little-endian seed mod |V| has bias below 2^-64.
std::size_t challenge_seed_length(const LatticeParams& p);

// Throws SeedExhausted if the seed is shorter than challenge_seed_length.
LatticeChallenge derive_challenge(ByteView seed, const LatticeParams& p);

// A uniformly random seed among those mapping to c.
Bytes challenge_seed_for(const LatticeChallenge& c, const LatticeParams& p, Rng& rng);

bool in_challenge_space(const LatticeChallenge& c, const LatticeParams& p);

}  // namespace ofs::lattice
