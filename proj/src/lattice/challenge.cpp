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

#include "ofs/lattice/challenge.hpp"

#include <bit>
#include <cstdlib>

#include "ofs/error.hpp"

namespace ofs::lattice {

namespace {

using u128 = unsigned __int128;

std::uint64_t binomial(std::uint32_t n, std::uint32_t r) {
  if (r > n) return 0;
  u128 acc = 1;
  for (std::uint32_t i = 1; i <= r; ++i) {
    acc = acc * (n - r + i) / i;
    if (acc > UINT64_MAX) throw Error(ErrorCode::kUnsupportedParameters, "binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t block_size(std::uint32_t k, std::uint32_t j) {
  const u128 b = static_cast<u128>(binomial(k, j)) << j;
  if (j >= 64 || b > UINT64_MAX) throw Error(ErrorCode::kUnsupportedParameters, "challenge space too large");
  return static_cast<std::uint64_t>(b);
}

u128 read_le(ByteView bytes) {
  u128 v = 0;
  for (std::size_t i = bytes.size(); i-- > 0;) v = (v << 8) | bytes[i];
  return v;
}

}  // namespace

std::uint32_t LatticeChallenge::weight() const {
  std::uint32_t w = 0;
  for (auto v : c) w += v != 0;
  return w;
}

std::uint64_t challenge_space_size(std::uint32_t k, std::uint32_t kappa) {
  u128 total = 0;
  for (std::uint32_t j = 0; j <= kappa && j <= k; ++j) {
    total += block_size(k, j);
    if (total > UINT64_MAX) throw Error(ErrorCode::kUnsupportedParameters, "challenge space too large");
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t rank_challenge(const LatticeChallenge& c, std::uint32_t kappa) {
  const auto k = static_cast<std::uint32_t>(c.c.size());
  const std::uint32_t j = c.weight();
  if (j > kappa) throw Error(ErrorCode::kDomainError, "challenge weight exceeds kappa");
  std::uint64_t rank = 0;
  for (std::uint32_t w = 0; w < j; ++w) rank += block_size(k, w);

  // Lexicographic rank of the support {p_0 < ... < p_{j-1}}.
  std::uint64_t comb = 0;
  std::uint64_t signs = 0;
  std::uint32_t next = 0;  // smallest position still available
  std::uint32_t placed = 0;
  for (std::uint32_t pos = 0; pos < k; ++pos) {
    if (c.c[pos] == 0) continue;
    for (std::uint32_t skip = next; skip < pos; ++skip) comb += binomial(k - skip - 1, j - placed - 1);
    if (c.c[pos] < 0) signs |= std::uint64_t{1} << placed;
    next = pos + 1;
    ++placed;
  }
  return rank + (comb << j) + signs;
}

LatticeChallenge unrank_challenge(std::uint64_t rank, std::uint32_t k, std::uint32_t kappa) {
  std::uint32_t j = 0;
  for (; j <= kappa && j <= k; ++j) {
    const std::uint64_t b = block_size(k, j);
    if (rank < b) break;
    rank -= b;
  }
  if (j > kappa || j > k) throw Error(ErrorCode::kDomainError, "challenge rank out of range");
  std::uint64_t comb = rank >> j;
  const std::uint64_t signs = rank & ((std::uint64_t{1} << j) - 1);

  LatticeChallenge out{std::vector<std::int8_t>(k, 0)};
  std::uint32_t pos = 0;
  for (std::uint32_t placed = 0; placed < j; ++placed) {
    for (;;) {
      const std::uint64_t with_pos = binomial(k - pos - 1, j - placed - 1);
      if (comb < with_pos) break;
      comb -= with_pos;
      ++pos;
    }
    out.c[pos] = ((signs >> placed) & 1u) ? -1 : 1;
    ++pos;
  }
  return out;
}

std::size_t challenge_seed_length(const LatticeParams& p) {
  const std::uint64_t size = challenge_space_size(p.k, p.kappa);
  return (std::bit_width(size) + 64 + 7) / 8;
}

LatticeChallenge derive_challenge(ByteView seed, const LatticeParams& p) {
  const std::size_t need = challenge_seed_length(p);
  if (seed.size() < need) {
    throw Error(ErrorCode::kSeedExhausted, "challenge seed has " + std::to_string(seed.size()) +
                                               " bytes, need " + std::to_string(need));
  }
  const std::uint64_t size = challenge_space_size(p.k, p.kappa);
  const u128 v = read_le(seed.first(need));
  return unrank_challenge(static_cast<std::uint64_t>(v % size), p.k, p.kappa);
}

Bytes challenge_seed_for(const LatticeChallenge& c, const LatticeParams& p, Rng& rng) {
  const std::size_t len = challenge_seed_length(p);
  const std::uint64_t size = challenge_space_size(p.k, p.kappa);
  const std::uint64_t rank = rank_challenge(c, p.kappa);
  const u128 top = len >= 16 ? ~u128{0} : ((u128{1} << (8 * len)) - 1);
  // seed = rank + t |V| for t uniform in [0, t_max].
  const u128 t_max = (top - rank) / size;
  const unsigned bits = [&] {
    unsigned b = 0;
    for (u128 v = t_max; v != 0; v >>= 1) ++b;
    return b;
  }();
  u128 t;
  do {
    t = (static_cast<u128>(rng.next_u64()) << 64) | rng.next_u64();
    t = bits >= 128 ? t : (t & ((u128{1} << bits) - 1));
  } while (t > t_max);
  u128 seed = rank + t * size;
  Bytes out(len);
  for (std::size_t i = 0; i < len; ++i, seed >>= 8) out[i] = static_cast<std::uint8_t>(seed);
  return out;
}

bool in_challenge_space(const LatticeChallenge& c, const LatticeParams& p) {
  if (c.c.size() != p.k) return false;
  std::uint32_t w = 0;
  for (auto v : c.c) {
    if (v < -1 || v > 1) return false;
    w += v != 0;
  }
  return w <= p.kappa;
}

}  // namespace ofs::lattice
