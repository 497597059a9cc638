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
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ofs/bytes.hpp"
#include "ofs/lattice/challenge.hpp"
#include "ofs/lattice/params.hpp"
#include "ofs/lattice/trapdoor.hpp"
#include "ofs/rng.hpp"
#include "ofs/sigma/protocol.hpp"

namespace ofs::lattice {

struct LatticePublicKey {
  ResidueMatrix a;  // n x m
  ResidueMatrix r;  // n x k, R = A S mod q

  friend bool operator==(const LatticePublicKey&, const LatticePublicKey&) = default;
};

struct LatticeSecretKey {
  IntMatrix s;  // m x k, entries in [-d, d]
  std::shared_ptr<const LatticeTrapdoorKey> trapdoor;

  friend bool operator==(const LatticeSecretKey& a, const LatticeSecretKey& b) {
    return a.s == b.s && (a.trapdoor == b.trapdoor ||
                          (a.trapdoor && b.trapdoor && a.trapdoor->rbar() == b.trapdoor->rbar()));
  }
};

// A u = R e mod q with e in {-2..2}^k, e != 0 and |u| <= 2 eta s sqrt(m).
struct ExtractedSolution {
  IntVector u;
  std::vector<std::int64_t> e;
};

std::pair<LatticePublicKey, LatticeSecretKey> lattice_keygen(const LatticeParams& p, Rng& rng);

// R = A S, |S_ij| <= d, and the trapdoor matches A.
bool lattice_relation_check(const LatticeParams& p, const LatticePublicKey& pk,
                            const LatticeSecretKey& sk);

// S c as an integer vector of length m.
IntVector secret_times_challenge(const IntMatrix& s, const LatticeChallenge& c);

// min(1, D_s(z) / (M D_{-Sc,s}(z))) = min(1, exp(pi (|y'|^2 - |z|^2) / s^2) / M).
double acceptance_probability(const LatticeParams& p, const IntVector& y_prime, const IntVector& z);

// y' <- SampleD(T, A, Y, s), z = y' - S c, then keep z with the probability
// above. nullopt is an abort.
std::optional<IntVector> lattice_respond(const LatticeParams& p, const LatticeSecretKey& sk,
                                         const ResidueVector& y, const LatticeChallenge& c, Rng& rng);

// floor((eta s)^2 m), the bound on |z|^2.
std::uint64_t squared_norm_bound(const LatticeParams& p);

// |z|^2 <= floor((eta s)^2 m) and R c = Y - A z mod q. Throws ShapeMismatch.
bool verify_id(const LatticeParams& p, const LatticePublicKey& pk, const ResidueVector& y,
               const LatticeChallenge& c, const IntVector& z);

ExtractedSolution lattice_extract(const LatticeParams& p, const LatticePublicKey& pk,
                                  const ResidueVector& y1, const LatticeChallenge& c1,
                                  const IntVector& z1, const ResidueVector& y2,
                                  const LatticeChallenge& c2, const IntVector& z2);

bool extracted_solution_valid(const LatticeParams& p, const LatticePublicKey& pk,
                              const ExtractedSolution& sol);

class LatticeProtocol {
 public:
  using Statement = LatticePublicKey;
  using Witness = LatticeSecretKey;
  using Commitment = ResidueVector;
  using Challenge = LatticeChallenge;
  using Response = IntVector;
  using ExtractedWitness = ExtractedSolution;

  static constexpr std::uint8_t kTag = 0x01;
  static constexpr std::string_view kName = "lattice";

  // Throws UnsupportedParameters.
  explicit LatticeProtocol(LatticeParams params);

  const LatticeParams& params() const noexcept { return params_; }
  std::size_t security_bits() const noexcept { return params_.lambda; }

  std::pair<Statement, Witness> keygen(Rng& rng) const;
  bool relation_check(const Statement& x, const Witness& w) const;

  // Y = A y for y <- D_s^m.
  Commitment honest_commit(const Statement& x, const Witness& w, Rng& rng) const;
  std::optional<Response> respond(const Statement& x, const Witness& w, const Commitment& com,
                                  const Challenge& ch, Rng& rng) const;
  bool verify(const Statement& x, const Commitment& com, const Challenge& ch,
              const Response& rsp) const;

  // rho is n log q bits, packed little-endian; Com unpacks it into Y and
  // SmplRnd packs Y back.
  std::size_t rnd_bytes(const Statement& x) const;
  Commitment commit_from_rnd(const Statement& x, ByteView rho) const;
  Bytes sample_rnd(const Statement& x, const Commitment& com, Rng& rng) const;
  std::size_t challenge_seed_bytes(const Statement& x) const;
  Challenge challenge_from_seed(const Statement& x, ByteView seed) const;
  Bytes challenge_seed_for(const Statement& x, const Challenge& ch, Rng& rng) const;

  // Aborts with probability 1 - 1/M, matching the prover. Otherwise
  // c <- V, z <- D_s^m restricted to the norm bound, Y = A z + R c.
  std::optional<sigma::Transcript<LatticeProtocol>> simulate(const Statement& x, Rng& rng) const;
  ExtractedWitness extract(const Statement& x, const sigma::Transcript<LatticeProtocol>& t1,
                           const sigma::Transcript<LatticeProtocol>& t2) const;
  bool extracted_valid(const Statement& x, const ExtractedWitness& w) const;

  Bytes encode_statement(const Statement& x) const;
  Statement decode_statement(ByteView bytes) const;
  Bytes encode_witness(const Witness& w) const;
  Witness decode_witness(const Statement& x, ByteView bytes) const;
  Bytes encode_commitment(const Commitment& com) const;
  Commitment decode_commitment(const Statement& x, ByteView bytes) const;
  Bytes encode_challenge(const Challenge& ch) const;
  Challenge decode_challenge(const Statement& x, ByteView bytes) const;
  Bytes encode_response(const Response& rsp) const;
  Response decode_response(const Statement& x, ByteView bytes) const;

 private:
  LatticeParams params_;
};

static_assert(sigma::SigmaProtocol<LatticeProtocol>);

}  // namespace ofs::lattice
