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

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>

#include "ofs/bytes.hpp"
#include "ofs/rng.hpp"
#include "ofs/sigma/protocol.hpp"

// Guillou-Quisquater proof of knowledge of an e-th root, with the factorisation
// of N in the witness so the prover can answer commitments it did not choose.
// Not quantum-immune; used to exercise the generic transform with cheap
// integer arithmetic.
namespace ofs::gq {

struct GqStatement {
  mpz_class e;
  mpz_class n;
  mpz_class y;

  friend bool operator==(const GqStatement&, const GqStatement&) = default;
};

struct GqWitness {
  mpz_class w;
  mpz_class p;
  mpz_class q;
  mpz_class d;  // e^{-1} mod phi(N)

  friend bool operator==(const GqWitness&, const GqWitness&) = default;
};

struct GqTranscript {
  mpz_class r;
  std::uint64_t c = 0;
  mpz_class z;
};

struct GqParams {
  std::size_t bit_length = 32;
  std::uint64_t e = 65537;
  std::size_t lambda = 64;
};

// bit length of the challenge: strictly below e, so 2^ell <= e.
std::size_t challenge_bits(const GqStatement& x);

bool is_prime_small(const mpz_class& v);

// Draws p, q with N = pq of exactly `bit_length` bits and gcd(e, phi(N)) = 1,
// then w uniform in Z_N^* and y = w^e.
std::pair<GqStatement, GqWitness> gq_keygen(std::size_t bit_length, std::uint64_t e, Rng& rng,
                                            unsigned retry_budget = sigma::kDefaultRetryBudget);

// u with u^e = R mod N, computed as R^d.
mpz_class oblivious_root(const GqStatement& x, const GqWitness& w, const mpz_class& r);

mpz_class gq_respond(const GqStatement& x, const GqWitness& w, const mpz_class& u, std::uint64_t c);

bool gq_verify(const GqStatement& x, const mpz_class& r, std::uint64_t c, const mpz_class& z);

GqTranscript gq_simulate(const GqStatement& x, Rng& rng);

// Deterministic cores of the honest and simulated transcript maps, exposed so
// the two distributions can be compared by exhaustive enumeration.
GqTranscript honest_transcript_from(const GqStatement& x, const GqWitness& w, const mpz_class& u,
                                    std::uint64_t c);
GqTranscript simulated_transcript_from(const GqStatement& x, const mpz_class& z, std::uint64_t c);

mpz_class gq_extract(const GqStatement& x, const GqTranscript& t1, const GqTranscript& t2);

mpz_class uniform_below(const mpz_class& bound, Rng& rng);
mpz_class uniform_unit(const mpz_class& n, Rng& rng);

// Big-endian, minimal length, 2-byte length prefix.
void write_bigint(ByteWriter& out, const mpz_class& v);
mpz_class read_bigint(ByteReader& in);
Bytes bigint_be(const mpz_class& v, std::size_t width);
mpz_class bigint_from_be(ByteView bytes);

class GqProtocol {
 public:
  using Statement = GqStatement;
  using Witness = GqWitness;
  using Commitment = mpz_class;
  using Challenge = std::uint64_t;
  using Response = mpz_class;
  using ExtractedWitness = mpz_class;

  static constexpr std::uint8_t kTag = 0x02;
  static constexpr std::string_view kName = "gq";

  explicit GqProtocol(GqParams params);

  const GqParams& params() const noexcept { return params_; }
  std::size_t security_bits() const noexcept { return params_.lambda; }

  std::pair<Statement, Witness> keygen(Rng& rng) const;
  bool relation_check(const Statement& x, const Witness& w) const;

  Commitment honest_commit(const Statement& x, const Witness& w, Rng& rng) const;
  std::optional<Response> respond(const Statement& x, const Witness& w, const Commitment& com,
                                  const Challenge& ch, Rng& rng) const;
  bool verify(const Statement& x, const Commitment& com, const Challenge& ch,
              const Response& rsp) const;

  std::size_t rnd_bytes(const Statement& x) const;
  Commitment commit_from_rnd(const Statement& x, ByteView rho) const;
  Bytes sample_rnd(const Statement& x, const Commitment& com, Rng& rng) const;
  std::size_t challenge_seed_bytes(const Statement& x) const;
  Challenge challenge_from_seed(const Statement& x, ByteView seed) const;
  Bytes challenge_seed_for(const Statement& x, const Challenge& ch, Rng& rng) const;

  std::optional<sigma::Transcript<GqProtocol>> simulate(const Statement& x, Rng& rng) const;
  ExtractedWitness extract(const Statement& x, const sigma::Transcript<GqProtocol>& t1,
                           const sigma::Transcript<GqProtocol>& t2) const;
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
  GqParams params_;
};

static_assert(sigma::SigmaProtocol<GqProtocol>);

}  // namespace ofs::gq
