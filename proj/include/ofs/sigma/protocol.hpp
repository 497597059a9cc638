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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ofs/bytes.hpp"
#include "ofs/error.hpp"
#include "ofs/rng.hpp"

namespace ofs::sigma {

constexpr unsigned kDefaultRetryBudget = 64;

template <class P>
struct Transcript {
  typename P::Commitment com;
  typename P::Challenge ch;
  typename P::Response rsp;
};

// A three-move public-coin protocol with oblivious commitments.
//
// Besides the usual prover/verifier moves an instantiation provides
//   Com       commit_from_rnd(x, rho): deterministic, total on rnd_bytes(x) inputs
//   SmplRnd   sample_rnd(x, com, rng): a rho with commit_from_rnd(x, rho) == com
// and the analogous pair for challenges, so a hash output can be split into
// (rho, challenge seed) and a chosen (com, ch) can be planted back into an oracle.
// respond() returns nullopt on a rejection-sampling abort.
template <class P>
concept SigmaProtocol = requires(const P& p, const typename P::Statement& x,
                                 const typename P::Witness& w, const typename P::Commitment& com,
                                 const typename P::Challenge& ch, const typename P::Response& rsp,
                                 const Transcript<P>& t, const typename P::ExtractedWitness& ew,
                                 ByteView bytes, Rng& rng) {
  { P::kTag } -> std::convertible_to<std::uint8_t>;
  { P::kName } -> std::convertible_to<std::string_view>;
  { p.security_bits() } -> std::convertible_to<std::size_t>;

  { p.keygen(rng) } -> std::same_as<std::pair<typename P::Statement, typename P::Witness>>;
  { p.relation_check(x, w) } -> std::same_as<bool>;

  { p.honest_commit(x, w, rng) } -> std::same_as<typename P::Commitment>;
  { p.respond(x, w, com, ch, rng) } -> std::same_as<std::optional<typename P::Response>>;
  { p.verify(x, com, ch, rsp) } -> std::same_as<bool>;

  { p.rnd_bytes(x) } -> std::convertible_to<std::size_t>;
  { p.commit_from_rnd(x, bytes) } -> std::same_as<typename P::Commitment>;
  { p.sample_rnd(x, com, rng) } -> std::same_as<Bytes>;
  { p.challenge_seed_bytes(x) } -> std::convertible_to<std::size_t>;
  { p.challenge_from_seed(x, bytes) } -> std::same_as<typename P::Challenge>;
  { p.challenge_seed_for(x, ch, rng) } -> std::same_as<Bytes>;

  { p.simulate(x, rng) } -> std::same_as<std::optional<Transcript<P>>>;
  { p.extract(x, t, t) } -> std::same_as<typename P::ExtractedWitness>;
  { p.extracted_valid(x, ew) } -> std::same_as<bool>;

  { p.encode_statement(x) } -> std::same_as<Bytes>;
  { p.decode_statement(bytes) } -> std::same_as<typename P::Statement>;
  { p.encode_witness(w) } -> std::same_as<Bytes>;
  { p.decode_witness(x, bytes) } -> std::same_as<typename P::Witness>;
  { p.encode_commitment(com) } -> std::same_as<Bytes>;
  { p.decode_commitment(x, bytes) } -> std::same_as<typename P::Commitment>;
  { p.encode_challenge(ch) } -> std::same_as<Bytes>;
  { p.decode_challenge(x, bytes) } -> std::same_as<typename P::Challenge>;
  { p.encode_response(rsp) } -> std::same_as<Bytes>;
  { p.decode_response(x, bytes) } -> std::same_as<typename P::Response>;
};

// (x, w) with the relation checked once at construction.
template <SigmaProtocol P>
class StatementWitnessPair {
 public:
  StatementWitnessPair(const P& protocol, typename P::Statement x, typename P::Witness w)
      : x_(std::move(x)), w_(std::move(w)), security_bits_(protocol.security_bits()) {
    if (!protocol.relation_check(x_, w_)) {
      throw Error(ErrorCode::kRelationViolated, "witness does not satisfy the relation");
    }
  }

  const typename P::Statement& statement() const noexcept { return x_; }
  const typename P::Witness& witness() const noexcept { return w_; }
  std::size_t security_bits() const noexcept { return security_bits_; }

 private:
  typename P::Statement x_;
  typename P::Witness w_;
  std::size_t security_bits_;
};

template <SigmaProtocol P>
StatementWitnessPair<P> generate_pair(const P& protocol, Rng& rng) {
  auto [x, w] = protocol.keygen(rng);
  return StatementWitnessPair<P>(protocol, std::move(x), std::move(w));
}

template <SigmaProtocol P>
typename P::Challenge sample_challenge(const P& protocol, const typename P::Statement& x, Rng& rng) {
  Bytes seed = rng.bytes(protocol.challenge_seed_bytes(x));
  return protocol.challenge_from_seed(x, seed);
}

template <SigmaProtocol P>
bool verify_transcript(const P& protocol, const typename P::Statement& x, const Transcript<P>& t) {
  return protocol.verify(x, t.com, t.ch, t.rsp);
}

// Honest three-move run. Aborted responses restart the whole run.
template <SigmaProtocol P>
Transcript<P> run_honest(const P& protocol, const StatementWitnessPair<P>& pair, Rng& rng,
                         unsigned retry_budget = kDefaultRetryBudget) {
  const auto& x = pair.statement();
  for (unsigned attempt = 0; attempt < retry_budget; ++attempt) {
    auto com = protocol.honest_commit(x, pair.witness(), rng);
    auto ch = sample_challenge(protocol, x, rng);
    if (auto rsp = protocol.respond(x, pair.witness(), com, ch, rng)) {
      return Transcript<P>{std::move(com), std::move(ch), std::move(*rsp)};
    }
  }
  throw Error(ErrorCode::kAbortRetryExceeded,
              "honest run aborted " + std::to_string(retry_budget) + " times");
}

// com = Com(x; rho).
template <SigmaProtocol P>
typename P::Commitment oblivious_commit(const P& protocol, const typename P::Statement& x,
                                        ByteView rho) {
  if (rho.size() != protocol.rnd_bytes(x)) {
    throw Error(ErrorCode::kBadRandomnessLength,
                "expected " + std::to_string(protocol.rnd_bytes(x)) + " bytes, got " +
                    std::to_string(rho.size()));
  }
  return protocol.commit_from_rnd(x, rho);
}

template <SigmaProtocol P>
Bytes sample_rnd(const P& protocol, const typename P::Statement& x, const typename P::Commitment& com,
                 Rng& rng) {
  return protocol.sample_rnd(x, com, rng);
}

// Responds to `ch` for a fixed commitment, retrying aborted responses with
// fresh prover randomness (the commitment stays fixed).
template <SigmaProtocol P>
typename P::Response respond_with_retry(const P& protocol, const StatementWitnessPair<P>& pair,
                                        const typename P::Commitment& com,
                                        const typename P::Challenge& ch, Rng& rng,
                                        unsigned retry_budget) {
  for (unsigned attempt = 0; attempt < retry_budget; ++attempt) {
    if (auto rsp = protocol.respond(pair.statement(), pair.witness(), com, ch, rng)) return *rsp;
  }
  throw Error(ErrorCode::kAbortRetryExceeded, "response aborted " + std::to_string(retry_budget) +
                                                  " times for a fixed commitment");
}

// Two transcripts sharing `com`, answering ch1 and ch2 respectively.
template <SigmaProtocol P>
std::pair<Transcript<P>, Transcript<P>> fork_run(const P& protocol,
                                                 const StatementWitnessPair<P>& pair,
                                                 const typename P::Commitment& com,
                                                 const typename P::Challenge& ch1,
                                                 const typename P::Challenge& ch2, Rng& rng,
                                                 unsigned retry_budget = kDefaultRetryBudget) {
  if (ch1 == ch2) throw Error(ErrorCode::kSameChallenge, "fork_run needs distinct challenges");
  auto r1 = respond_with_retry(protocol, pair, com, ch1, rng, retry_budget);
  auto r2 = respond_with_retry(protocol, pair, com, ch2, rng, retry_budget);
  return {Transcript<P>{com, ch1, std::move(r1)}, Transcript<P>{com, ch2, std::move(r2)}};
}

// Oblivious run: the commitment comes from public randomness only.
template <SigmaProtocol P>
std::optional<Transcript<P>> run_oblivious_once(const P& protocol,
                                               const StatementWitnessPair<P>& pair, Rng& rng) {
  const auto& x = pair.statement();
  Bytes rho = rng.bytes(protocol.rnd_bytes(x));
  auto com = oblivious_commit(protocol, x, rho);
  auto ch = sample_challenge(protocol, x, rng);
  auto rsp = protocol.respond(x, pair.witness(), com, ch, rng);
  if (!rsp) return std::nullopt;
  return Transcript<P>{std::move(com), std::move(ch), std::move(*rsp)};
}

template <SigmaProtocol P>
std::optional<Transcript<P>> run_honest_once(const P& protocol, const StatementWitnessPair<P>& pair,
                                            Rng& rng) {
  const auto& x = pair.statement();
  auto com = protocol.honest_commit(x, pair.witness(), rng);
  auto ch = sample_challenge(protocol, x, rng);
  auto rsp = protocol.respond(x, pair.witness(), com, ch, rng);
  if (!rsp) return std::nullopt;
  return Transcript<P>{std::move(com), std::move(ch), std::move(*rsp)};
}

}  // namespace ofs::sigma
