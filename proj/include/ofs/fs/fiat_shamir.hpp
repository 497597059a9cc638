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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>

#include "ofs/bytes.hpp"
#include "ofs/error.hpp"
#include "ofs/oracle.hpp"
#include "ofs/rng.hpp"
#include "ofs/sigma/protocol.hpp"

namespace ofs::fs {

constexpr std::uint8_t kCompactForm = 0x01;
constexpr std::uint8_t kFullForm = 0x02;

struct FsConfig {
  // Hash the statement along with (m, r). Off hashes an empty pk field.
  bool include_statement = true;
  unsigned retry_budget = sigma::kDefaultRetryBudget;
};

template <sigma::SigmaProtocol P>
struct Signature {
  Bytes r;
  typename P::Commitment com;
  typename P::Challenge ch;
  typename P::Response rsp;

  friend bool operator==(const Signature&, const Signature&) = default;
};

template <sigma::SigmaProtocol P>
struct SigningKey {
  sigma::StatementWitnessPair<P> pair;
};

template <sigma::SigmaProtocol P>
struct VerifyingKey {
  typename P::Statement statement;
};

// Signatures from a Sigma protocol with oblivious commitments:
//   (rho || seed) = H(pk, m, r),  com = Com(x; rho),  ch = challenge(seed),
//   rsp = P(x, w, com, ch),  sigma = (r, com, ch, rsp).
template <sigma::SigmaProtocol P>
class FiatShamir {
 public:
  using Sig = Signature<P>;

  explicit FiatShamir(P protocol, FsConfig config = {})
      : protocol_(std::move(protocol)), config_(config) {
    if (protocol_.security_bits() == 0) {
      throw Error(ErrorCode::kUnsupportedParameters, "security parameter must be positive");
    }
  }

  const P& protocol() const noexcept { return protocol_; }
  const FsConfig& config() const noexcept { return config_; }

  // r is lambda bits, stored in ceil(lambda / 8) bytes with the unused high
  // bits of the last byte cleared.
  std::size_t r_bytes() const { return (protocol_.security_bits() + 7) / 8; }

  Bytes random_r(Rng& rng) const {
    Bytes r = rng.bytes(r_bytes());
    if (const unsigned spare = r_bytes() * 8 - protocol_.security_bits(); spare != 0) {
      r.back() &= static_cast<std::uint8_t>(0xffu >> spare);
    }
    return r;
  }

  bool r_well_formed(ByteView r) const {
    if (r.size() != r_bytes()) return false;
    const unsigned spare = r_bytes() * 8 - protocol_.security_bits();
    return spare == 0 || (r.back() >> (8 - spare)) == 0;
  }

  // tag || u32(|pk|) pk || u32(|m|) m || u32(|r|) r
  Bytes hash_input(const typename P::Statement& x, ByteView m, ByteView r) const {
    ByteWriter out;
    out.u8(P::kTag);
    out.prefixed(config_.include_statement ? protocol_.encode_statement(x) : Bytes{});
    if (m.size() > 0xffffffffull) throw Error(ErrorCode::kDomainError, "message longer than 2^32 - 1 bytes");
    out.prefixed(m);
    out.prefixed(r);
    return std::move(out).take();
  }

  std::size_t oracle_output_len(const typename P::Statement& x) const {
    return protocol_.rnd_bytes(x) + protocol_.challenge_seed_bytes(x);
  }

  // The oracle output that makes hash_to_com_ch return (com, ch).
  Bytes planted_output(const typename P::Statement& x, const typename P::Commitment& com,
                       const typename P::Challenge& ch, Rng& rng) const {
    Bytes out = protocol_.sample_rnd(x, com, rng);
    const Bytes seed = protocol_.challenge_seed_for(x, ch, rng);
    out.insert(out.end(), seed.begin(), seed.end());
    return out;
  }

  std::pair<typename P::Commitment, typename P::Challenge> split_output(
      const typename P::Statement& x, ByteView out) const {
    const std::size_t nr = protocol_.rnd_bytes(x);
    return {sigma::oblivious_commit(protocol_, x, out.first(nr)),
            protocol_.challenge_from_seed(x, out.subspan(nr))};
  }

  std::pair<typename P::Commitment, typename P::Challenge> hash_to_com_ch(
      const typename P::Statement& x, ByteView m, ByteView r, HashOracle& oracle) const {
    const Bytes out = oracle.query(hash_input(x, m, r), oracle_output_len(x));
    return split_output(x, out);
  }

  std::pair<SigningKey<P>, VerifyingKey<P>> skgen(Rng& rng) const {
    auto pair = sigma::generate_pair(protocol_, rng);
    VerifyingKey<P> vk{pair.statement()};
    return {SigningKey<P>{std::move(pair)}, std::move(vk)};
  }

  // A fresh r per attempt; an abort restarts with new r.
  Sig sign(const SigningKey<P>& sk, ByteView m, HashOracle& oracle, Rng& rng) const {
    const auto& x = sk.pair.statement();
    for (unsigned attempt = 0; attempt < config_.retry_budget; ++attempt) {
      Bytes r = random_r(rng);
      auto [com, ch] = hash_to_com_ch(x, m, r, oracle);
      if (auto rsp = protocol_.respond(x, sk.pair.witness(), com, ch, rng)) {
        return Sig{std::move(r), std::move(com), std::move(ch), std::move(*rsp)};
      }
    }
    throw Error(ErrorCode::kAbortRetryExceeded,
                "signing aborted " + std::to_string(config_.retry_budget) + " times");
  }

  bool verify(const VerifyingKey<P>& vk, ByteView m, const Sig& sig, HashOracle& oracle) const {
    if (!r_well_formed(sig.r)) return false;
    try {
      auto [com, ch] = hash_to_com_ch(vk.statement, m, sig.r, oracle);
      if (!(com == sig.com) || !(ch == sig.ch)) return false;
      return protocol_.verify(vk.statement, sig.com, sig.ch, sig.rsp);
    } catch (const Error&) {
      return false;
    }
  }

  // compact: 0x01 || tag || r || u32(|rsp|) rsp
  // full:    0x02 || tag || r || u32(|com|) com || u32(|ch|) ch || u32(|rsp|) rsp
  Bytes encode_signature(const Sig& sig, bool compact = true) const {
    ByteWriter out;
    out.u8(compact ? kCompactForm : kFullForm);
    out.u8(P::kTag);
    out.raw(sig.r);
    if (!compact) {
      out.prefixed(protocol_.encode_commitment(sig.com));
      out.prefixed(protocol_.encode_challenge(sig.ch));
    }
    out.prefixed(protocol_.encode_response(sig.rsp));
    return std::move(out).take();
  }

  // Compact signatures get (com, ch) back from the oracle.
  Sig decode_signature(ByteView bytes, const VerifyingKey<P>& vk, ByteView m, HashOracle& oracle) const {
    ByteReader in(bytes);
    const std::uint8_t form = in.u8();
    if (form != kCompactForm && form != kFullForm) {
      throw DecodeError(0, "unknown signature form " + std::to_string(form));
    }
    if (const std::uint8_t tag = in.u8(); tag != P::kTag) {
      throw DecodeError(1, "signature is for scheme tag " + std::to_string(tag));
    }
    Sig sig;
    const std::size_t r_at = in.offset();
    const ByteView r = in.raw(r_bytes());
    sig.r.assign(r.begin(), r.end());
    if (!r_well_formed(sig.r)) throw DecodeError(r_at, "r has bits set above lambda");
    const auto& x = vk.statement;
    if (form == kFullForm) {
      sig.com = decode_field(in, [&](ByteView v) { return protocol_.decode_commitment(x, v); });
      sig.ch = decode_field(in, [&](ByteView v) { return protocol_.decode_challenge(x, v); });
    }
    sig.rsp = decode_field(in, [&](ByteView v) { return protocol_.decode_response(x, v); });
    in.expect_done();
    if (form == kCompactForm) std::tie(sig.com, sig.ch) = hash_to_com_ch(x, m, sig.r, oracle);
    return sig;
  }

 private:
  // Rebases offsets of errors raised inside a length-prefixed field.
  template <class Fn>
  static auto decode_field(ByteReader& in, Fn&& fn) {
    const std::size_t at = in.offset() + 4;
    const ByteView field = in.prefixed();
    try {
      return fn(field);
    } catch (const DecodeError& e) {
      throw DecodeError(at + e.offset(), e.detail());
    }
  }

  P protocol_;
  FsConfig config_;
};

}  // namespace ofs::fs
