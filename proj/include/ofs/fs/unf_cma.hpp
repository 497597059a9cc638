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

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "ofs/fs/fiat_shamir.hpp"

// Existential unforgeability under chosen-message attack: the adversary gets
// pk, a signing oracle and the hash oracle, and wins with a valid signature on
// a message it never asked to have signed.
namespace ofs::fs {

struct Forgery {
  Bytes message;
  Bytes signature;  // encoded, either form
};

using SignFn = std::function<Bytes(ByteView message)>;

template <sigma::SigmaProtocol P>
using CmaAdversary =
    std::function<std::optional<Forgery>(const VerifyingKey<P>&, const SignFn&, HashOracle&, Rng&)>;

struct CmaOutcome {
  bool output = false;     // the adversary produced something
  bool decodes = false;
  bool verifies = false;
  bool fresh = false;      // m* was never queried
  std::size_t sign_queries = 0;

  bool won() const { return verifies && fresh; }
};

template <sigma::SigmaProtocol P>
CmaOutcome run_unf_cma(const FiatShamir<P>& scheme, const SigningKey<P>& sk, const VerifyingKey<P>& vk,
                       const CmaAdversary<P>& adversary, HashOracle& oracle, Rng& rng) {
  std::vector<Bytes> queried;
  Rng signer_rng(rng.next_u64());
  const SignFn sign = [&](ByteView m) {
    queried.emplace_back(m.begin(), m.end());
    return scheme.encode_signature(scheme.sign(sk, m, oracle, signer_rng));
  };
  Rng adversary_rng(rng.next_u64());
  CmaOutcome out;
  const auto forgery = adversary(vk, sign, oracle, adversary_rng);
  out.sign_queries = queried.size();
  if (!forgery) return out;
  out.output = true;
  out.fresh = std::find(queried.begin(), queried.end(), forgery->message) == queried.end();
  try {
    const auto sig = scheme.decode_signature(forgery->signature, vk, forgery->message, oracle);
    out.decodes = true;
    out.verifies = scheme.verify(vk, forgery->message, sig, oracle);
  } catch (const Error&) {
    out.decodes = false;
  }
  return out;
}

// Asks for a signature on a random message and hands it back unchanged.
template <sigma::SigmaProtocol P>
CmaAdversary<P> replay_adversary(std::size_t message_len = 16) {
  return [message_len](const VerifyingKey<P>&, const SignFn& sign, HashOracle&,
                       Rng& rng) -> std::optional<Forgery> {
    Bytes m = rng.bytes(message_len);
    Bytes sig = sign(m);
    return Forgery{std::move(m), std::move(sig)};
  };
}

// Outputs a well-framed compact signature with random r and random response
// bytes of the given length.
template <sigma::SigmaProtocol P>
CmaAdversary<P> random_bytes_adversary(std::size_t r_len, std::size_t rsp_len,
                                       std::size_t message_len = 16) {
  return [=](const VerifyingKey<P>&, const SignFn&, HashOracle&, Rng& rng) -> std::optional<Forgery> {
    ByteWriter w;
    w.u8(kCompactForm);
    w.u8(P::kTag);
    w.raw(rng.bytes(r_len));
    w.prefixed(rng.bytes(rsp_len));
    return Forgery{rng.bytes(message_len), std::move(w).take()};
  };
}

}  // namespace ofs::fs
