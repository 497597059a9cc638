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
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ofs/fs/fiat_shamir.hpp"
#include "ofs/kernels/trials.hpp"
#include "ofs/ro/oracles.hpp"
#include "ofs/sigma/protocol.hpp"

// Executable version of the reduction from a forger to the special-soundness
// extractor. Per trial:
//   1. (com*, ch*, rsp*) <- Sim(x); pick ch' != ch*.
//   2. The hash oracle is SC_delta over a lazy random function, with the
//      constant answer planted so that it decodes to (com*, ch').
//   3. Signing queries are answered by simulated transcripts, reprogramming
//      H(pk, m_i, r_i) to point at them.
//   4. A forgery lands if its (com, ch) is (com*, ch'); then Ext runs on
//      (com*, ch*, rsp*) and (com*, ch', rsp).
namespace ofs::ro {

struct GameConfig {
  double delta = 0.0;
  std::size_t trials = 0;
  std::size_t q_h = 1;  // hash queries per trial
  std::size_t q_s = 0;  // signing queries per trial
  std::uint64_t seed = 0;
  unsigned retry_budget = sigma::kDefaultRetryBudget;
};

struct TrialRecord {
  std::size_t trial = 0;
  bool forged = false;     // verifies and the message is fresh
  bool landed = false;     // forged with (com, ch) = (com*, ch')
  bool extracted = false;  // landed and Ext output passes the relation check
  std::size_t sign_queries = 0;
  std::size_t sign_collisions = 0;  // signing inputs the adversary had already hashed
  std::size_t hash_queries = 0;
};

struct GameReport {
  std::size_t trials = 0;
  double forgery_rate = 0.0;
  double landing_rate = 0.0;
  double extraction_rate = 0.0;
  double delta = 0.0;
  std::size_t q_h = 0;
  std::size_t q_s = 0;
  double signing_collision_rate = 0.0;  // over all signing queries
  std::vector<TrialRecord> rows;

  // trial,forged,landed,extracted rows, then one `# summary` line.
  void write_csv(std::ostream& out) const {
    out << "trial,forged,landed,extracted\n";
    for (const auto& r : rows) {
      out << r.trial << ',' << int(r.forged) << ',' << int(r.landed) << ',' << int(r.extracted) << '\n';
    }
    out << "# summary trials=" << trials << " delta=" << delta << " q_h=" << q_h << " q_s=" << q_s
        << " forgery_rate=" << forgery_rate << " landing_rate=" << landing_rate
        << " extraction_rate=" << extraction_rate << " signing_collision_rate=" << signing_collision_rate
        << '\n';
  }
};

// What a classical adversary sees during one trial.
template <sigma::SigmaProtocol P>
struct GameView {
  const fs::FiatShamir<P>& scheme;
  const fs::VerifyingKey<P>& vk;
  CountingOracle& oracle;
  std::function<fs::Signature<P>(ByteView)> sign;
  std::size_t q_s;
  Rng& rng;
};

template <sigma::SigmaProtocol P>
using GameAdversary = std::function<std::optional<std::pair<Bytes, fs::Signature<P>>>(GameView<P>&)>;

namespace detail {

template <sigma::SigmaProtocol P>
sigma::Transcript<P> simulate_until_accept(const P& protocol, const typename P::Statement& x, Rng& rng,
                                           unsigned budget) {
  for (unsigned i = 0; i < budget; ++i) {
    if (auto t = protocol.simulate(x, rng)) return std::move(*t);
  }
  throw Error(ErrorCode::kAbortRetryExceeded, "simulator aborted " + std::to_string(budget) + " times");
}

}  // namespace detail

template <sigma::SigmaProtocol P>
TrialRecord run_reduction_trial(const fs::FiatShamir<P>& scheme, const fs::VerifyingKey<P>& vk,
                                const GameAdversary<P>& adversary, const GameConfig& cfg,
                                std::size_t index) {
  const P& protocol = scheme.protocol();
  const auto& x = vk.statement;
  Rng rng = Rng::derive(cfg.seed, index);
  TrialRecord rec;
  rec.trial = index;

  auto star = detail::simulate_until_accept(protocol, x, rng, cfg.retry_budget);
  typename P::Challenge ch_prime = sigma::sample_challenge(protocol, x, rng);
  while (ch_prime == star.ch) ch_prime = sigma::sample_challenge(protocol, x, rng);

  const std::size_t out_len = scheme.oracle_output_len(x);
  auto base = std::make_shared<LazyOracle>(rng.bytes(32));
  auto sc = std::make_shared<SemiConstantOracle>(base, cfg.delta, scheme.planted_output(x, star.com, ch_prime, rng),
                                                 rng.bytes(32));
  ReprogrammedOracle programmed(sc, out_len);
  CountingOracle counted(programmed, cfg.q_h);

  std::vector<Bytes> signed_messages;
  Rng sim_rng(rng.next_u64());
  auto sign = [&](ByteView m) -> fs::Signature<P> {
    if (signed_messages.size() >= cfg.q_s) {
      throw Error(ErrorCode::kAdversaryBudgetExceeded, "signing budget of " + std::to_string(cfg.q_s) +
                                                           " exhausted");
    }
    signed_messages.emplace_back(m.begin(), m.end());
    auto t = detail::simulate_until_accept(protocol, x, sim_rng, cfg.retry_budget);
    Bytes r = scheme.random_r(sim_rng);
    Bytes input = scheme.hash_input(x, m, r);
    if (counted.was_queried(input)) ++rec.sign_collisions;
    programmed.reprogram(std::move(input), scheme.planted_output(x, t.com, t.ch, sim_rng));
    return fs::Signature<P>{std::move(r), std::move(t.com), std::move(t.ch), std::move(t.rsp)};
  };

  Rng adversary_rng(rng.next_u64());
  GameView<P> view{scheme, vk, counted, sign, cfg.q_s, adversary_rng};
  const auto forgery = adversary(view);
  rec.sign_queries = signed_messages.size();
  rec.hash_queries = counted.count();
  if (!forgery) return rec;

  const auto& [m, sig] = *forgery;
  const bool fresh = std::find(signed_messages.begin(), signed_messages.end(), m) == signed_messages.end();
  rec.forged = fresh && scheme.verify(vk, m, sig, programmed);
  rec.landed = rec.forged && sig.com == star.com && sig.ch == ch_prime;
  if (rec.landed) {
    try {
      const auto w = protocol.extract(x, star, sigma::Transcript<P>{sig.com, sig.ch, sig.rsp});
      rec.extracted = protocol.extracted_valid(x, w);
    } catch (const Error&) {
      rec.extracted = false;
    }
  }
  return rec;
}

template <sigma::SigmaProtocol P>
GameReport run_reduction_game(const fs::FiatShamir<P>& scheme, const fs::VerifyingKey<P>& vk,
                              const GameAdversary<P>& adversary, const GameConfig& cfg) {
  if (cfg.trials == 0) throw Error(ErrorCode::kDomainError, "trials must be positive");
  if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0)) throw Error(ErrorCode::kDomainError, "delta must lie in [0, 1]");
  GameReport report;
  report.trials = cfg.trials;
  report.delta = cfg.delta;
  report.q_h = cfg.q_h;
  report.q_s = cfg.q_s;
  report.rows = kernels::run_trials<TrialRecord>(
      cfg.trials, [&](std::size_t i) { return run_reduction_trial(scheme, vk, adversary, cfg, i); });
  std::size_t forged = 0, landed = 0, extracted = 0, signs = 0, collisions = 0;
  for (const auto& r : report.rows) {
    forged += r.forged;
    landed += r.landed;
    extracted += r.extracted;
    signs += r.sign_queries;
    collisions += r.sign_collisions;
  }
  const auto n = static_cast<double>(cfg.trials);
  report.forgery_rate = forged / n;
  report.landing_rate = landed / n;
  report.extraction_rate = extracted / n;
  report.signing_collision_rate = signs ? static_cast<double>(collisions) / signs : 0.0;
  return report;
}

// Knows the witness. Spends its signing budget on random messages, then with
// probability eps signs a fresh random message honestly through the given
// oracle, retrying aborted responses with new r while hash queries remain.
template <sigma::SigmaProtocol P>
GameAdversary<P> cooperative_forger(const sigma::StatementWitnessPair<P>& pair, double eps,
                                    std::size_t message_len = 16) {
  return [&pair, eps, message_len](GameView<P>& v) -> std::optional<std::pair<Bytes, fs::Signature<P>>> {
    for (std::size_t i = 0; i < v.q_s; ++i) v.sign(v.rng.bytes(message_len));
    if (!v.rng.bernoulli(eps)) return std::nullopt;
    Bytes m = v.rng.bytes(message_len);
    const auto& protocol = v.scheme.protocol();
    while (v.oracle.remaining() > 0) {
      Bytes r = v.scheme.random_r(v.rng);
      auto [com, ch] = v.scheme.hash_to_com_ch(pair.statement(), m, r, v.oracle);
      if (auto rsp = protocol.respond(pair.statement(), pair.witness(), com, ch, v.rng)) {
        return std::pair{std::move(m), fs::Signature<P>{std::move(r), std::move(com), std::move(ch), std::move(*rsp)}};
      }
    }
    return std::nullopt;
  };
}

// Asks for one signature and returns it for the same message.
template <sigma::SigmaProtocol P>
GameAdversary<P> replay_forger(std::size_t message_len = 16) {
  return [message_len](GameView<P>& v) -> std::optional<std::pair<Bytes, fs::Signature<P>>> {
    Bytes m = v.rng.bytes(message_len);
    auto sig = v.sign(m);
    return std::pair{std::move(m), std::move(sig)};
  };
}

// Hashes (pk, m, r) for q_h random r on one message, then asks for a
// signature on that message; records how often the signer's r was already
// queried. Outputs no forgery.
template <sigma::SigmaProtocol P>
GameAdversary<P> collision_probe(std::size_t message_len = 16) {
  return [message_len](GameView<P>& v) -> std::optional<std::pair<Bytes, fs::Signature<P>>> {
    const Bytes m = v.rng.bytes(message_len);
    const auto& x = v.vk.statement;
    while (v.oracle.remaining() > 0) {
      v.oracle.query(v.scheme.hash_input(x, m, v.scheme.random_r(v.rng)), v.scheme.oracle_output_len(x));
    }
    for (std::size_t i = 0; i < v.q_s; ++i) v.sign(m);
    return std::nullopt;
  };
}

}  // namespace ofs::ro
