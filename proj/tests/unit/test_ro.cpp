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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <sstream>

#include "ofs/error.hpp"
#include "ofs/gq/gq.hpp"
#include "ofs/presets.hpp"
#include "ofs/ro/formulas.hpp"
#include "ofs/ro/game.hpp"
#include "ofs/ro/oracles.hpp"
#include "ofs/stats.hpp"

namespace ofs::ro {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kIoError;
}

TEST(LazyOracle, ReplaysFromSeed) {
  LazyOracle a(Bytes{1}), b(Bytes{1}), c(Bytes{2});
  const Bytes in{5, 6};
  const Bytes out = a.query(in, 24);
  EXPECT_EQ(out.size(), 24u);
  EXPECT_EQ(a.query(in, 24), out);
  EXPECT_EQ(b.query(in, 24), out);
  EXPECT_NE(c.query(in, 24), out);
  EXPECT_NE(a.query(Bytes{5, 7}, 24), out);
  EXPECT_EQ(a.table_size(), 2u);
}

TEST(SemiConstantOracle, ExtremeDeltas) {
  auto base = std::make_shared<LazyOracle>(Bytes{9});
  const Bytes y(16, 0xaa);
  SemiConstantOracle none(base, 0.0, y, Bytes{1});
  SemiConstantOracle all(base, 1.0, y, Bytes{1});
  Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const Bytes in = rng.bytes(16);
    EXPECT_FALSE(none.is_member(in));
    EXPECT_EQ(none.query(in, 16), base->query(in, 16));
    EXPECT_TRUE(all.is_member(in));
    EXPECT_EQ(all.query(in, 16), y);
  }
  EXPECT_EQ(code_of([&] { all.query(Bytes{1}, 15); }), ErrorCode::kLengthMismatch);
  EXPECT_EQ(code_of([&] { SemiConstantOracle(base, 1.5, y, Bytes{}); }), ErrorCode::kDomainError);
}

TEST(SemiConstantOracle, MembershipFractionTracksDelta) {
  auto base = std::make_shared<LazyOracle>(Bytes{9});
  SemiConstantOracle sc(base, 0.25, Bytes(16, 1), Bytes{4});
  Rng rng(2);
  const double f = sc_fraction_estimate(sc, 10000, rng);
  EXPECT_NEAR(f, 0.25, 3 * stats::binomial_sigma(0.25, 10000));
  // Membership is fixed per input.
  const Bytes in{1, 2, 3};
  const bool m = sc.is_member(in);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(sc.is_member(in), m);
  EXPECT_EQ(code_of([&] { sc_fraction_estimate(sc, 999, rng); }), ErrorCode::kDomainError);
}

TEST(ReprogrammedOracle, LastOverrideWins) {
  auto base = std::make_shared<LazyOracle>(Bytes{3});
  ReprogrammedOracle p(base, 4);
  const Bytes pt{1};
  EXPECT_FALSE(p.is_overridden(pt));
  EXPECT_EQ(p.query(pt, 4), base->query(pt, 4));
  p.reprogram(pt, Bytes{1, 1, 1, 1});
  p.reprogram(pt, Bytes{2, 2, 2, 2});
  EXPECT_TRUE(p.is_overridden(pt));
  EXPECT_EQ(p.query(pt, 4), (Bytes{2, 2, 2, 2}));
  EXPECT_EQ(p.layers(), 2u);
  EXPECT_EQ(p.query(Bytes{2}, 4), base->query(Bytes{2}, 4));
  EXPECT_EQ(code_of([&] { p.reprogram(pt, Bytes{1}); }), ErrorCode::kLengthMismatch);

  auto q = reprogram(base, 4, Bytes{7}, Bytes{0, 0, 0, 7});
  EXPECT_EQ(q->query(Bytes{7}, 4), (Bytes{0, 0, 0, 7}));
}

TEST(CountingOracle, EnforcesBudget) {
  LazyOracle inner(Bytes{});
  CountingOracle c(inner, 3);
  c.query(Bytes{1}, 8);
  c.query(Bytes{2}, 8);
  c.query(Bytes{1}, 8);
  EXPECT_EQ(c.count(), 3u);
  EXPECT_EQ(c.remaining(), 0u);
  EXPECT_TRUE(c.was_queried(Bytes{2}));
  EXPECT_FALSE(c.was_queried(Bytes{3}));
  EXPECT_EQ(code_of([&] { c.query(Bytes{4}, 8); }), ErrorCode::kAdversaryBudgetExceeded);
}

TEST(Formulas, ExactValues) {
  EXPECT_EQ(optimal_delta_exact(1, 1), mpq_class(3, 16));
  EXPECT_EQ(optimal_delta_exact(1, 2), mpq_class(3, 256));
  EXPECT_EQ(bound_lemma4_exact(1, mpq_class(3, 16), 1), mpq_class(3, 32));
  EXPECT_DOUBLE_EQ(bound_lemma4(1.0, 3.0 / 16, 1), 0.09375);
  EXPECT_DOUBLE_EQ(optimal_delta(1.0, 2), 3.0 / 256);
  EXPECT_DOUBLE_EQ(headline_bound(1.0, 2), 3.0 / 256);
  EXPECT_DOUBLE_EQ(sc_distinguishing_bound(1, 0.1), 8.0 / 3 * 0.01);
  for (std::uint64_t q : {1, 2, 3, 10}) {
    for (const mpq_class eps : {mpq_class(1), mpq_class(1, 2), mpq_class(1, 7)}) {
      const mpq_class d = optimal_delta_exact(eps, q);
      const mpq_class q4 = mpq_class(q * q * q * q);
      EXPECT_EQ(bound_lemma4_exact(eps, d, q), 3 * eps * eps / (32 * q4));
      EXPECT_EQ(headline_bound_exact(eps, q), 3 * eps * eps / (16 * q4));
      // The optimum beats its neighbours.
      EXPECT_GT(bound_lemma4_exact(eps, d, q), bound_lemma4_exact(eps, d * mpq_class(11, 10), q));
      EXPECT_GT(bound_lemma4_exact(eps, d, q), bound_lemma4_exact(eps, d * mpq_class(9, 10), q));
      EXPECT_NEAR(optimal_delta(eps.get_d(), q), d.get_d(), 1e-15);
    }
  }
  EXPECT_EQ(code_of([] { optimal_delta(0.0, 1); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { optimal_delta(1.5, 1); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { optimal_delta(1.0, 0); }), ErrorCode::kDomainError);
}

class GqGame : public ::testing::Test {
 protected:
  explicit GqGame(gq::GqParams params = load_preset("g32").gq)
      : scheme_(gq::GqProtocol(params)), rng_(17), pair_(sigma::generate_pair(scheme_.protocol(), rng_)) {}
  fs::VerifyingKey<gq::GqProtocol> vk() const { return {pair_.statement()}; }

  fs::FiatShamir<gq::GqProtocol> scheme_;
  Rng rng_;
  sigma::StatementWitnessPair<gq::GqProtocol> pair_;
};

TEST_F(GqGame, LandingRateFollowsDelta) {
  for (double delta : {0.1, 0.25}) {
    GameConfig cfg{delta, 2000, 1, 0, 3};
    const auto rep = run_reduction_game(scheme_, vk(), cooperative_forger(pair_, 1.0), cfg);
    EXPECT_DOUBLE_EQ(rep.forgery_rate, 1.0);
    EXPECT_NEAR(rep.landing_rate, delta, 3 * stats::binomial_sigma(delta, 2000));
    EXPECT_EQ(rep.extraction_rate, rep.landing_rate);
  }
}

TEST_F(GqGame, ZeroDeltaNeverLands) {
  GameConfig cfg{0.0, 500, 2, 2, 4};
  const auto rep = run_reduction_game(scheme_, vk(), cooperative_forger(pair_, 1.0), cfg);
  EXPECT_DOUBLE_EQ(rep.forgery_rate, 1.0);
  EXPECT_EQ(rep.landing_rate, 0.0);
  for (const auto& r : rep.rows) EXPECT_EQ(r.sign_queries, 2u);
}

TEST_F(GqGame, EpsilonScalesForgery) {
  GameConfig cfg{0.5, 2000, 1, 0, 5};
  const auto rep = run_reduction_game(scheme_, vk(), cooperative_forger(pair_, 0.5), cfg);
  EXPECT_NEAR(rep.forgery_rate, 0.5, 3 * stats::binomial_sigma(0.5, 2000));
  EXPECT_NEAR(rep.landing_rate, 0.25, 3 * stats::binomial_sigma(0.25, 2000));
}

TEST_F(GqGame, ReplayIsNotFresh) {
  GameConfig cfg{0.5, 200, 1, 1, 6};
  const auto rep = run_reduction_game(scheme_, vk(), replay_forger<gq::GqProtocol>(), cfg);
  EXPECT_EQ(rep.forgery_rate, 0.0);
}

TEST_F(GqGame, RejectsBadConfig) {
  EXPECT_EQ(code_of([&] { run_reduction_game(scheme_, vk(), replay_forger<gq::GqProtocol>(), GameConfig{0.5, 0}); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { run_reduction_game(scheme_, vk(), replay_forger<gq::GqProtocol>(), GameConfig{-0.1, 5}); }),
            ErrorCode::kDomainError);
}

TEST_F(GqGame, SameSeedSameRows) {
  GameConfig cfg{0.3, 100, 2, 1, 8};
  const auto a = run_reduction_game(scheme_, vk(), cooperative_forger(pair_, 0.7), cfg);
  const auto b = run_reduction_game(scheme_, vk(), cooperative_forger(pair_, 0.7), cfg);
  std::ostringstream sa, sb;
  a.write_csv(sa);
  b.write_csv(sb);
  EXPECT_EQ(sa.str(), sb.str());
}

class SmallLambdaGame : public GqGame {
 protected:
  SmallLambdaGame() : GqGame({32, 65537, 10}) {}
};

TEST_F(SmallLambdaGame, SignerCollidesWithProbedInputs) {
  GameConfig cfg{0.0, 2000, 64, 1, 9};
  const auto rep = run_reduction_game(scheme_, vk(), collision_probe<gq::GqProtocol>(), cfg);
  // Expected number of distinct r among 64 draws from 2^10, over 2^10.
  const double p = 1.0 - std::pow(1.0 - 1.0 / 1024, 64);
  EXPECT_NEAR(rep.signing_collision_rate, p, 3 * stats::binomial_sigma(p, 2000));
  EXPECT_EQ(rep.forgery_rate, 0.0);
}

}  // namespace
}  // namespace ofs::ro
