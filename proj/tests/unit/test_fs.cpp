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

#include <set>

#include "ofs/error.hpp"
#include "ofs/fs/fiat_shamir.hpp"
#include "ofs/fs/unf_cma.hpp"
#include "ofs/gq/gq.hpp"
#include "ofs/lattice/lattice.hpp"
#include "ofs/presets.hpp"

namespace ofs::fs {
namespace {

template <class P>
P make_protocol();

template <>
gq::GqProtocol make_protocol<gq::GqProtocol>() {
  return gq::GqProtocol(load_preset("g32").gq);
}

template <>
lattice::LatticeProtocol make_protocol<lattice::LatticeProtocol>() {
  return lattice::LatticeProtocol(load_preset("t0").lattice);
}

template <class P>
class FsGeneric : public ::testing::Test {
 protected:
  FsGeneric() : scheme_(make_protocol<P>()), rng_(5) {
    auto [sk, vk] = scheme_.skgen(rng_);
    sk_.emplace(std::move(sk));
    vk_.emplace(std::move(vk));
  }

  FiatShamir<P> scheme_;
  Rng rng_;
  Shake256Oracle oracle_;
  std::optional<SigningKey<P>> sk_;
  std::optional<VerifyingKey<P>> vk_;
};

using Protocols = ::testing::Types<gq::GqProtocol, lattice::LatticeProtocol>;
TYPED_TEST_SUITE(FsGeneric, Protocols);

TYPED_TEST(FsGeneric, SignVerify) {
  auto& s = this->scheme_;
  std::set<Bytes> rs;
  for (int i = 0; i < 50; ++i) {
    const Bytes m = this->rng_.bytes(i);
    const auto sig = s.sign(*this->sk_, m, this->oracle_, this->rng_);
    EXPECT_TRUE(s.r_well_formed(sig.r));
    EXPECT_TRUE(s.verify(*this->vk_, m, sig, this->oracle_));
    Bytes other = m;
    other.push_back(0);
    EXPECT_FALSE(s.verify(*this->vk_, other, sig, this->oracle_));
    rs.insert(sig.r);
  }
  EXPECT_EQ(rs.size(), 50u);
}

TYPED_TEST(FsGeneric, IndependentOracleRejects) {
  auto& s = this->scheme_;
  Shake256Oracle keyed(Bytes{1, 2, 3});
  const Bytes m{'h', 'i'};
  const auto sig = s.sign(*this->sk_, m, this->oracle_, this->rng_);
  EXPECT_FALSE(s.verify(*this->vk_, m, sig, keyed));
}

TYPED_TEST(FsGeneric, CompactAndFullAgree) {
  auto& s = this->scheme_;
  for (int i = 0; i < 20; ++i) {
    const Bytes m = this->rng_.bytes(8);
    const auto sig = s.sign(*this->sk_, m, this->oracle_, this->rng_);
    const Bytes compact = s.encode_signature(sig, true);
    const Bytes full = s.encode_signature(sig, false);
    EXPECT_EQ(compact[0], kCompactForm);
    EXPECT_EQ(full[0], kFullForm);
    EXPECT_EQ(compact[1], TypeParam::kTag);
    EXPECT_LT(compact.size(), full.size());
    EXPECT_EQ(s.decode_signature(compact, *this->vk_, m, this->oracle_), sig);
    EXPECT_EQ(s.decode_signature(full, *this->vk_, m, this->oracle_), sig);
  }
}

TYPED_TEST(FsGeneric, EveryTruncationIsADecodeError) {
  auto& s = this->scheme_;
  const Bytes m{1, 2, 3};
  const auto sig = s.sign(*this->sk_, m, this->oracle_, this->rng_);
  for (bool compact : {true, false}) {
    const Bytes enc = s.encode_signature(sig, compact);
    for (std::size_t len = 0; len < enc.size(); ++len) {
      const Bytes cut(enc.begin(), enc.begin() + static_cast<std::ptrdiff_t>(len));
      EXPECT_THROW(s.decode_signature(cut, *this->vk_, m, this->oracle_), DecodeError) << len;
    }
    Bytes longer = enc;
    longer.push_back(0);
    EXPECT_THROW(s.decode_signature(longer, *this->vk_, m, this->oracle_), DecodeError);
  }
  Bytes enc = s.encode_signature(sig);
  enc[0] = 0x03;
  EXPECT_THROW(s.decode_signature(enc, *this->vk_, m, this->oracle_), DecodeError);
  enc[0] = kCompactForm;
  enc[1] ^= 0x03;
  EXPECT_THROW(s.decode_signature(enc, *this->vk_, m, this->oracle_), DecodeError);
}

TYPED_TEST(FsGeneric, HashOutputsLandInRange) {
  auto& s = this->scheme_;
  const auto& p = s.protocol();
  const auto& x = this->vk_->statement;
  for (int i = 0; i < 100; ++i) {
    const Bytes r = s.random_r(this->rng_);
    const auto [com, ch] = s.hash_to_com_ch(x, Bytes{7}, r, this->oracle_);
    EXPECT_EQ(p.decode_commitment(x, p.encode_commitment(com)), com);
    EXPECT_EQ(p.decode_challenge(x, p.encode_challenge(ch)), ch);
    // Planting the pair back reproduces it.
    EXPECT_EQ(s.split_output(x, s.planted_output(x, com, ch, this->rng_)), std::pair(com, ch));
  }
}

TYPED_TEST(FsGeneric, StatementBindingMatters) {
  FiatShamir<TypeParam> unbound(this->scheme_.protocol(), FsConfig{false});
  const Bytes m{9};
  const auto sig = this->scheme_.sign(*this->sk_, m, this->oracle_, this->rng_);
  EXPECT_FALSE(unbound.verify(*this->vk_, m, sig, this->oracle_));
  const Bytes in = unbound.hash_input(this->vk_->statement, m, Bytes{0, 0});
  // tag, empty pk, 1-byte message, 2-byte r
  EXPECT_EQ(in, (Bytes{TypeParam::kTag, 0, 0, 0, 0, 1, 0, 0, 0, 9, 2, 0, 0, 0, 0, 0}));
}

TYPED_TEST(FsGeneric, ReplayIsNotAForgery) {
  const auto o = run_unf_cma<TypeParam>(this->scheme_, *this->sk_, *this->vk_, replay_adversary<TypeParam>(),
                                        this->oracle_, this->rng_);
  EXPECT_TRUE(o.output);
  EXPECT_TRUE(o.decodes);
  EXPECT_TRUE(o.verifies);
  EXPECT_FALSE(o.fresh);
  EXPECT_FALSE(o.won());
  EXPECT_EQ(o.sign_queries, 1u);
}

TYPED_TEST(FsGeneric, RandomBytesNeverWin) {
  const auto& s = this->scheme_;
  const auto rsp_len = s.protocol().encode_response(
                                       s.sign(*this->sk_, Bytes{}, this->oracle_, this->rng_).rsp)
                           .size();
  const auto adv = random_bytes_adversary<TypeParam>(s.r_bytes(), rsp_len);
  for (int i = 0; i < 100; ++i) {
    EXPECT_FALSE(run_unf_cma<TypeParam>(s, *this->sk_, *this->vk_, adv, this->oracle_, this->rng_).won());
  }
}

TEST(FsParams, RejectsZeroLambda) {
  gq::GqParams p = load_preset("g16").gq;
  p.lambda = 0;
  try {
    FiatShamir<gq::GqProtocol> s{gq::GqProtocol(p)};
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedParameters);
  }
}

TEST(FsLattice, HighBitsOfRAreRejected) {
  FiatShamir<lattice::LatticeProtocol> s{lattice::LatticeProtocol(load_preset("t0").lattice)};
  Rng rng(3);
  Shake256Oracle oracle;
  const auto [sk, vk] = s.skgen(rng);
  ASSERT_EQ(s.r_bytes(), 2u);  // lambda = 10
  for (int i = 0; i < 50; ++i) EXPECT_LT(s.random_r(rng)[1], 4);
  const Bytes m{1};
  const auto sig = s.sign(sk, m, oracle, rng);
  Bytes enc = s.encode_signature(sig);
  enc[3] |= 0x80;
  try {
    s.decode_signature(enc, vk, m, oracle);
    FAIL();
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  auto bad = sig;
  bad.r[1] |= 0x04;
  EXPECT_FALSE(s.verify(vk, m, bad, oracle));
}

struct GqVector {
  const char* msg;
  const char* r;
  unsigned com;
  unsigned ch;
  unsigned z;
  const char* compact;
  const char* full;
};

// Computed by tests/vectors/gen_gq_fs_vectors.py.
const GqVector kGqVectors[] = {
    {"", "0000", 10, 0, 10, "010200000300000000010a", "020200000300000000010a0200000000000300000000010a"},
    {"616263", "5a03", 53, 2, 23, "01025a0303000000000117", "02025a03030000000001350300000000010203000000000117"},
    {"6d6573736167652032", "ffff", 48, 2, 3, "0102ffff03000000000103",
     "0202ffff030000000001300300000000010203000000000103"},
    {"00000000000000000000000000000000000000000000000000000000000000000000000000000000", "1020", 23, 2, 15,
     "010210200300000000010f", "0202102003000000000117030000000001020300000000010f"},
};

TEST(FsVectors, ToyGqSignatures) {
  const gq::GqProtocol proto({16, 7, 16});
  const FiatShamir<gq::GqProtocol> s(proto);
  const gq::GqStatement x{7, 77, 51};
  const gq::GqWitness w{2, 7, 11, 43};
  const VerifyingKey<gq::GqProtocol> vk{x};
  Shake256Oracle oracle;
  Rng rng(0);
  for (const auto& v : kGqVectors) {
    const Bytes m = from_hex(v.msg);
    const Bytes r = from_hex(v.r);
    const auto [com, ch] = s.hash_to_com_ch(x, m, r, oracle);
    EXPECT_EQ(com, v.com);
    EXPECT_EQ(ch, v.ch);
    const auto z = proto.respond(x, w, com, ch, rng);
    ASSERT_TRUE(z);
    EXPECT_EQ(*z, v.z);
    const Signature<gq::GqProtocol> sig{r, com, ch, *z};
    EXPECT_EQ(to_hex(s.encode_signature(sig, true)), v.compact);
    EXPECT_EQ(to_hex(s.encode_signature(sig, false)), v.full);
    EXPECT_TRUE(s.verify(vk, m, sig, oracle));
    EXPECT_EQ(s.decode_signature(from_hex(v.compact), vk, m, oracle), sig);
  }
}

}  // namespace
}  // namespace ofs::fs
