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
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ofs/bytes.hpp"
#include "ofs/error.hpp"
#include "ofs/fs/keyfile.hpp"
#include "ofs/presets.hpp"
#include "ofs/rng.hpp"
#include "ofs/stats.hpp"
#include "ofs/xof.hpp"

namespace ofs {
namespace {

TEST(Bytes, HexRoundTrip) {
  const Bytes b{0x00, 0x01, 0xab, 0xff};
  EXPECT_EQ(to_hex(b), "0001abff");
  EXPECT_EQ(from_hex("0001ABff"), b);
  EXPECT_THROW(from_hex("abc"), DecodeError);
  EXPECT_THROW(from_hex("zz"), DecodeError);
}

TEST(Bytes, WriterLayout) {
  ByteWriter w;
  w.u8(0x7f);
  w.u16_be(0x0102);
  w.u32_le(0x01020304);
  w.i32_le(-2);
  w.prefixed(as_bytes("hi"));
  EXPECT_EQ(to_hex(w.bytes()), "7f010204030201feffffff020000006869");
}

TEST(Bytes, ReaderRejectsTruncation) {
  const Bytes b = from_hex("0500000061");
  ByteReader r(b);
  try {
    r.prefixed();
    FAIL() << "expected DecodeError";
  } catch (const DecodeError& e) {
    EXPECT_EQ(e.offset(), 0u);  // points at the length prefix
  }
}

TEST(Bytes, ExpectDone) {
  const Bytes b{1, 2};
  ByteReader r(b);
  r.u8();
  EXPECT_THROW(r.expect_done(), DecodeError);
  r.u8();
  EXPECT_NO_THROW(r.expect_done());
}

TEST(Xof, Shake256Vectors) {
  EXPECT_EQ(to_hex(shake256(Bytes{}, 32)), "46b9dd2b0ba88d13233b3feb743eeb243fcd52ea62b81b82b50c27646ed5762f");
  EXPECT_EQ(to_hex(shake256(as_bytes("abc"), 40)),
            "483366601360a8771c6863080cc4114d8db44530f8f1e1ee4f94ea37e78b5739d5a15bef186a5386");
}

TEST(Xof, PartsConcatenate) {
  EXPECT_EQ(shake256({as_bytes("a"), as_bytes("bc")}, 40), shake256(as_bytes("abc"), 40));
}

TEST(Rng, SeededDeterminism) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
  EXPECT_NE(Rng(42).next_u64(), Rng(43).next_u64());
  EXPECT_NE(Rng::derive(1, 0).next_u64(), Rng::derive(1, 1).next_u64());
}

TEST(Rng, UniformStaysInRange) {
  Rng rng(5);
  std::vector<std::uint64_t> counts(7, 0);
  for (int i = 0; i < 70000; ++i) {
    const auto v = rng.uniform(7);
    ASSERT_LT(v, 7u);
    ++counts[v];
  }
  EXPECT_GT(stats::chi_square_uniform(counts).p_value, 1e-4);
}

TEST(Stats, ChiSquareMatchesReference) {
  const std::vector<std::uint64_t> obs{30, 10, 20, 40};
  const auto r = stats::chi_square_uniform(obs);
  EXPECT_DOUBLE_EQ(r.statistic, 20.0);
  EXPECT_EQ(r.dof, 3u);
  EXPECT_NEAR(r.p_value, 0.00016974243555282632, 1e-12);

  const std::vector<std::uint64_t> two{20, 0};
  EXPECT_NEAR(stats::chi_square_uniform(two).p_value, 7.744216431044088e-06, 1e-15);
}

TEST(Stats, KsSameAndShifted) {
  Rng rng(9);
  std::vector<double> a, b, c;
  for (int i = 0; i < 2000; ++i) {
    a.push_back(rng.standard_normal());
    b.push_back(rng.standard_normal());
    c.push_back(rng.standard_normal() + 0.5);
  }
  EXPECT_TRUE(stats::ks_two_sample(a, b, 0.01).passes);
  EXPECT_FALSE(stats::ks_two_sample(a, c, 0.01).passes);
}

TEST(Stats, MeanVariance) {
  const std::vector<double> xs{1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(stats::mean(xs), 2.5);
  EXPECT_DOUBLE_EQ(stats::variance(xs), 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(stats::binomial_sigma(0.25, 10000), std::sqrt(0.25 * 0.75 / 10000));
}

TEST(Presets, ShippedPresetsLoad) {
  const Preset t0 = load_preset("t0");
  EXPECT_EQ(t0.scheme, SchemeKind::kLattice);
  EXPECT_EQ(t0.lattice.n, 4u);
  EXPECT_EQ(t0.lattice.q, 256u);
  EXPECT_EQ(t0.lattice.m, 64u);
  const Preset t1 = load_preset("t1");
  EXPECT_EQ(t1.lattice.m, 160u);
  const Preset g32 = load_preset("g32");
  EXPECT_EQ(g32.scheme, SchemeKind::kGq);
  EXPECT_EQ(g32.gq.bit_length, 32u);
  EXPECT_FALSE(g32.toy);
  EXPECT_THROW(load_preset("no-such-preset"), Error);
}

TEST(Presets, NonToyNeedsLambda64) {
  EXPECT_THROW(parse_preset("scheme=gq\ntoy=0\nbits=32\ne=65537\nlambda=16\n", "x"), Error);
  EXPECT_NO_THROW(parse_preset("scheme=gq\ntoy=1\nbits=32\ne=65537\nlambda=16\n", "x"));
}

TEST(Presets, RejectsBrokenLatticeRelations) {
  // s below 12 d kappa sqrt(m).
  EXPECT_THROW(parse_preset("scheme=lattice\nn=4\nq=256\nm=64\nk=8\nd=1\nkappa=4\nlambda=10\ns=100\n", "x"), Error);
  EXPECT_THROW(parse_preset("scheme=lattice\nn=4\n", "x"), Error);
  EXPECT_THROW(parse_preset("scheme=lattice\nn 4\n", "x"), DecodeError);
}

TEST(Presets, EnvironmentDirectoryWins) {
  const auto dir = std::filesystem::temp_directory_path() / "ofs-preset-test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "t0.preset") << "scheme=gq\ntoy=1\nbits=16\ne=7\nlambda=16\n";
  ::setenv("OFS_PRESET_DIR", dir.c_str(), 1);
  const Preset p = load_preset("t0");
  ::unsetenv("OFS_PRESET_DIR");
  std::filesystem::remove_all(dir);
  EXPECT_EQ(p.scheme, SchemeKind::kGq);
}

TEST(KeyFile, RoundTrip) {
  fs::KeyFile f;
  f.tag = 0x02;
  f.kind = fs::KeyKind::kSecret;
  f.values = {Bytes{1, 2, 3}, Bytes{}, Bytes{0xff}};
  f.comments = {"hello"};
  std::stringstream s;
  fs::write_key_file(s, f);
  const fs::KeyFile g = fs::read_key_file(s);
  EXPECT_EQ(g.tag, f.tag);
  EXPECT_EQ(g.kind, f.kind);
  EXPECT_EQ(g.values, f.values);
  EXPECT_EQ(g.comments, f.comments);
}

TEST(KeyFile, RejectsGarbage) {
  std::stringstream no_header("# only a comment\n");
  EXPECT_THROW(fs::read_key_file(no_header), DecodeError);
  std::stringstream bad_hex("010201\nxyz\n");
  EXPECT_THROW(fs::read_key_file(bad_hex), DecodeError);
  std::stringstream bad_kind("010209\n");
  EXPECT_THROW(fs::read_key_file(bad_kind), DecodeError);
  EXPECT_THROW(fs::load_key_file("/nonexistent/key"), Error);
}

}  // namespace
}  // namespace ofs
