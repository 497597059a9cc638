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

#include "ofs/gq/gq.hpp"

#include <string>

#include "ofs/error.hpp"
#include "ofs/xof.hpp"

namespace ofs::gq {

namespace {

mpz_class powm(const mpz_class& base, const mpz_class& exp, const mpz_class& mod) {
  mpz_class out;
  mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return out;
}

mpz_class invert(const mpz_class& v, const mpz_class& mod) {
  mpz_class out;
  if (mpz_invert(out.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t()) == 0) {
    throw Error(ErrorCode::kNotCoprime, "element is not invertible mod N");
  }
  return out;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

bool is_unit(const mpz_class& v, const mpz_class& n) { return v > 0 && v < n && gcd(v, n) == 1; }

std::size_t bit_length(const mpz_class& v) {
  return v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// Odd candidate of exactly `bits` bits with the top two bits set, so that the
// product of two such primes has exactly bits_p + bits_q bits.
mpz_class random_prime(std::size_t bits, Rng& rng) {
  for (;;) {
    mpz_class c = uniform_below(mpz_class(1) << bits, rng);
    mpz_setbit(c.get_mpz_t(), bits - 1);
    mpz_setbit(c.get_mpz_t(), bits - 2);
    mpz_setbit(c.get_mpz_t(), 0);
    if (is_prime_small(c)) return c;
  }
}

constexpr std::string_view kComDomain = "ofs/gq/com";

}  // namespace

bool is_prime_small(const mpz_class& v) {
  if (v < 2) return false;
  if (bit_length(v) > 64) return mpz_probab_prime_p(v.get_mpz_t(), 40) > 0;
  const std::uint64_t n = mpz_get_ui(v.get_mpz_t());
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

std::size_t challenge_bits(const GqStatement& x) { return bit_length(x.e) - 1; }

mpz_class uniform_below(const mpz_class& bound, Rng& rng) {
  const std::size_t bits = bit_length(bound - 1);
  const std::size_t nbytes = (bits + 7) / 8;
  for (;;) {
    Bytes raw = rng.bytes(nbytes);
    if (bits % 8 != 0 && nbytes > 0) raw[0] &= static_cast<std::uint8_t>((1u << (bits % 8)) - 1);
    mpz_class v = bigint_from_be(raw);
    if (v < bound) return v;
  }
}

mpz_class uniform_unit(const mpz_class& n, Rng& rng) {
  for (;;) {
    mpz_class v = uniform_below(n, rng);
    if (is_unit(v, n)) return v;
  }
}

std::pair<GqStatement, GqWitness> gq_keygen(std::size_t bit_length_n, std::uint64_t e, Rng& rng,
                                            unsigned retry_budget) {
  if (bit_length_n < 16) {
    throw Error(ErrorCode::kUnsupportedParameters, "modulus must have at least 16 bits");
  }
  const mpz_class e_z(static_cast<unsigned long>(e));
  if (!is_prime_small(e_z)) throw Error(ErrorCode::kUnsupportedParameters, "e must be prime");
  if (e >= (std::uint64_t{1} << 63)) {
    throw Error(ErrorCode::kUnsupportedParameters, "e must be below 2^63");
  }
  const std::size_t p_bits = (bit_length_n + 1) / 2;
  const std::size_t q_bits = bit_length_n / 2;
  for (unsigned attempt = 0; attempt < retry_budget; ++attempt) {
    mpz_class p = random_prime(p_bits, rng);
    mpz_class q = random_prime(q_bits, rng);
    if (p == q) continue;
    const mpz_class phi = (p - 1) * (q - 1);
    if (gcd(e_z, phi) != 1) continue;
    GqStatement x;
    x.e = e_z;
    x.n = p * q;
    GqWitness w;
    w.p = p;
    w.q = q;
    w.d = invert(e_z, phi);
    w.w = uniform_unit(x.n, rng);
    x.y = powm(w.w, x.e, x.n);
    return {std::move(x), std::move(w)};
  }
  throw Error(ErrorCode::kExponentDividesTotient,
              "no prime pair with gcd(e, phi(N)) = 1 within " + std::to_string(retry_budget) +
                  " attempts");
}

mpz_class oblivious_root(const GqStatement& x, const GqWitness& w, const mpz_class& r) {
  if (!is_unit(r, x.n)) throw Error(ErrorCode::kNotCoprime, "commitment is not in Z_N^*");
  return powm(r, w.d, x.n);
}

mpz_class gq_respond(const GqStatement& x, const GqWitness& w, const mpz_class& u, std::uint64_t c) {
  return mpz_class(u * powm(w.w, mpz_class(static_cast<unsigned long>(c)), x.n) % x.n);
}

bool gq_verify(const GqStatement& x, const mpz_class& r, std::uint64_t c, const mpz_class& z) {
  if (!is_unit(r, x.n) || !is_unit(z, x.n)) return false;
  if (c >> challenge_bits(x) != 0) return false;
  const mpz_class lhs = powm(z, x.e, x.n);
  const mpz_class rhs = r * powm(x.y, mpz_class(static_cast<unsigned long>(c)), x.n) % x.n;
  return lhs == rhs;
}

GqTranscript honest_transcript_from(const GqStatement& x, const GqWitness& w, const mpz_class& u,
                                    std::uint64_t c) {
  return GqTranscript{powm(u, x.e, x.n), c, gq_respond(x, w, u, c)};
}

GqTranscript simulated_transcript_from(const GqStatement& x, const mpz_class& z, std::uint64_t c) {
  const mpz_class y_c = powm(x.y, mpz_class(static_cast<unsigned long>(c)), x.n);
  return GqTranscript{mpz_class(powm(z, x.e, x.n) * invert(y_c, x.n) % x.n), c, z};
}

GqTranscript gq_simulate(const GqStatement& x, Rng& rng) {
  const mpz_class z = uniform_unit(x.n, rng);
  const std::uint64_t c = rng.uniform(std::uint64_t{1} << challenge_bits(x));
  return simulated_transcript_from(x, z, c);
}

mpz_class gq_extract(const GqStatement& x, const GqTranscript& t1, const GqTranscript& t2) {
  if (t1.c == t2.c) throw Error(ErrorCode::kSameChallenge, "transcripts share a challenge");
  if (t1.r != t2.r) throw Error(ErrorCode::kNotVerifying, "transcripts have different commitments");
  if (!gq_verify(x, t1.r, t1.c, t1.z) || !gq_verify(x, t2.r, t2.c, t2.z)) {
    throw Error(ErrorCode::kNotVerifying, "transcript does not verify");
  }
  // (z1/z2)^e = y^delta and gcd(delta, e) = 1 because 0 < |delta| < e, e prime.
  const mpz_class delta = mpz_class(static_cast<unsigned long>(t1.c)) -
                          mpz_class(static_cast<unsigned long>(t2.c));
  mpz_class g, a, b;
  mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), delta.get_mpz_t(), x.e.get_mpz_t());
  if (g != 1 && g != -1) throw Error(ErrorCode::kNotVerifying, "challenge difference shares a factor with e");
  if (g == -1) {
    a = -a;
    b = -b;
  }
  const mpz_class ratio = t1.z * invert(t2.z, x.n) % x.n;
  return mpz_class(powm(ratio, a, x.n) * powm(x.y, b, x.n) % x.n);
}

void write_bigint(ByteWriter& out, const mpz_class& v) {
  if (v < 0) throw std::invalid_argument("write_bigint: negative value");
  const std::size_t len = v == 0 ? 0 : (bit_length(v) + 7) / 8;
  if (len > 0xffff) throw std::invalid_argument("write_bigint: value too large");
  out.u16_be(static_cast<std::uint16_t>(len));
  out.raw(bigint_be(v, len));
}

mpz_class read_bigint(ByteReader& in) {
  const std::size_t at = in.offset();
  const std::uint16_t len = in.u16_be();
  ByteView raw = in.raw(len);
  if (len > 0 && raw[0] == 0) throw DecodeError(at, "non-minimal big integer encoding");
  return bigint_from_be(raw);
}

Bytes bigint_be(const mpz_class& v, std::size_t width) {
  Bytes out(width, 0);
  std::size_t count = 0;
  Bytes tmp((bit_length(v) + 7) / 8 + 1);
  mpz_export(tmp.data(), &count, 1, 1, 1, 0, v.get_mpz_t());
  if (count > width) throw std::invalid_argument("bigint_be: value wider than requested width");
  std::copy(tmp.begin(), tmp.begin() + static_cast<std::ptrdiff_t>(count),
            out.begin() + static_cast<std::ptrdiff_t>(width - count));
  return out;
}

mpz_class bigint_from_be(ByteView bytes) {
  mpz_class v;
  if (!bytes.empty()) mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  return v;
}

// ---------------------------------------------------------------------------

GqProtocol::GqProtocol(GqParams params) : params_(params) {
  if (params_.lambda == 0) throw Error(ErrorCode::kUnsupportedParameters, "lambda must be positive");
  if (params_.bit_length < 16) {
    throw Error(ErrorCode::kUnsupportedParameters, "modulus must have at least 16 bits");
  }
  if (params_.e < 3) throw Error(ErrorCode::kUnsupportedParameters, "e must be an odd prime");
}

std::pair<GqStatement, GqWitness> GqProtocol::keygen(Rng& rng) const {
  return gq_keygen(params_.bit_length, params_.e, rng);
}

bool GqProtocol::relation_check(const Statement& x, const Witness& w) const {
  if (x.n <= 1 || !is_unit(x.y, x.n)) return false;
  if (w.p * w.q != x.n) return false;
  const mpz_class phi = (w.p - 1) * (w.q - 1);
  if (mpz_class(x.e * w.d % phi) != 1) return false;
  return is_unit(w.w, x.n) && powm(w.w, x.e, x.n) == x.y;
}

GqProtocol::Commitment GqProtocol::honest_commit(const Statement& x, const Witness&, Rng& rng) const {
  return powm(uniform_unit(x.n, rng), x.e, x.n);
}

std::optional<GqProtocol::Response> GqProtocol::respond(const Statement& x, const Witness& w,
                                                        const Commitment& com, const Challenge& ch,
                                                        Rng&) const {
  if (w.d == 0) throw Error(ErrorCode::kResponseUnavailable, "witness lacks the factoring trapdoor");
  return gq_respond(x, w, oblivious_root(x, w, com), ch);
}

bool GqProtocol::verify(const Statement& x, const Commitment& com, const Challenge& ch,
                        const Response& rsp) const {
  return gq_verify(x, com, ch, rsp);
}

std::size_t GqProtocol::rnd_bytes(const Statement& x) const {
  return (bit_length(x.n) + 64 + 7) / 8;
}

GqProtocol::Commitment GqProtocol::commit_from_rnd(const Statement& x, ByteView rho) const {
  mpz_class r = bigint_from_be(rho) % x.n;
  // Resample from a rho-derived stream until the candidate is a unit.
  for (std::uint32_t counter = 0; !is_unit(r, x.n); ++counter) {
    ByteWriter ctr;
    ctr.u32_le(counter);
    r = bigint_from_be(shake256({as_bytes(kComDomain), rho, ctr.bytes()}, rho.size())) % x.n;
  }
  return r;
}

Bytes GqProtocol::sample_rnd(const Statement& x, const Commitment& com, Rng& rng) const {
  if (!is_unit(com, x.n)) throw Error(ErrorCode::kNotInRange, "commitment is not in Z_N^*");
  // rho = com + t N for t uniform over the values keeping rho below 2^(8 * rnd_bytes).
  const std::size_t width = rnd_bytes(x);
  const mpz_class limit = mpz_class(1) << (8 * width);
  const mpz_class t_count = (limit - 1 - com) / x.n + 1;
  const mpz_class rho = com + uniform_below(t_count, rng) * x.n;
  return bigint_be(rho, width);
}

std::size_t GqProtocol::challenge_seed_bytes(const Statement& x) const {
  return (challenge_bits(x) + 7) / 8;
}

GqProtocol::Challenge GqProtocol::challenge_from_seed(const Statement& x, ByteView seed) const {
  const std::size_t need = challenge_seed_bytes(x);
  if (seed.size() < need) {
    throw Error(ErrorCode::kSeedExhausted, "challenge seed needs " + std::to_string(need) + " bytes");
  }
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < need; ++i) v |= static_cast<std::uint64_t>(seed[i]) << (8 * i);
  const std::size_t bits = challenge_bits(x);
  return bits >= 64 ? v : v & ((std::uint64_t{1} << bits) - 1);
}

Bytes GqProtocol::challenge_seed_for(const Statement& x, const Challenge& ch, Rng& rng) const {
  const std::size_t need = challenge_seed_bytes(x);
  const std::size_t bits = challenge_bits(x);
  const std::uint64_t seed_mask = need >= 8 ? ~std::uint64_t{0} : (std::uint64_t{1} << (8 * need)) - 1;
  // The bits above ell are ignored by challenge_from_seed; fill them uniformly.
  const std::uint64_t v = ch | ((rng.next_u64() << bits) & seed_mask);
  Bytes seed(need);
  for (std::size_t i = 0; i < need; ++i) seed[i] = static_cast<std::uint8_t>(v >> (8 * i));
  return seed;
}

std::optional<sigma::Transcript<GqProtocol>> GqProtocol::simulate(const Statement& x, Rng& rng) const {
  GqTranscript t = gq_simulate(x, rng);
  return sigma::Transcript<GqProtocol>{std::move(t.r), t.c, std::move(t.z)};
}

GqProtocol::ExtractedWitness GqProtocol::extract(const Statement& x,
                                                 const sigma::Transcript<GqProtocol>& t1,
                                                 const sigma::Transcript<GqProtocol>& t2) const {
  return gq_extract(x, GqTranscript{t1.com, t1.ch, t1.rsp}, GqTranscript{t2.com, t2.ch, t2.rsp});
}

bool GqProtocol::extracted_valid(const Statement& x, const ExtractedWitness& w) const {
  return is_unit(w, x.n) && powm(w, x.e, x.n) == x.y;
}

Bytes GqProtocol::encode_statement(const Statement& x) const {
  ByteWriter out;
  write_bigint(out, x.e);
  write_bigint(out, x.n);
  write_bigint(out, x.y);
  return std::move(out).take();
}

GqProtocol::Statement GqProtocol::decode_statement(ByteView bytes) const {
  ByteReader in(bytes);
  Statement x;
  x.e = read_bigint(in);
  x.n = read_bigint(in);
  x.y = read_bigint(in);
  in.expect_done();
  if (x.n < 2 || !is_unit(x.y, x.n) || x.e < 3) {
    throw DecodeError(0, "statement values out of range");
  }
  return x;
}

Bytes GqProtocol::encode_witness(const Witness& w) const {
  ByteWriter out;
  write_bigint(out, w.w);
  write_bigint(out, w.p);
  write_bigint(out, w.q);
  write_bigint(out, w.d);
  return std::move(out).take();
}

GqProtocol::Witness GqProtocol::decode_witness(const Statement& x, ByteView bytes) const {
  ByteReader in(bytes);
  Witness w;
  w.w = read_bigint(in);
  w.p = read_bigint(in);
  w.q = read_bigint(in);
  w.d = read_bigint(in);
  in.expect_done();
  if (!relation_check(x, w)) throw DecodeError(0, "witness does not match statement");
  return w;
}

Bytes GqProtocol::encode_commitment(const Commitment& com) const {
  ByteWriter out;
  write_bigint(out, com);
  return std::move(out).take();
}

GqProtocol::Commitment GqProtocol::decode_commitment(const Statement& x, ByteView bytes) const {
  ByteReader in(bytes);
  mpz_class v = read_bigint(in);
  in.expect_done();
  if (v >= x.n) throw DecodeError(0, "commitment not reduced mod N");
  return v;
}

Bytes GqProtocol::encode_challenge(const Challenge& ch) const {
  ByteWriter out;
  write_bigint(out, mpz_class(static_cast<unsigned long>(ch)));
  return std::move(out).take();
}

GqProtocol::Challenge GqProtocol::decode_challenge(const Statement& x, ByteView bytes) const {
  ByteReader in(bytes);
  mpz_class v = read_bigint(in);
  in.expect_done();
  if (bit_length(v) > challenge_bits(x)) throw DecodeError(0, "challenge exceeds challenge length");
  return mpz_get_ui(v.get_mpz_t());
}

Bytes GqProtocol::encode_response(const Response& rsp) const { return encode_commitment(rsp); }

GqProtocol::Response GqProtocol::decode_response(const Statement& x, ByteView bytes) const {
  ByteReader in(bytes);
  mpz_class v = read_bigint(in);
  in.expect_done();
  if (v >= x.n) throw DecodeError(0, "response not reduced mod N");
  return v;
}

}  // namespace ofs::gq
