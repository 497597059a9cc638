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

#include "ofs/lattice/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "ofs/error.hpp"
#include "ofs/lattice/gaussian.hpp"

namespace ofs::lattice {

namespace {

std::uint64_t squared_norm_exact(const IntVector& v) {
  std::uint64_t acc = 0;
  for (std::int64_t x : v) {
    const std::uint64_t a = static_cast<std::uint64_t>(x < 0 ? -x : x);
    if (a > (1ull << 31)) return UINT64_MAX;
    acc += a * a;
    if (acc > (1ull << 62)) return UINT64_MAX;
  }
  return acc;
}

IntVector challenge_as_ints(const LatticeChallenge& c) { return IntVector(c.c.begin(), c.c.end()); }

void check_shapes(const LatticeParams& p, const LatticePublicKey& pk) {
  if (pk.a.rows() != p.n || pk.a.cols() != p.m || pk.r.rows() != p.n || pk.r.cols() != p.k) {
    throw Error(ErrorCode::kShapeMismatch, "public key shape does not match parameters");
  }
}

void write_residues(ByteWriter& out, std::span<const kernels::Residue> v) {
  for (auto x : v) out.u32_le(x);
}

void write_signed(ByteWriter& out, std::span<const std::int64_t> v) {
  for (auto x : v) out.i32_le(static_cast<std::int32_t>(x));
}

ResidueMatrix read_residue_matrix(ByteReader& in, std::size_t rows, std::size_t cols, std::uint32_t q) {
  ResidueMatrix m(rows, cols);
  for (auto& v : m.data()) {
    const std::size_t at = in.offset();
    v = in.u32_le();
    if (v >= q) throw DecodeError(at, "residue " + std::to_string(v) + " not below q");
  }
  return m;
}

}  // namespace

std::pair<LatticePublicKey, LatticeSecretKey> lattice_keygen(const LatticeParams& p, Rng& rng) {
  auto trapdoor = std::make_shared<const LatticeTrapdoorKey>(gen_trap(p, rng));
  IntMatrix s(p.m, p.k);
  for (auto& v : s.data()) v = static_cast<std::int64_t>(rng.uniform(2 * p.d + 1)) - p.d;
  LatticePublicKey pk{trapdoor->a(), kernels::matmul_mod_q(trapdoor->a(), s, p.q)};
  return {std::move(pk), LatticeSecretKey{std::move(s), std::move(trapdoor)}};
}

bool lattice_relation_check(const LatticeParams& p, const LatticePublicKey& pk,
                            const LatticeSecretKey& sk) {
  if (pk.a.rows() != p.n || pk.a.cols() != p.m || pk.r.rows() != p.n || pk.r.cols() != p.k) return false;
  if (sk.s.rows() != p.m || sk.s.cols() != p.k || !sk.trapdoor) return false;
  const auto d = static_cast<std::int64_t>(p.d);
  for (auto v : sk.s.data()) {
    if (v < -d || v > d) return false;
  }
  if (!(sk.trapdoor->a() == pk.a)) return false;
  return kernels::matmul_mod_q(pk.a, sk.s, p.q) == pk.r;
}

IntVector secret_times_challenge(const IntMatrix& s, const LatticeChallenge& c) {
  IntVector out(s.rows(), 0);
  for (std::size_t i = 0; i < s.rows(); ++i) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < s.cols(); ++j) acc += s(i, j) * c.c[j];
    out[i] = acc;
  }
  return out;
}

double acceptance_probability(const LatticeParams& p, const IntVector& y_prime, const IntVector& z) {
  const double exponent = std::numbers::pi * (squared_norm(y_prime) - squared_norm(z)) / (p.s * p.s);
  return std::min(1.0, std::exp(exponent) / kRepetitionM);
}

std::optional<IntVector> lattice_respond(const LatticeParams& p, const LatticeSecretKey& sk,
                                         const ResidueVector& y, const LatticeChallenge& c, Rng& rng) {
  if (!sk.trapdoor) throw Error(ErrorCode::kResponseUnavailable, "secret key carries no trapdoor");
  if (y.size() != p.n || c.c.size() != p.k) throw Error(ErrorCode::kShapeMismatch, "bad commitment or challenge");
  for (auto v : y) {
    if (v >= p.q) throw Error(ErrorCode::kNotInRange, "commitment coordinate not below q");
  }
  IntVector y_prime = sample_preimage(*sk.trapdoor, y, p.s, rng);
  // z = y' - S c, so that A z = Y - R c as the verifier checks.
  IntVector z = secret_times_challenge(sk.s, c);
  for (std::size_t i = 0; i < z.size(); ++i) z[i] = y_prime[i] - z[i];
  if (!rng.bernoulli(acceptance_probability(p, y_prime, z))) return std::nullopt;
  // Outside the bound the verifier would reject anyway; report it as an abort.
  if (squared_norm_exact(z) > squared_norm_bound(p)) return std::nullopt;
  return z;
}

std::uint64_t squared_norm_bound(const LatticeParams& p) {
  const long double b = static_cast<long double>(p.eta) * p.s;
  return static_cast<std::uint64_t>(std::floor(b * b * p.m));
}

bool verify_id(const LatticeParams& p, const LatticePublicKey& pk, const ResidueVector& y,
               const LatticeChallenge& c, const IntVector& z) {
  check_shapes(p, pk);
  if (y.size() != p.n || c.c.size() != p.k || z.size() != p.m) {
    throw Error(ErrorCode::kShapeMismatch, "transcript shape does not match parameters");
  }
  if (!in_challenge_space(c, p)) return false;
  if (squared_norm_exact(z) > squared_norm_bound(p)) return false;
  const auto az = kernels::matvec_mod_q(pk.a, z, p.q);
  const IntVector cv = challenge_as_ints(c);
  const auto rc = kernels::matvec_mod_q(pk.r, cv, p.q);
  for (std::size_t i = 0; i < p.n; ++i) {
    if ((az[i] + rc[i]) % p.q != y[i]) return false;
  }
  return true;
}

ExtractedSolution lattice_extract(const LatticeParams& p, const LatticePublicKey& pk,
                                  const ResidueVector& y1, const LatticeChallenge& c1,
                                  const IntVector& z1, const ResidueVector& y2,
                                  const LatticeChallenge& c2, const IntVector& z2) {
  if (c1 == c2) throw Error(ErrorCode::kSameChallenge, "transcripts share the challenge");
  if (y1 != y2) throw Error(ErrorCode::kDomainError, "transcripts have different commitments");
  if (!verify_id(p, pk, y1, c1, z1) || !verify_id(p, pk, y2, c2, z2)) {
    throw Error(ErrorCode::kNotVerifying, "a transcript does not verify");
  }
  // A z1 + R c1 = A z2 + R c2  =>  A (z1 - z2) = R (c2 - c1).
  ExtractedSolution sol;
  sol.u.resize(p.m);
  for (std::size_t i = 0; i < p.m; ++i) sol.u[i] = z1[i] - z2[i];
  sol.e.resize(p.k);
  for (std::size_t j = 0; j < p.k; ++j) sol.e[j] = c2.c[j] - c1.c[j];
  return sol;
}

bool extracted_solution_valid(const LatticeParams& p, const LatticePublicKey& pk,
                              const ExtractedSolution& sol) {
  if (sol.u.size() != p.m || sol.e.size() != p.k) return false;
  bool nonzero = false;
  for (auto v : sol.e) {
    if (v < -2 || v > 2) return false;
    nonzero |= v != 0;
  }
  if (!nonzero) return false;
  // |u| <= 2 eta s sqrt(m), compared squared.
  const long double b = 2.0L * p.eta * p.s;
  if (static_cast<long double>(squared_norm_exact(sol.u)) > b * b * p.m) return false;
  return kernels::matvec_mod_q(pk.a, sol.u, p.q) == kernels::matvec_mod_q(pk.r, sol.e, p.q);
}

LatticeProtocol::LatticeProtocol(LatticeParams params) : params_(params) {
  validate_params(params_);
  (void)challenge_space_size(params_.k, params_.kappa);
}

std::pair<LatticePublicKey, LatticeSecretKey> LatticeProtocol::keygen(Rng& rng) const {
  return lattice_keygen(params_, rng);
}

bool LatticeProtocol::relation_check(const Statement& x, const Witness& w) const {
  return lattice_relation_check(params_, x, w);
}

ResidueVector LatticeProtocol::honest_commit(const Statement& x, const Witness&, Rng& rng) const {
  check_shapes(params_, x);
  const IntVector y = gaussian_vector(params_.m, params_.s, rng);
  return kernels::matvec_mod_q(x.a, y, params_.q);
}

std::optional<IntVector> LatticeProtocol::respond(const Statement&, const Witness& w,
                                                  const Commitment& com, const Challenge& ch,
                                                  Rng& rng) const {
  return lattice_respond(params_, w, com, ch, rng);
}

bool LatticeProtocol::verify(const Statement& x, const Commitment& com, const Challenge& ch,
                             const Response& rsp) const {
  return verify_id(params_, x, com, ch, rsp);
}

std::size_t LatticeProtocol::rnd_bytes(const Statement&) const {
  return (static_cast<std::size_t>(params_.n) * params_.log_q() + 7) / 8;
}

ResidueVector LatticeProtocol::commit_from_rnd(const Statement& x, ByteView rho) const {
  if (rho.size() != rnd_bytes(x)) throw Error(ErrorCode::kBadRandomnessLength, "wrong rho length");
  const std::uint32_t l = params_.log_q();
  ResidueVector y(params_.n, 0);
  std::size_t bit = 0;
  for (std::uint32_t i = 0; i < params_.n; ++i) {
    for (std::uint32_t j = 0; j < l; ++j, ++bit) {
      y[i] |= static_cast<kernels::Residue>((rho[bit / 8] >> (bit % 8)) & 1u) << j;
    }
  }
  return y;
}

Bytes LatticeProtocol::sample_rnd(const Statement& x, const Commitment& com, Rng& rng) const {
  if (com.size() != params_.n) throw Error(ErrorCode::kNotInRange, "commitment has wrong length");
  const std::uint32_t l = params_.log_q();
  Bytes rho(rnd_bytes(x), 0);
  std::size_t bit = 0;
  for (std::uint32_t i = 0; i < params_.n; ++i) {
    if (com[i] >= params_.q) {
      throw Error(ErrorCode::kNotInRange, "coordinate " + std::to_string(i) + " is not below q");
    }
    for (std::uint32_t j = 0; j < l; ++j, ++bit) {
      rho[bit / 8] |= static_cast<std::uint8_t>(((com[i] >> j) & 1u) << (bit % 8));
    }
  }
  // Padding bits past n log q are ignored by Com, so they are drawn fresh.
  for (; bit < rho.size() * 8; ++bit) {
    if (rng.bit()) rho[bit / 8] |= static_cast<std::uint8_t>(1u << (bit % 8));
  }
  return rho;
}

std::size_t LatticeProtocol::challenge_seed_bytes(const Statement&) const {
  return challenge_seed_length(params_);
}

LatticeChallenge LatticeProtocol::challenge_from_seed(const Statement&, ByteView seed) const {
  return derive_challenge(seed, params_);
}

Bytes LatticeProtocol::challenge_seed_for(const Statement&, const Challenge& ch, Rng& rng) const {
  return lattice::challenge_seed_for(ch, params_, rng);
}

std::optional<sigma::Transcript<LatticeProtocol>> LatticeProtocol::simulate(const Statement& x,
                                                                           Rng& rng) const {
  check_shapes(params_, x);
  if (!rng.bernoulli(1.0 / kRepetitionM)) return std::nullopt;
  const auto size = challenge_space_size(params_.k, params_.kappa);
  LatticeChallenge c = unrank_challenge(rng.uniform(size), params_.k, params_.kappa);
  IntVector z;
  do {
    z = gaussian_vector(params_.m, params_.s, rng);
  } while (squared_norm_exact(z) > squared_norm_bound(params_));
  const auto az = kernels::matvec_mod_q(x.a, z, params_.q);
  const auto rc = kernels::matvec_mod_q(x.r, challenge_as_ints(c), params_.q);
  ResidueVector y(params_.n);
  for (std::size_t i = 0; i < params_.n; ++i) y[i] = (az[i] + rc[i]) % params_.q;
  return sigma::Transcript<LatticeProtocol>{std::move(y), std::move(c), std::move(z)};
}

ExtractedSolution LatticeProtocol::extract(const Statement& x,
                                           const sigma::Transcript<LatticeProtocol>& t1,
                                           const sigma::Transcript<LatticeProtocol>& t2) const {
  return lattice_extract(params_, x, t1.com, t1.ch, t1.rsp, t2.com, t2.ch, t2.rsp);
}

bool LatticeProtocol::extracted_valid(const Statement& x, const ExtractedWitness& w) const {
  return extracted_solution_valid(params_, x, w);
}

Bytes LatticeProtocol::encode_statement(const Statement& x) const {
  check_shapes(params_, x);
  ByteWriter out;
  out.prefixed(encode_params(params_));
  write_residues(out, x.a.data());
  write_residues(out, x.r.data());
  return std::move(out).take();
}

LatticePublicKey LatticeProtocol::decode_statement(ByteView bytes) const {
  ByteReader in(bytes);
  const std::size_t at = in.offset();
  if (decode_params(in.prefixed()) != params_) throw DecodeError(at, "statement parameters differ");
  LatticePublicKey pk;
  pk.a = read_residue_matrix(in, params_.n, params_.m, params_.q);
  pk.r = read_residue_matrix(in, params_.n, params_.k, params_.q);
  in.expect_done();
  return pk;
}

Bytes LatticeProtocol::encode_witness(const Witness& w) const {
  if (!w.trapdoor) throw Error(ErrorCode::kResponseUnavailable, "secret key carries no trapdoor");
  ByteWriter out;
  write_signed(out, w.s.data());
  write_signed(out, w.trapdoor->rbar().data());
  return std::move(out).take();
}

LatticeSecretKey LatticeProtocol::decode_witness(const Statement& x, ByteView bytes) const {
  ByteReader in(bytes);
  IntMatrix s(params_.m, params_.k);
  for (auto& v : s.data()) v = in.i32_le();
  IntMatrix rbar(params_.mbar(), static_cast<std::size_t>(params_.n) * params_.log_q());
  for (auto& v : rbar.data()) {
    const std::size_t at = in.offset();
    v = in.i32_le();
    if (v < -1 || v > 1) throw DecodeError(at, "trapdoor entry outside {-1, 0, 1}");
  }
  in.expect_done();
  check_shapes(params_, x);
  return LatticeSecretKey{std::move(s),
                          std::make_shared<const LatticeTrapdoorKey>(params_, x.a, std::move(rbar))};
}

Bytes LatticeProtocol::encode_commitment(const Commitment& com) const {
  ByteWriter out;
  write_residues(out, com);
  return std::move(out).take();
}

ResidueVector LatticeProtocol::decode_commitment(const Statement&, ByteView bytes) const {
  ByteReader in(bytes);
  const ResidueMatrix m = read_residue_matrix(in, 1, params_.n, params_.q);
  ResidueVector y(m.data().begin(), m.data().end());
  in.expect_done();
  return y;
}

Bytes LatticeProtocol::encode_challenge(const Challenge& ch) const {
  ByteWriter out;
  write_signed(out, challenge_as_ints(ch));
  return std::move(out).take();
}

LatticeChallenge LatticeProtocol::decode_challenge(const Statement&, ByteView bytes) const {
  ByteReader in(bytes);
  LatticeChallenge c{std::vector<std::int8_t>(params_.k)};
  for (auto& v : c.c) {
    const std::size_t at = in.offset();
    const std::int32_t raw = in.i32_le();
    if (raw < -1 || raw > 1) throw DecodeError(at, "challenge entry outside {-1, 0, 1}");
    v = static_cast<std::int8_t>(raw);
  }
  in.expect_done();
  if (c.weight() > params_.kappa) throw DecodeError(0, "challenge weight exceeds kappa");
  return c;
}

Bytes LatticeProtocol::encode_response(const Response& rsp) const {
  ByteWriter out;
  write_signed(out, rsp);
  return std::move(out).take();
}

IntVector LatticeProtocol::decode_response(const Statement&, ByteView bytes) const {
  ByteReader in(bytes);
  IntVector z(params_.m);
  for (auto& v : z) v = in.i32_le();
  in.expect_done();
  return z;
}

}  // namespace ofs::lattice
