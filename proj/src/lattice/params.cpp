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

#include "ofs/lattice/params.hpp"

#include <bit>
#include <cstring>
#include <sstream>

#include "ofs/error.hpp"

namespace ofs::lattice {

namespace {

double log2_binomial_times_pow2(std::uint32_t k, std::uint32_t kappa) {
  // log2(2^kappa * C(k, kappa)) via lgamma.
  return kappa + (std::lgamma(k + 1.0) - std::lgamma(kappa + 1.0) - std::lgamma(k - kappa + 1.0)) /
                     std::log(2.0);
}

void put_f64(ByteWriter& out, double v) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
  out.u32_le(static_cast<std::uint32_t>(bits));
  out.u32_le(static_cast<std::uint32_t>(bits >> 32));
}

double get_f64(ByteReader& in) {
  std::uint64_t lo = in.u32_le();
  std::uint64_t hi = in.u32_le();
  return std::bit_cast<double>(lo | (hi << 32));
}

}  // namespace

std::uint32_t LatticeParams::log_q() const {
  return q == 0 ? 0 : static_cast<std::uint32_t>(std::countr_zero(q));
}

ParamCheck check_params(const LatticeParams& p) {
  ParamCheck c;
  const double logq = p.log_q();
  c.dimension_ok = p.m >= static_cast<std::uint32_t>(std::ceil(2.0 * p.n * logq));
  // Small slack so 2^10 >= 2^10 is not lost to rounding in lgamma.
  c.challenge_space_ok =
      p.kappa <= p.k && log2_binomial_times_pow2(p.k, p.kappa) + 1e-9 >= static_cast<double>(p.lambda);
  c.gaussian_ok = p.s >= 12.0 * p.d * p.kappa * std::sqrt(static_cast<double>(p.m));
  return c;
}

std::string ParamCheck::describe() const {
  std::ostringstream os;
  os << "m>=ceil(2n log q): " << (dimension_ok ? "ok" : "FAIL")
     << ", 2^kappa C(k,kappa)>=2^lambda: " << (challenge_space_ok ? "ok" : "FAIL")
     << ", s>=12 d kappa sqrt(m): " << (gaussian_ok ? "ok" : "FAIL");
  return os.str();
}

void validate_params(const LatticeParams& p) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kUnsupportedParameters, why); };
  if (p.n == 0 || p.m == 0 || p.k == 0) fail("dimensions must be positive");
  if (p.q < 2 || !std::has_single_bit(p.q) || p.q > (1u << 30)) {
    fail("q must be a power of two in [2, 2^30]");
  }
  if (p.d == 0) fail("d must be positive");
  if (p.kappa == 0 || p.kappa > p.k) fail("kappa must lie in [1, k]");
  if (p.lambda == 0) fail("lambda must be positive");
  if (!(p.s > 0.0) || !(p.eta >= 1.0)) fail("s must be positive and eta >= 1");
  if (p.m <= p.n * p.log_q()) fail("m must exceed n log q to leave room for the gadget block");
  const ParamCheck c = check_params(p);
  if (!c.all()) fail(c.describe());
}

Bytes encode_params(const LatticeParams& p) {
  ByteWriter out;
  for (std::uint32_t v : {p.n, p.q, p.m, p.k, p.d, p.kappa, p.lambda}) out.u32_le(v);
  put_f64(out, p.s);
  put_f64(out, p.eta);
  return std::move(out).take();
}

LatticeParams decode_params(ByteView bytes) {
  ByteReader in(bytes);
  LatticeParams p;
  p.n = in.u32_le();
  p.q = in.u32_le();
  p.m = in.u32_le();
  p.k = in.u32_le();
  p.d = in.u32_le();
  p.kappa = in.u32_le();
  p.lambda = in.u32_le();
  p.s = get_f64(in);
  p.eta = get_f64(in);
  in.expect_done();
  try {
    validate_params(p);
  } catch (const Error& e) {
    throw DecodeError(0, std::string("invalid lattice parameters: ") + e.what());
  }
  return p;
}

}  // namespace ofs::lattice
