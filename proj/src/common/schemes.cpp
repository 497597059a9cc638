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

#include "ofs/schemes.hpp"

namespace ofs {

Bytes encode_protocol_params(const lattice::LatticeProtocol& p) { return lattice::encode_params(p.params()); }

Bytes encode_protocol_params(const gq::GqProtocol& p) {
  ByteWriter out;
  out.u32_le(static_cast<std::uint32_t>(p.params().bit_length));
  out.u32_le(static_cast<std::uint32_t>(p.params().e));
  out.u32_le(static_cast<std::uint32_t>(p.params().e >> 32));
  out.u32_le(static_cast<std::uint32_t>(p.params().lambda));
  return std::move(out).take();
}

template <>
lattice::LatticeProtocol decode_protocol<lattice::LatticeProtocol>(ByteView params) {
  return lattice::LatticeProtocol(lattice::decode_params(params));
}

template <>
gq::GqProtocol decode_protocol<gq::GqProtocol>(ByteView params) {
  ByteReader in(params);
  gq::GqParams p;
  p.bit_length = in.u32_le();
  const std::uint64_t lo = in.u32_le();
  const std::uint64_t hi = in.u32_le();
  p.e = lo | (hi << 32);
  p.lambda = in.u32_le();
  in.expect_done();
  return gq::GqProtocol(p);
}

}  // namespace ofs
