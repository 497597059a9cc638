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

#include <optional>
#include <string>
#include <utility>

#include "ofs/error.hpp"
#include "ofs/fs/keyfile.hpp"
#include "ofs/gq/gq.hpp"
#include "ofs/lattice/lattice.hpp"

// Per-scheme glue for key files: the value lines are
//   parameters, statement[, witness].
namespace ofs {

Bytes encode_protocol_params(const lattice::LatticeProtocol& p);
Bytes encode_protocol_params(const gq::GqProtocol& p);

template <class P>
P decode_protocol(ByteView params);

template <>
lattice::LatticeProtocol decode_protocol<lattice::LatticeProtocol>(ByteView params);
template <>
gq::GqProtocol decode_protocol<gq::GqProtocol>(ByteView params);

template <class P>
fs::KeyFile make_key_file(const P& protocol, const typename P::Statement& x,
                          const typename P::Witness* w) {
  fs::KeyFile file;
  file.tag = P::kTag;
  file.kind = w ? fs::KeyKind::kSecret : fs::KeyKind::kPublic;
  file.comments.push_back(std::string(P::kName) + (w ? " secret key" : " public key"));
  file.comments.push_back("values: parameters, statement" + std::string(w ? ", witness" : ""));
  file.values.push_back(encode_protocol_params(protocol));
  file.values.push_back(protocol.encode_statement(x));
  if (w) file.values.push_back(protocol.encode_witness(*w));
  return file;
}

template <class P>
struct LoadedKey {
  P protocol;
  typename P::Statement statement;
  std::optional<typename P::Witness> witness;
};

// Throws DecodeError on a malformed or mismatching file.
template <class P>
LoadedKey<P> read_key(const fs::KeyFile& file) {
  if (file.tag != P::kTag) throw DecodeError(0, "key file is not for scheme " + std::string(P::kName));
  const std::size_t want = file.kind == fs::KeyKind::kSecret ? 3 : 2;
  if (file.values.size() != want) throw DecodeError(0, "key file has the wrong number of values");
  P protocol = [&] {
    try {
      return decode_protocol<P>(file.values[0]);
    } catch (const DecodeError&) {
      throw;
    } catch (const Error& e) {
      throw DecodeError(0, e.what());
    }
  }();
  auto x = protocol.decode_statement(file.values[1]);
  std::optional<typename P::Witness> w;
  if (file.kind == fs::KeyKind::kSecret) {
    w = protocol.decode_witness(x, file.values[2]);
    if (!protocol.relation_check(x, *w)) throw DecodeError(0, "witness does not match statement");
  }
  return LoadedKey<P>{std::move(protocol), std::move(x), std::move(w)};
}

}  // namespace ofs
