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

#include "ofs/oracle.hpp"

#include "ofs/xof.hpp"

namespace ofs {

Bytes Shake256Oracle::query(ByteView input, std::size_t out_len) {
  if (key_.empty()) return shake256(input, out_len);
  ByteWriter prefix;
  prefix.prefixed(key_);
  return shake256({prefix.bytes(), input}, out_len);
}

}  // namespace ofs
