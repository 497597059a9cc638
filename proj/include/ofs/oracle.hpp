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

#include <cstddef>

#include "ofs/bytes.hpp"

namespace ofs {

// A random function with arbitrary-length output. Querying the same input
// with the same out_len always returns the same bytes.
class HashOracle {
 public:
  virtual ~HashOracle() = default;
  virtual Bytes query(ByteView input, std::size_t out_len) = 0;
};

// SHAKE-256 of the input. A non-empty key gives an independent instance:
// SHAKE-256(u32_le(|key|) || key || input).
class Shake256Oracle final : public HashOracle {
 public:
  Shake256Oracle() = default;
  explicit Shake256Oracle(Bytes key) : key_(std::move(key)) {}

  Bytes query(ByteView input, std::size_t out_len) override;

 private:
  Bytes key_;
};

}  // namespace ofs
