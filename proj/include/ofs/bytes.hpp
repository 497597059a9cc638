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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ofs/error.hpp"

namespace ofs {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

std::string to_hex(ByteView bytes);
// Accepts upper or lower case; throws DecodeError on odd length or bad digits.
Bytes from_hex(std::string_view hex);

inline ByteView as_bytes(std::string_view s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16_be(std::uint16_t v);
  void u32_le(std::uint32_t v);
  void i32_le(std::int32_t v) { u32_le(static_cast<std::uint32_t>(v)); }
  void raw(ByteView v) { buf_.insert(buf_.end(), v.begin(), v.end()); }
  // 4-byte little-endian length, then the bytes.
  void prefixed(ByteView v);

  const Bytes& bytes() const& { return buf_; }
  Bytes take() && { return std::move(buf_); }

 private:
  Bytes buf_;
};

class ByteReader {
 public:
  explicit ByteReader(ByteView data) : data_(data) {}

  std::uint8_t u8();
  std::uint16_t u16_be();
  std::uint32_t u32_le();
  std::int32_t i32_le() { return static_cast<std::int32_t>(u32_le()); }
  ByteView raw(std::size_t n);
  ByteView prefixed();

  std::size_t offset() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return data_.size() - pos_; }
  bool done() const noexcept { return pos_ == data_.size(); }
  // Throws DecodeError if bytes are left over.
  void expect_done() const;

 private:
  void need(std::size_t n, const char* what) const;

  ByteView data_;
  std::size_t pos_ = 0;
};

}  // namespace ofs
