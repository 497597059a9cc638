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

#include "ofs/bytes.hpp"

namespace ofs {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::kAbortRetryExceeded: return "AbortRetryExceeded";
    case ErrorCode::kSameChallenge: return "SameChallenge";
    case ErrorCode::kResponseUnavailable: return "ResponseUnavailable";
    case ErrorCode::kBadRandomnessLength: return "BadRandomnessLength";
    case ErrorCode::kNotInRange: return "NotInRange";
    case ErrorCode::kNotVerifying: return "NotVerifying";
    case ErrorCode::kNotCoprime: return "NotCoprime";
    case ErrorCode::kExponentDividesTotient: return "ExponentDividesTotient";
    case ErrorCode::kQualityViolation: return "QualityViolation";
    case ErrorCode::kSeedExhausted: return "SeedExhausted";
    case ErrorCode::kDecodeError: return "DecodeError";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kAdversaryBudgetExceeded: return "AdversaryBudgetExceeded";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kRelationViolated: return "RelationViolated";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

std::string to_hex(ByteView bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

namespace {
int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
}  // namespace

Bytes from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw DecodeError(hex.size() / 2, "odd-length hex string");
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    int hi = hex_value(hex[2 * i]);
    int lo = hex_value(hex[2 * i + 1]);
    if (hi < 0 || lo < 0) throw DecodeError(i, "invalid hex digit");
    out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  return out;
}

void ByteWriter::u16_be(std::uint16_t v) {
  buf_.push_back(static_cast<std::uint8_t>(v >> 8));
  buf_.push_back(static_cast<std::uint8_t>(v));
}

void ByteWriter::u32_le(std::uint32_t v) {
  for (int i = 0; i < 4; ++i) buf_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void ByteWriter::prefixed(ByteView v) {
  u32_le(static_cast<std::uint32_t>(v.size()));
  raw(v);
}

void ByteReader::need(std::size_t n, const char* what) const {
  if (remaining() < n) {
    throw DecodeError(pos_, std::string("truncated input reading ") + what);
  }
}

std::uint8_t ByteReader::u8() {
  need(1, "u8");
  return data_[pos_++];
}

std::uint16_t ByteReader::u16_be() {
  need(2, "u16");
  std::uint16_t v = static_cast<std::uint16_t>((data_[pos_] << 8) | data_[pos_ + 1]);
  pos_ += 2;
  return v;
}

std::uint32_t ByteReader::u32_le() {
  need(4, "u32");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(data_[pos_ + i]) << (8 * i);
  pos_ += 4;
  return v;
}

ByteView ByteReader::raw(std::size_t n) {
  need(n, "raw bytes");
  ByteView v = data_.subspan(pos_, n);
  pos_ += n;
  return v;
}

ByteView ByteReader::prefixed() {
  std::size_t at = pos_;
  std::uint32_t n = u32_le();
  if (remaining() < n) {
    throw DecodeError(at, "length prefix " + std::to_string(n) + " exceeds remaining " +
                              std::to_string(remaining()));
  }
  return raw(n);
}

void ByteReader::expect_done() const {
  if (!done()) throw DecodeError(pos_, std::to_string(remaining()) + " trailing bytes");
}

}  // namespace ofs
