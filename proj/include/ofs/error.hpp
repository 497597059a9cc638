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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ofs {

enum class ErrorCode {
  kUnsupportedParameters,
  kAbortRetryExceeded,
  kSameChallenge,
  kResponseUnavailable,
  kBadRandomnessLength,
  kNotInRange,
  kNotVerifying,
  kNotCoprime,
  kExponentDividesTotient,
  kQualityViolation,
  kSeedExhausted,
  kDecodeError,
  kDomainError,
  kLengthMismatch,
  kAdversaryBudgetExceeded,
  kShapeMismatch,
  kRelationViolated,
  kIoError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Decoding failures carry the byte offset at which the input stopped making sense.
class DecodeError : public Error {
 public:
  DecodeError(std::size_t offset, const std::string& what)
      : Error(ErrorCode::kDecodeError, what + " at byte offset " + std::to_string(offset)),
        offset_(offset),
        detail_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  // The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

}  // namespace ofs
