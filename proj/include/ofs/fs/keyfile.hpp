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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ofs/bytes.hpp"

namespace ofs::fs {

constexpr std::uint8_t kKeyFileVersion = 0x01;

enum class KeyKind : std::uint8_t { kPublic = 0x01, kSecret = 0x02 };

// Line-oriented text: `#` comments, then one lowercase hex value per line.
// The first value is the header 0x01 || scheme tag || kind; the rest are
// scheme-defined (parameters, statement, witness).
struct KeyFile {
  std::uint8_t tag = 0;
  KeyKind kind = KeyKind::kPublic;
  std::vector<Bytes> values;
  std::vector<std::string> comments;
};

void write_key_file(std::ostream& out, const KeyFile& file);
// Throws DecodeError; the offset is the 1-based line number.
KeyFile read_key_file(std::istream& in);

void save_key_file(const std::string& path, const KeyFile& file);
KeyFile load_key_file(const std::string& path);

}  // namespace ofs::fs
