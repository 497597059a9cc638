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

#include "ofs/fs/keyfile.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include "ofs/error.hpp"

namespace ofs::fs {

void write_key_file(std::ostream& out, const KeyFile& file) {
  for (const auto& c : file.comments) out << "# " << c << '\n';
  out << to_hex(Bytes{kKeyFileVersion, file.tag, static_cast<std::uint8_t>(file.kind)}) << '\n';
  // A lone '-' stands for an empty value so that blank lines stay ignorable.
  for (const auto& v : file.values) out << (v.empty() ? "-" : to_hex(v)) << '\n';
}

KeyFile read_key_file(std::istream& in) {
  KeyFile file;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      file.comments.push_back(line.size() > 2 && line[1] == ' ' ? line.substr(2) : line.substr(1));
      continue;
    }
    Bytes value;
    if (line == "-" && have_header) {
      file.values.emplace_back();
      continue;
    }
    try {
      value = from_hex(line);
    } catch (const Error&) {
      throw DecodeError(lineno, "line is not hex");
    }
    if (!have_header) {
      if (value.size() != 3 || value[0] != kKeyFileVersion) throw DecodeError(lineno, "bad key file header");
      if (value[2] != static_cast<std::uint8_t>(KeyKind::kPublic) &&
          value[2] != static_cast<std::uint8_t>(KeyKind::kSecret)) {
        throw DecodeError(lineno, "unknown key kind");
      }
      file.tag = value[1];
      file.kind = static_cast<KeyKind>(value[2]);
      have_header = true;
    } else {
      file.values.push_back(std::move(value));
    }
  }
  if (!have_header) throw DecodeError(lineno, "key file has no header");
  return file;
}

void save_key_file(const std::string& path, const KeyFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  write_key_file(out, file);
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

KeyFile load_key_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  return read_key_file(in);
}

}  // namespace ofs::fs
