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

#include "ofs/presets.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "ofs/error.hpp"

namespace ofs {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Fields {
  std::map<std::string, std::pair<std::string, std::size_t>> kv;

  const std::string& get(const std::string& key) const {
    auto it = kv.find(key);
    if (it == kv.end()) throw Error(ErrorCode::kUnsupportedParameters, "preset is missing `" + key + "`");
    return it->second.first;
  }

  std::uint64_t u64(const std::string& key) const {
    const std::string& v = get(key);
    std::size_t used = 0;
    unsigned long long out = 0;
    try {
      out = std::stoull(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size() || v.empty() || v[0] == '-') {
      throw DecodeError(kv.at(key).second, "`" + key + "` is not a non-negative integer");
    }
    return out;
  }

  std::uint32_t u32(const std::string& key) const {
    const std::uint64_t v = u64(key);
    if (v > 0xffffffffull) throw DecodeError(kv.at(key).second, "`" + key + "` out of range");
    return static_cast<std::uint32_t>(v);
  }

  double f64(const std::string& key) const {
    const std::string& v = get(key);
    std::size_t used = 0;
    double out = 0;
    try {
      out = std::stod(v, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != v.size()) throw DecodeError(kv.at(key).second, "`" + key + "` is not a number");
    return out;
  }
};

}  // namespace

std::string scheme_name(SchemeKind kind) { return kind == SchemeKind::kLattice ? "lattice" : "gq"; }

Preset parse_preset(const std::string& text, const std::string& name) {
  Fields f;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DecodeError(lineno, "expected key=value");
    f.kv[trim(line.substr(0, eq))] = {trim(line.substr(eq + 1)), lineno};
  }

  Preset p;
  p.name = name;
  const std::string& scheme = f.get("scheme");
  if (f.kv.count("toy")) p.toy = f.u32("toy") != 0;
  if (scheme == "lattice") {
    p.scheme = SchemeKind::kLattice;
    auto& l = p.lattice;
    l.n = f.u32("n");
    l.q = f.u32("q");
    l.m = f.u32("m");
    l.k = f.u32("k");
    l.d = f.u32("d");
    l.kappa = f.u32("kappa");
    l.lambda = f.u32("lambda");
    l.s = f.f64("s");
    l.eta = f.kv.count("eta") ? f.f64("eta") : 1.1;
    lattice::validate_params(l);
  } else if (scheme == "gq") {
    p.scheme = SchemeKind::kGq;
    p.gq.bit_length = f.u32("bits");
    p.gq.e = f.u64("e");
    p.gq.lambda = f.u32("lambda");
    gq::GqProtocol check(p.gq);  // validates
  } else {
    throw Error(ErrorCode::kUnsupportedParameters, "unknown scheme `" + scheme + "`");
  }
  if (!p.toy && (p.scheme == SchemeKind::kLattice ? p.lattice.lambda : p.gq.lambda) < 64) {
    throw Error(ErrorCode::kUnsupportedParameters, "non-toy presets need lambda >= 64");
  }
  return p;
}

std::vector<std::string> preset_search_path() {
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("OFS_PRESET_DIR"); env && *env) dirs.emplace_back(env);
#ifdef OFS_DEFAULT_PRESET_DIR
  dirs.emplace_back(OFS_DEFAULT_PRESET_DIR);
#endif
  return dirs;
}

Preset load_preset(const std::string& name) {
  for (const auto& dir : preset_search_path()) {
    const auto path = std::filesystem::path(dir) / (name + ".preset");
    std::ifstream in(path);
    if (!in) continue;
    std::ostringstream text;
    text << in.rdbuf();
    return parse_preset(text.str(), name);
  }
  throw Error(ErrorCode::kIoError, "preset `" + name + "` not found");
}

}  // namespace ofs
