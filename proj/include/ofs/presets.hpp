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

#include <string>
#include <vector>

#include "ofs/gq/gq.hpp"
#include "ofs/lattice/params.hpp"

namespace ofs {

enum class SchemeKind { kLattice, kGq };

struct Preset {
  std::string name;
  SchemeKind scheme = SchemeKind::kLattice;
  bool toy = true;
  lattice::LatticeParams lattice;
  gq::GqParams gq;
};

// key=value lines, `#` starts a comment. Lattice parameters are validated.
// Throws UnsupportedParameters or DecodeError (offset = line number).
Preset parse_preset(const std::string& text, const std::string& name);

// $OFS_PRESET_DIR first, then the directory shipped with the sources.
std::vector<std::string> preset_search_path();

// Throws IoError if no `<name>.preset` is found on the search path.
Preset load_preset(const std::string& name);

std::string scheme_name(SchemeKind kind);

}  // namespace ofs
