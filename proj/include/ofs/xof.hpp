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
#include <initializer_list>

#include "ofs/bytes.hpp"

namespace ofs {

// SHAKE-256 over the concatenation of `parts`, squeezed to `out_len` bytes.
Bytes shake256(std::initializer_list<ByteView> parts, std::size_t out_len);

inline Bytes shake256(ByteView input, std::size_t out_len) { return shake256({input}, out_len); }

}  // namespace ofs
