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

#include "ofs/xof.hpp"

#include <openssl/evp.h>

#include <memory>

namespace ofs {

Bytes shake256(std::initializer_list<ByteView> parts, std::size_t out_len) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_shake256(), nullptr) != 1) {
    throw std::runtime_error("SHAKE-256 initialisation failed");
  }
  for (ByteView part : parts) {
    if (!part.empty() && EVP_DigestUpdate(ctx.get(), part.data(), part.size()) != 1) {
      throw std::runtime_error("SHAKE-256 absorb failed");
    }
  }
  Bytes out(out_len);
  if (out_len > 0 && EVP_DigestFinalXOF(ctx.get(), out.data(), out_len) != 1) {
    throw std::runtime_error("SHAKE-256 squeeze failed");
  }
  return out;
}

}  // namespace ofs
