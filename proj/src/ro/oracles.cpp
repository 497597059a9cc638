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

#include "ofs/ro/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ofs/error.hpp"
#include "ofs/xof.hpp"

namespace ofs::ro {

namespace {

Bytes prefixed(ByteView v) {
  ByteWriter w;
  w.prefixed(v);
  return std::move(w).take();
}

}  // namespace

Bytes LazyOracle::query(ByteView input, std::size_t out_len) {
  std::pair<std::size_t, Bytes> key{out_len, Bytes(input.begin(), input.end())};
  std::lock_guard lock(mu_);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  Bytes out = shake256({as_bytes("ofs/lazy"), prefixed(seed_), input}, out_len);
  table_.emplace(std::move(key), out);
  return out;
}

std::size_t LazyOracle::table_size() const {
  std::lock_guard lock(mu_);
  return table_.size();
}

SemiConstantOracle::SemiConstantOracle(std::shared_ptr<HashOracle> base, double delta, Bytes y_star,
                                       Bytes membership_seed)
    : base_(std::move(base)),
      delta_(delta),
      threshold_(0),
      everyone_(delta >= 1.0),
      y_star_(std::move(y_star)),
      membership_seed_(std::move(membership_seed)) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error(ErrorCode::kDomainError, "delta must lie in [0, 1]");
  if (!everyone_) threshold_ = static_cast<std::uint64_t>(std::ldexp(delta, 64));
}

bool SemiConstantOracle::is_member(ByteView input) const {
  if (everyone_) return true;
  if (threshold_ == 0) return false;
  const Bytes h = shake256({as_bytes("ofs/sc-member"), prefixed(membership_seed_), input}, 8);
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | h[i];
  return v < threshold_;
}

Bytes SemiConstantOracle::query(ByteView input, std::size_t out_len) {
  if (!is_member(input)) return base_->query(input, out_len);
  if (out_len != y_star_.size()) {
    throw Error(ErrorCode::kLengthMismatch, "y_star has " + std::to_string(y_star_.size()) +
                                                " bytes, query asked for " + std::to_string(out_len));
  }
  return y_star_;
}

void ReprogrammedOracle::reprogram(Bytes point, Bytes value) {
  if (value.size() != output_len_) {
    throw Error(ErrorCode::kLengthMismatch, "override has " + std::to_string(value.size()) +
                                                " bytes, oracle outputs " + std::to_string(output_len_));
  }
  history_.push_back(point);
  overrides_[std::move(point)] = std::move(value);
}

bool ReprogrammedOracle::is_overridden(ByteView point) const {
  return overrides_.count(Bytes(point.begin(), point.end())) != 0;
}

Bytes ReprogrammedOracle::query(ByteView input, std::size_t out_len) {
  if (auto it = overrides_.find(Bytes(input.begin(), input.end())); it != overrides_.end()) {
    if (out_len != output_len_) throw Error(ErrorCode::kLengthMismatch, "query length differs from override");
    return it->second;
  }
  return base_->query(input, out_len);
}

std::shared_ptr<ReprogrammedOracle> reprogram(std::shared_ptr<HashOracle> base, std::size_t output_len,
                                              Bytes point, Bytes value) {
  auto out = std::make_shared<ReprogrammedOracle>(std::move(base), output_len);
  out->reprogram(std::move(point), std::move(value));
  return out;
}

Bytes CountingOracle::query(ByteView input, std::size_t out_len) {
  if (log_.size() >= budget_) {
    throw Error(ErrorCode::kAdversaryBudgetExceeded, "hash query budget of " + std::to_string(budget_) +
                                                         " exhausted");
  }
  log_.emplace_back(input.begin(), input.end());
  return inner_.query(input, out_len);
}

bool CountingOracle::was_queried(ByteView input) const {
  return std::any_of(log_.begin(), log_.end(),
                     [&](const Bytes& b) { return std::equal(b.begin(), b.end(), input.begin(), input.end()); });
}

double sc_fraction_estimate(SemiConstantOracle& oracle, std::size_t sample_count, Rng& rng) {
  if (sample_count < 1000) throw Error(ErrorCode::kDomainError, "need at least 1000 samples");
  std::size_t hits = 0;
  const std::size_t len = oracle.y_star().size();
  for (std::size_t i = 0; i < sample_count; ++i) {
    const Bytes x = rng.bytes(16);
    hits += oracle.query(x, len) == oracle.y_star();
  }
  return static_cast<double>(hits) / static_cast<double>(sample_count);
}

}  // namespace ofs::ro
