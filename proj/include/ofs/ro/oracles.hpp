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
#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "ofs/oracle.hpp"
#include "ofs/rng.hpp"

namespace ofs::ro {

// Random function sampled lazily. Fresh answers are SHAKE-256 expansions of
// (seed, input), so a whole run replays from the seed; answers are cached.
class LazyOracle final : public HashOracle {
 public:
  explicit LazyOracle(Bytes seed) : seed_(std::move(seed)) {}

  Bytes query(ByteView input, std::size_t out_len) override;
  std::size_t table_size() const;

 private:
  Bytes seed_;
  mutable std::mutex mu_;
  std::map<std::pair<std::size_t, Bytes>, Bytes> table_;
};

// SC_delta: each input is independently a member with probability delta and
// members answer y_star; everything else goes to the base oracle. Membership
// is a keyed deterministic predicate, so it is fixed for the oracle's lifetime.
class SemiConstantOracle final : public HashOracle {
 public:
  SemiConstantOracle(std::shared_ptr<HashOracle> base, double delta, Bytes y_star, Bytes membership_seed);

  bool is_member(ByteView input) const;
  // Throws LengthMismatch if a member is queried with out_len != |y_star|.
  Bytes query(ByteView input, std::size_t out_len) override;

  double delta() const noexcept { return delta_; }
  const Bytes& y_star() const noexcept { return y_star_; }

 private:
  std::shared_ptr<HashOracle> base_;
  double delta_;
  std::uint64_t threshold_;
  bool everyone_;
  Bytes y_star_;
  Bytes membership_seed_;
};

// Point overrides over a base oracle; a later override of the same point wins.
class ReprogrammedOracle final : public HashOracle {
 public:
  ReprogrammedOracle(std::shared_ptr<HashOracle> base, std::size_t output_len)
      : base_(std::move(base)), output_len_(output_len) {}

  // Throws LengthMismatch unless |value| = output_len.
  void reprogram(Bytes point, Bytes value);
  bool is_overridden(ByteView point) const;
  std::size_t layers() const noexcept { return history_.size(); }

  Bytes query(ByteView input, std::size_t out_len) override;

 private:
  std::shared_ptr<HashOracle> base_;
  std::size_t output_len_;
  std::map<Bytes, Bytes> overrides_;
  std::vector<Bytes> history_;  // points in reprogramming order
};

std::shared_ptr<ReprogrammedOracle> reprogram(std::shared_ptr<HashOracle> base, std::size_t output_len,
                                              Bytes point, Bytes value);

// Forwards to `inner`, throwing AdversaryBudgetExceeded on query budget + 1,
// and remembers every input asked.
class CountingOracle final : public HashOracle {
 public:
  CountingOracle(HashOracle& inner, std::size_t budget) : inner_(inner), budget_(budget) {}

  Bytes query(ByteView input, std::size_t out_len) override;

  std::size_t count() const noexcept { return log_.size(); }
  std::size_t remaining() const noexcept { return budget_ - log_.size(); }
  bool was_queried(ByteView input) const;

 private:
  HashOracle& inner_;
  std::size_t budget_;
  std::vector<Bytes> log_;
};

// Fraction of `sample_count` random 16-byte inputs answered with y_star.
// Throws DomainError for sample_count < 1000.
double sc_fraction_estimate(SemiConstantOracle& oracle, std::size_t sample_count, Rng& rng);

}  // namespace ofs::ro
