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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ofs/qstate/lemmas.hpp"

namespace ofs::qstate {

// One CSV line. Column meanings per lemma:
//   1: distance = tv, ratio = tv / euclid, bound = 4 euclid
//   2: eps_sum, distance, ratio = distance / sqrt(T eps_sum), bound = 2 sqrt(T eps_sum)
//   3: distance = advantage, ratio = advantage / bound, bound = sc_advantage_bound
struct CheckRow {
  std::string experiment;
  int lemma = 0;
  std::optional<double> eps_sum;
  double distance = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  bool pass = false;
};

struct SuiteConfig {
  std::uint64_t seed = 1;
  bool lemma1 = true;
  bool lemma2 = true;
  bool lemma3 = true;
  std::size_t lemma1_pairs = 1000;
  unsigned lemma1_max_qubits = 8;
  std::size_t lemma2_experiments = 100;
  unsigned lemma2_max_input = 4;
  unsigned lemma2_max_steps = 4;
  bool empty_modified_set = false;  // clears every lemma-2 modified set
  std::size_t lemma3_trials = 10000;
  std::vector<unsigned> lemma3_queries{1, 2};
  std::vector<double> lemma3_deltas{0.05, 0.1, 0.2};
};

// Throws UnsupportedParameters if a register size is out of range.
void check_suite_config(const SuiteConfig& cfg);

std::vector<CheckRow> lemma1_suite(const SuiteConfig& cfg);
// The closed-form case first, then the random experiments.
std::vector<CheckRow> lemma2_suite(const SuiteConfig& cfg);
std::vector<CheckRow> lemma3_suite(const SuiteConfig& cfg);
std::vector<CheckRow> run_suites(const SuiteConfig& cfg);

void write_check_csv(std::ostream& out, const std::vector<CheckRow>& rows);

}  // namespace ofs::qstate
