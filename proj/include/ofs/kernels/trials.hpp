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
#include <exception>
#include <vector>

// Monte Carlo driver: runs `trial(i)` for i in [0, n) and returns the results
// in index order. Each trial must derive its own randomness from i, so the
// serial and OpenMP versions return identical vectors.
namespace ofs::kernels {

namespace serial {
template <class Result, class Fn>
std::vector<Result> run_trials(std::size_t n, Fn&& trial) {
  std::vector<Result> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = trial(i);
  return out;
}
}  // namespace serial

namespace omp {
template <class Result, class Fn>
std::vector<Result> run_trials(std::size_t n, Fn&& trial) {
  std::vector<Result> out(n);
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = trial(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(ofs_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}
}  // namespace omp

using omp::run_trials;

}  // namespace ofs::kernels
