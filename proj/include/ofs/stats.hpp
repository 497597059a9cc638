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
#include <span>
#include <vector>

namespace ofs::stats {

struct ChiSquareResult {
  double statistic = 0.0;
  std::size_t dof = 0;
  double p_value = 1.0;
};

// Goodness of fit of observed counts against expected probabilities
// (normalised internally). Cells with zero expectation must have zero counts.
ChiSquareResult chi_square_gof(std::span<const std::uint64_t> observed,
                               std::span<const double> expected_probability);

inline ChiSquareResult chi_square_uniform(std::span<const std::uint64_t> observed) {
  std::vector<double> p(observed.size(), 1.0);
  return chi_square_gof(observed, p);
}

struct KsResult {
  double statistic = 0.0;
  double critical = 0.0;  // at the requested significance
  bool passes = true;
};

// Two-sample Kolmogorov-Smirnov test using the asymptotic critical value
// c(alpha) * sqrt((n + m) / (n m)) with c(alpha) = sqrt(-ln(alpha / 2) / 2).
KsResult ks_two_sample(std::vector<double> a, std::vector<double> b, double alpha);

// Standard deviation of an empirical rate over `trials` Bernoulli(p) draws.
double binomial_sigma(double p, std::size_t trials);

double mean(std::span<const double> xs);
double variance(std::span<const double> xs);  // unbiased

}  // namespace ofs::stats
