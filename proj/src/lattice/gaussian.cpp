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

#include "ofs/lattice/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ofs::lattice {

std::int64_t discrete_laplace(double t, Rng& rng) {
  for (;;) {
    // P(k >= j) = exp(-j / t)
    const auto k = static_cast<std::int64_t>(std::floor(-t * std::log(rng.uniform01_open_low())));
    const bool negative = rng.bit();
    if (negative && k == 0) continue;  // zero would otherwise be drawn twice as often
    return negative ? -k : k;
  }
}

std::int64_t gaussian_sample_1d(double s, double center, Rng& rng) {
  if (!(s > 0.0)) throw std::invalid_argument("gaussian_sample_1d: s must be positive");
  const double sigma2 = s * s / (2.0 * std::numbers::pi);
  const double base = std::floor(center);
  const double frac = center - base;
  const double t = std::floor(std::sqrt(sigma2)) + 1.0;
  // max over y of -(y - frac)^2 / (2 sigma^2) + |y| / t, attained at y = frac + sigma^2 / t.
  const double log_bound = sigma2 / (2.0 * t * t) + frac / t;
  for (;;) {
    const std::int64_t y = discrete_laplace(t, rng);
    const double dy = static_cast<double>(y) - frac;
    const double log_accept =
        -dy * dy / (2.0 * sigma2) + std::abs(static_cast<double>(y)) / t - log_bound;
    if (rng.uniform01() < std::exp(log_accept)) return static_cast<std::int64_t>(base) + y;
  }
}

std::vector<std::int64_t> gaussian_vector(std::size_t m, double s, Rng& rng) {
  std::vector<std::int64_t> v(m);
  for (auto& x : v) x = gaussian_sample_1d(s, 0.0, rng);
  return v;
}

double squared_norm(const std::vector<std::int64_t>& v) {
  double acc = 0.0;
  for (std::int64_t x : v) acc += static_cast<double>(x) * static_cast<double>(x);
  return acc;
}

}  // namespace ofs::lattice
