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

#include <cstdint>
#include <vector>

#include "ofs/rng.hpp"

namespace ofs::lattice {

// Integer x with probability proportional to exp(-pi (x - center)^2 / s^2).
// Rejection from a discrete Laplace proposal centred at floor(center).
std::int64_t gaussian_sample_1d(double s, double center, Rng& rng);

// Two-sided geometric: P(y) proportional to exp(-|y| / t).
std::int64_t discrete_laplace(double t, Rng& rng);

// m independent draws from D_{Z, s}.
std::vector<std::int64_t> gaussian_vector(std::size_t m, double s, Rng& rng);

double squared_norm(const std::vector<std::int64_t>& v);

}  // namespace ofs::lattice
