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

#include <gmpxx.h>

#include <cstdint>

// Closed forms from the semi-constant reduction, in floating point and in
// exact rationals. q_h is the number of hash queries.
namespace ofs::ro {

// delta* = 3 eps / (16 q_h^4), the maximiser of bound_lemma4 in delta.
// Throws DomainError unless eps in (0, 1] and q_h >= 1.
double optimal_delta(double eps, std::uint64_t q_h);
mpq_class optimal_delta_exact(const mpq_class& eps, std::uint64_t q_h);

// delta eps - (8/3) q_h^4 delta^2.
double bound_lemma4(double eps, double delta, std::uint64_t q_h);
mpq_class bound_lemma4_exact(const mpq_class& eps, const mpq_class& delta, std::uint64_t q_h);

// (8/3) q^4 delta^2, the distinguishing bound between uniform and SC_delta oracles.
double sc_distinguishing_bound(std::uint64_t q, double delta);

// 3 eps^2 / (16 q_h^4).
double headline_bound(double eps, std::uint64_t q_h);
mpq_class headline_bound_exact(const mpq_class& eps, std::uint64_t q_h);

}  // namespace ofs::ro
