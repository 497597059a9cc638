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

#include "ofs/ro/formulas.hpp"

#include <algorithm>
#include <cmath>

#include "ofs/error.hpp"

namespace ofs::ro {

namespace {

void check_domain(bool eps_ok, std::uint64_t q_h) {
  if (!eps_ok) throw Error(ErrorCode::kDomainError, "eps must lie in (0, 1]");
  if (q_h < 1) throw Error(ErrorCode::kDomainError, "q_h must be at least 1");
}

mpq_class pow4(std::uint64_t q) {
  mpz_class z(static_cast<unsigned long>(q));
  return mpq_class(z * z * z * z);
}

}  // namespace

double optimal_delta(double eps, std::uint64_t q_h) {
  check_domain(eps > 0.0 && eps <= 1.0, q_h);
  const double q4 = std::pow(static_cast<double>(q_h), 4);
  return std::min(1.0, 3.0 * eps / (16.0 * q4));
}

mpq_class optimal_delta_exact(const mpq_class& eps, std::uint64_t q_h) {
  check_domain(eps > 0 && eps <= 1, q_h);
  mpq_class d = mpq_class(3) * eps / (mpq_class(16) * pow4(q_h));
  d.canonicalize();
  return d > 1 ? mpq_class(1) : d;
}

double bound_lemma4(double eps, double delta, std::uint64_t q_h) {
  const double q4 = std::pow(static_cast<double>(q_h), 4);
  return delta * eps - 8.0 / 3.0 * q4 * delta * delta;
}

mpq_class bound_lemma4_exact(const mpq_class& eps, const mpq_class& delta, std::uint64_t q_h) {
  mpq_class b = delta * eps - mpq_class(8, 3) * pow4(q_h) * delta * delta;
  b.canonicalize();
  return b;
}

double sc_distinguishing_bound(std::uint64_t q, double delta) {
  return 8.0 / 3.0 * std::pow(static_cast<double>(q), 4) * delta * delta;
}

double headline_bound(double eps, std::uint64_t q_h) {
  return 3.0 * eps * eps / (16.0 * std::pow(static_cast<double>(q_h), 4));
}

mpq_class headline_bound_exact(const mpq_class& eps, std::uint64_t q_h) {
  mpq_class b = mpq_class(3) * eps * eps / (mpq_class(16) * pow4(q_h));
  b.canonicalize();
  return b;
}

}  // namespace ofs::ro
