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

#include "ofs/lattice/trapdoor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>

#include "ofs/error.hpp"
#include "ofs/lattice/gaussian.hpp"

namespace ofs::lattice {

namespace {

// Basis [[I + Rbar W, Rbar S_G], [W, S_G]] of the kernel lattice of A, where
// G W = -Abar mod q and S_G = I_n (x) S_k with S_k the kernel basis of
// g = (1, 2, ..., 2^(k-1)): columns 2 e_i - e_(i+1) and 2 e_(k-1).
std::shared_ptr<const ShortBasis> build_basis(const ResidueMatrix& a, const IntMatrix& rbar,
                                              std::uint32_t n, std::uint32_t log_q, std::uint32_t q) {
  const std::size_t mbar = rbar.rows();
  const std::size_t nk = rbar.cols();
  const std::size_t m = mbar + nk;
  auto basis = std::make_shared<ShortBasis>();
  basis->columns.reserve(m);

  // Top block of each column is Rbar applied to the bottom block, plus e_j for the first mbar.
  auto assemble = [&](const IntVector& bottom, std::size_t unit) {
    IntVector col(m, 0);
    for (std::size_t r = 0; r < mbar; ++r) {
      std::int64_t acc = r == unit ? 1 : 0;
      for (std::size_t t = 0; t < nk; ++t) acc += rbar(r, t) * bottom[t];
      col[r] = acc;
    }
    for (std::size_t t = 0; t < nk; ++t) col[mbar + t] = bottom[t];
    return col;
  };

  for (std::size_t j = 0; j < mbar; ++j) {
    IntVector w(nk, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t v = (q - a(i, j)) % q;
      for (std::uint32_t l = 0; l < log_q; ++l) w[i * log_q + l] = (v >> l) & 1u;
    }
    basis->columns.push_back(assemble(w, j));
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t l = 0; l < log_q; ++l) {
      IntVector sg(nk, 0);
      sg[i * log_q + l] = 2;
      if (l + 1 < log_q) sg[i * log_q + l + 1] = -1;
      basis->columns.push_back(assemble(sg, mbar));  // mbar: no unit vector
    }
  }

  // Modified Gram-Schmidt in column order.
  basis->gs.resize(m);
  basis->gs_sqnorm.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> v(basis->columns[i].begin(), basis->columns[i].end());
    for (std::size_t j = 0; j < i; ++j) {
      double mu = 0.0;
      for (std::size_t t = 0; t < m; ++t) mu += v[t] * basis->gs[j][t];
      mu /= basis->gs_sqnorm[j];
      for (std::size_t t = 0; t < m; ++t) v[t] -= mu * basis->gs[j][t];
    }
    double sq = 0.0;
    for (double x : v) sq += x * x;
    basis->gs[i] = std::move(v);
    basis->gs_sqnorm[i] = sq;
  }
  return basis;
}

}  // namespace

double ShortBasis::max_gs_norm() const {
  return std::sqrt(*std::max_element(gs_sqnorm.begin(), gs_sqnorm.end()));
}

double ShortBasis::max_column_norm() const {
  double best = 0.0;
  for (const auto& c : columns) best = std::max(best, squared_norm(c));
  return std::sqrt(best);
}

double integer_smoothing_parameter() {
  static const double value =
      std::sqrt(std::log(2.0 * (1.0 + std::ldexp(1.0, 64))) / std::numbers::pi);
  return value;
}

LatticeTrapdoorKey::LatticeTrapdoorKey(const LatticeParams& params, ResidueMatrix a, IntMatrix rbar)
    : q_(params.q), log_q_(params.log_q()), n_(params.n), a_(std::move(a)), rbar_(std::move(rbar)) {
  if (a_.rows() != params.n || a_.cols() != params.m || rbar_.rows() != params.mbar() ||
      rbar_.cols() != static_cast<std::size_t>(params.n) * log_q_) {
    throw Error(ErrorCode::kShapeMismatch, "trapdoor shapes do not match parameters");
  }
  basis_ = build_basis(a_, rbar_, n_, log_q_, q_);
}

double LatticeTrapdoorKey::column_norm_bound() const {
  double frob = 0.0;
  for (std::int64_t v : rbar_.data()) frob += static_cast<double>(v * v);
  return 1.0 + (std::sqrt(frob) + 1.0) * std::sqrt(static_cast<double>(rbar_.cols()));
}

double LatticeTrapdoorKey::quality_threshold() const {
  return integer_smoothing_parameter() * basis_->max_gs_norm();
}

IntVector LatticeTrapdoorKey::particular_solution(const ResidueVector& y) const {
  const std::size_t mbar = rbar_.rows();
  const std::size_t nk = rbar_.cols();
  IntVector bits(nk, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t l = 0; l < log_q_; ++l) bits[i * log_q_ + l] = (y[i] >> l) & 1u;
  }
  // A [Rbar u; u] = G u = y.
  IntVector x(mbar + nk, 0);
  for (std::size_t r = 0; r < mbar; ++r) {
    std::int64_t acc = 0;
    for (std::size_t t = 0; t < nk; ++t) acc += rbar_(r, t) * bits[t];
    x[r] = acc;
  }
  std::copy(bits.begin(), bits.end(), x.begin() + static_cast<std::ptrdiff_t>(mbar));
  return x;
}

LatticeTrapdoorKey gen_trap(const LatticeParams& params, Rng& rng) {
  validate_params(params);
  const std::uint32_t n = params.n;
  const std::uint32_t log_q = params.log_q();
  const std::uint32_t q = params.q;
  const std::size_t mbar = params.mbar();
  const std::size_t nk = static_cast<std::size_t>(n) * log_q;

  ResidueMatrix abar(n, mbar);
  for (auto& v : abar.data()) v = static_cast<kernels::Residue>(rng.uniform(q));
  // Rbar entries: 0 with probability 1/2, +-1 with probability 1/4 each.
  IntMatrix rbar(mbar, nk);
  for (auto& v : rbar.data()) {
    const std::uint64_t r = rng.uniform(4);
    v = r < 2 ? 0 : (r == 2 ? 1 : -1);
  }

  const ResidueMatrix abar_rbar = kernels::matmul_mod_q(abar, rbar, q);
  ResidueMatrix a(n, params.m);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < mbar; ++j) a(i, j) = abar(i, j);
    for (std::size_t t = 0; t < nk; ++t) {
      const std::int64_t g = (t / log_q == i) ? (std::int64_t{1} << (t % log_q)) : 0;
      a(i, mbar + t) = kernels::reduce_mod(g - static_cast<std::int64_t>(abar_rbar(i, t)), q);
    }
  }
  return LatticeTrapdoorKey(params, std::move(a), std::move(rbar));
}

IntVector sample_lattice_gaussian(const ShortBasis& basis, double s, const std::vector<double>& center,
                                  Rng& rng) {
  const std::size_t m = basis.columns.size();
  std::vector<double> c = center;
  IntVector v(m, 0);
  for (std::size_t idx = m; idx-- > 0;) {
    const double sq = basis.gs_sqnorm[idx];
    double proj = 0.0;
    const auto& g = basis.gs[idx];
    for (std::size_t t = 0; t < m; ++t) proj += c[t] * g[t];
    proj /= sq;
    const std::int64_t z = gaussian_sample_1d(s / std::sqrt(sq), proj, rng);
    if (z == 0) continue;
    const auto& b = basis.columns[idx];
    for (std::size_t t = 0; t < m; ++t) {
      c[t] -= static_cast<double>(z * b[t]);
      v[t] += z * b[t];
    }
  }
  return v;
}

IntVector sample_preimage(const LatticeTrapdoorKey& trapdoor, const ResidueVector& y, double s,
                          Rng& rng) {
  if (y.size() != trapdoor.a().rows()) throw Error(ErrorCode::kShapeMismatch, "target has wrong length");
  if (s < trapdoor.quality_threshold()) {
    throw Error(ErrorCode::kQualityViolation,
                "s = " + std::to_string(s) + " below trapdoor threshold " +
                    std::to_string(trapdoor.quality_threshold()));
  }
  IntVector x0 = trapdoor.particular_solution(y);
  std::vector<double> center(x0.size());
  for (std::size_t i = 0; i < x0.size(); ++i) center[i] = -static_cast<double>(x0[i]);
  IntVector v = sample_lattice_gaussian(trapdoor.basis(), s, center, rng);
  for (std::size_t i = 0; i < x0.size(); ++i) x0[i] += v[i];
  assert(kernels::serial::matvec_mod_q(trapdoor.a(), x0, trapdoor.q()) == y);
  return x0;
}

}  // namespace ofs::lattice
