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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "ofs/error.hpp"
#include "ofs/qstate/lemmas.hpp"
#include "ofs/qstate/statevector.hpp"
#include "ofs/qstate/text_format.hpp"
#include "ofs/stats.hpp"

namespace ofs::qstate {
namespace {

using C = std::complex<double>;
using Dense = std::vector<std::vector<C>>;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kIoError;
}

// Full 2^n x 2^n matrix of a gate, built column by column from basis states
// without going through the statevector kernels.
Dense dense_gate(const Gate& g, unsigned n) {
  const std::size_t dim = std::size_t{1} << n;
  Dense u(dim, std::vector<C>(dim, 0.0));
  const double r = 1.0 / std::sqrt(2.0);
  for (std::size_t col = 0; col < dim; ++col) {
    const bool bit = (col >> g.target) & 1;
    const std::size_t flipped = col ^ (std::size_t{1} << g.target);
    switch (g.kind) {
      case GateKind::kH:
        u[col & ~(std::size_t{1} << g.target)][col] += r;
        u[col | (std::size_t{1} << g.target)][col] += bit ? -r : r;
        break;
      case GateKind::kS: u[col][col] = bit ? C(0, 1) : C(1, 0); break;
      case GateKind::kT: u[col][col] = bit ? std::polar(1.0, M_PI / 4) : C(1, 0); break;
      case GateKind::kX: u[flipped][col] = 1; break;
      case GateKind::kZ: u[col][col] = bit ? -1 : 1; break;
      case GateKind::kCX:
      case GateKind::kMCX: {
        bool on = true;
        for (unsigned c : g.controls) on = on && ((col >> c) & 1);
        u[on ? flipped : col][col] = 1;
        break;
      }
    }
  }
  return u;
}

std::vector<C> dense_apply(const Dense& u, const std::vector<C>& v) {
  std::vector<C> out(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += u[i][j] * v[j];
  }
  return out;
}

TEST(Registers, Limits) {
  EXPECT_NO_THROW(check_registers({8, 4, 4}));
  EXPECT_EQ(code_of([] { check_registers({9, 4, 4}); }), ErrorCode::kUnsupportedParameters);
  EXPECT_EQ(code_of([] { check_registers({0, 1, 0}); }), ErrorCode::kUnsupportedParameters);
  EXPECT_EQ(code_of([] { check_registers({1, 0, 0}); }), ErrorCode::kUnsupportedParameters);
  EXPECT_EQ(code_of([] { StateVector s({10, 7, 0}); }), ErrorCode::kUnsupportedParameters);
}

TEST(StateVector, Constructors) {
  const Registers regs{3, 1, 1};
  const StateVector z(regs);
  EXPECT_EQ(z.dimension(), 32u);
  EXPECT_EQ(z[0], Amplitude(1.0));
  const auto u = StateVector::uniform_input(regs);
  for (std::size_t i = 0; i < 32; ++i) EXPECT_NEAR(std::abs(u[i]), i < 8 ? 1 / std::sqrt(8.0) : 0.0, 1e-15);
  Rng rng(1);
  EXPECT_NEAR(StateVector::random(regs, rng).norm(), 1.0, 1e-12);
  EXPECT_EQ(code_of([&] { StateVector::from_amplitudes(regs, std::vector<Amplitude>(32, 1.0)); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { StateVector::from_amplitudes(regs, std::vector<Amplitude>(16, 0.25)); }),
            ErrorCode::kShapeMismatch);
  EXPECT_DOUBLE_EQ(StateVector::basis(regs, 5).probability_one(2), 1.0);
  EXPECT_DOUBLE_EQ(StateVector::basis(regs, 5).probability_one(1), 0.0);
}

TEST(Oracle, MapsBasisStates) {
  const Registers regs{3, 2, 1};
  Rng rng(2);
  const auto table = OracleTable::random(3, 2, rng);
  for (std::uint64_t idx = 0; idx < 64; ++idx) {
    auto s = StateVector::basis(regs, idx);
    apply_oracle(s, table);
    const std::uint64_t x = idx & 7, y = (idx >> 3) & 3, w = idx >> 5;
    const std::uint64_t expect = x | ((y ^ table.values[x]) << 3) | (w << 5);
    EXPECT_EQ(s[expect], Amplitude(1.0)) << idx;
  }
}

TEST(Oracle, UniformInputAmplitudes) {
  const Registers regs{3, 2, 0};
  Rng rng(3);
  const auto table = OracleTable::random(3, 2, rng);
  auto s = StateVector::uniform_input(regs);
  apply_oracle(s, table);
  for (std::uint64_t x = 0; x < 8; ++x) {
    for (std::uint64_t y = 0; y < 4; ++y) {
      EXPECT_NEAR(std::abs(s[x | (y << 3)]), table.values[x] == y ? 1 / std::sqrt(8.0) : 0.0, 1e-15);
    }
  }
}

TEST(Oracle, IsAnInvolution) {
  const Registers regs{4, 2, 2};
  Rng rng(4);
  const auto table = OracleTable::random(4, 2, rng);
  const auto s0 = StateVector::random(regs, rng);
  auto s = s0;
  apply_oracle(s, table);
  apply_oracle(s, table);
  EXPECT_LT(euclidean_distance(s, s0), 1e-14);
  EXPECT_EQ(code_of([&] { apply_oracle(s, OracleTable::constant(3, 2, 0)); }), ErrorCode::kShapeMismatch);
}

TEST(QueryMagnitude, SumsToOne) {
  Rng rng(5);
  const auto s = StateVector::random({3, 2, 2}, rng);
  const auto mags = query_magnitudes(s);
  ASSERT_EQ(mags.size(), 8u);
  EXPECT_NEAR(std::accumulate(mags.begin(), mags.end(), 0.0), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(query_magnitude(s, 3), mags[3]);
  EXPECT_NEAR(query_magnitude(StateVector::uniform_input({3, 1, 0}), 5), 0.125, 1e-15);
}

TEST(Gates, MatchDenseReference) {
  Rng rng(6);
  const Registers regs{2, 1, 1};
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_circuit(4, 6, rng);
    auto s = StateVector::random(regs, rng);
    std::vector<C> v(s.amplitudes().begin(), s.amplitudes().end());
    for (const auto& g : c) v = dense_apply(dense_gate(g, 4), v);
    apply_circuit(s, c);
    for (std::size_t i = 0; i < v.size(); ++i) ASSERT_LT(std::abs(v[i] - s[i]), 1e-12);
  }
  const Gate mcx{GateKind::kMCX, 3, {0, 1, 2}};
  auto s = StateVector::basis(regs, 0b0111);
  apply_gate(s, mcx);
  EXPECT_EQ(s[0b1111], Amplitude(1.0));
  auto h = StateVector(regs);
  apply_gate(h, {GateKind::kH, 0, {}});
  EXPECT_NEAR(h[1].real(), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_EQ(code_of([&] { apply_gate(h, {GateKind::kX, 4, {}}); }), ErrorCode::kShapeMismatch);
  EXPECT_EQ(code_of([&] { apply_gate(h, {GateKind::kCX, 1, {1}}); }), ErrorCode::kShapeMismatch);
}

TEST(Gates, NamesRoundTrip) {
  for (auto k : {GateKind::kH, GateKind::kS, GateKind::kT, GateKind::kX, GateKind::kZ, GateKind::kCX,
                 GateKind::kMCX}) {
    EXPECT_EQ(gate_from_name(gate_name(k)), k);
  }
  EXPECT_FALSE(gate_from_name("Y"));
}

TEST(Gates, RandomCircuitsAreUnitary) {
  Rng rng(7);
  EXPECT_TRUE(circuit_is_unitary(random_circuit(4, 10, rng), 4));
  EXPECT_TRUE(circuit_is_unitary(random_circuit(8, 5, rng), 8));
  EXPECT_TRUE(circuit_is_unitary(random_circuit(12, 5, rng), 12));
  EXPECT_TRUE(circuit_is_unitary({}, 3));
}

TEST(TotalVariation, Extremes) {
  const Registers regs{1, 1, 0};
  const auto a = StateVector::basis(regs, 0);
  const auto b = StateVector::basis(regs, 1);
  const auto same = tv_after_measurement(a, a);
  EXPECT_EQ(same.euclid, 0.0);
  EXPECT_EQ(same.tv, 0.0);
  const auto far = tv_after_measurement(a, b);
  EXPECT_NEAR(far.euclid, std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(far.tv, 1.0, 1e-15);
  EXPECT_TRUE(far.holds());
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    EXPECT_TRUE(tv_after_measurement(StateVector::random({3, 2, 1}, rng), StateVector::random({3, 2, 1}, rng)).holds());
  }
}

TEST(Bbbv, ClosedForm) {
  const auto exp = closed_form_experiment();
  auto modified = OracleTable::constant(3, 1, 0);
  modified.values[5] = 1;
  const auto r = run_bbbv_experiment(exp, OracleTable::constant(3, 1, 0), modified);
  EXPECT_NEAR(r.eps_sum, 0.125, 1e-12);
  EXPECT_NEAR(r.distance, 0.5, 1e-12);
  EXPECT_NEAR(r.ratio, std::sqrt(2.0), 1e-12);
}

TEST(Bbbv, EmptySetGivesZeroDistance) {
  Rng rng(9);
  for (int i = 0; i < 20; ++i) {
    auto exp = random_experiment(rng);
    exp.modified_set.clear();
    const auto t = OracleTable::random(exp.regs.input, exp.regs.answer, rng);
    const auto r = run_bbbv_experiment(exp, t, t);
    EXPECT_EQ(r.eps_sum, 0.0);
    EXPECT_EQ(r.distance, 0.0);
    EXPECT_EQ(r.ratio, 0.0);
  }
}

TEST(Bbbv, RandomExperimentsStayBelowBound) {
  Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const auto exp = random_experiment(rng);
    ASSERT_FALSE(exp.modified_set.empty());
    const auto t = OracleTable::random(exp.regs.input, exp.regs.answer, rng);
    const auto m = draw_modified_table(exp, t, rng);
    const auto r = run_bbbv_experiment(exp, t, m);
    EXPECT_LE(r.distance, 2 * std::sqrt(exp.step_count * r.eps_sum) + 1e-12);
    EXPECT_LE(r.ratio, 2.0 + 1e-12);
  }
}

TEST(Bbbv, RejectsStrayDifferences) {
  const auto exp = closed_form_experiment();
  auto modified = OracleTable::constant(3, 1, 0);
  modified.values[4] = 1;
  EXPECT_EQ(code_of([&] { run_bbbv_experiment(exp, OracleTable::constant(3, 1, 0), modified); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { run_bbbv_experiment(exp, OracleTable::constant(2, 1, 0), modified); }),
            ErrorCode::kShapeMismatch);
}

TEST(SemiConstant, Tables) {
  Rng rng(11);
  const auto all = sample_sc_table(4, 2, 1.0, rng);
  for (auto v : all.values) EXPECT_EQ(v, all.values[0]);
  EXPECT_EQ(sample_sc_table(4, 2, 0.0, rng).values.size(), 16u);
  EXPECT_DOUBLE_EQ(sc_advantage_bound(2, 0.1, 100), 8.0 / 3 * 16 * 0.01 + 4 * std::sqrt(std::log(40.0) / 100));
}

TEST(SemiConstant, CollisionDistinguisher) {
  Rng rng(12);
  const auto family = distinguisher_family(2, rng);
  ASSERT_EQ(family.size(), 5u);
  EXPECT_EQ(family[0].name, "collision");
  const auto& exp = family[0].exp;
  // Collision accepts when O(0) = O(1): 1/4 on a uniform 2-bit oracle, 1 on a constant one.
  EXPECT_NEAR(accept_probability(exp, OracleTable::constant(4, 2, 3)), 1.0, 1e-12);
  auto t = OracleTable::constant(4, 2, 0);
  t.values[1] = 2;
  EXPECT_NEAR(accept_probability(exp, t), 0.0, 1e-12);

  const auto one = run_sc_distinguisher(exp, 1.0, 2000, rng);
  EXPECT_NEAR(one.p_sc, 1.0, 1e-9);
  EXPECT_NEAR(one.advantage, 0.75, 3 * stats::binomial_sigma(0.25, 2000));
  const auto none = run_sc_distinguisher(exp, 0.0, 2000, rng);
  EXPECT_LT(none.advantage, 4 * std::sqrt(0.25 * 0.75 / 2000) * std::sqrt(2.0));
  EXPECT_TRUE(none.holds());
}

TEST(SemiConstant, AcceptNeedsQubit) {
  EXPECT_EQ(code_of([] { accept_probability(closed_form_experiment(), OracleTable::constant(3, 1, 0)); }),
            ErrorCode::kDomainError);
}

TEST(TextFormat, RoundTrip) {
  Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    ExperimentFile f;
    f.exp = random_experiment(rng);
    if (i % 2) f.exp.accept_qubit = 0;
    f.table = OracleTable::random(f.exp.regs.input, f.exp.regs.answer, rng);
    f.modified = draw_modified_table(f.exp, *f.table, rng);
    const auto g = parse_experiment(format_experiment(f));
    EXPECT_EQ(g.exp.regs, f.exp.regs);
    EXPECT_EQ(g.exp.step_count, f.exp.step_count);
    EXPECT_EQ(g.exp.unitaries, f.exp.unitaries);
    EXPECT_EQ(g.exp.modified_set, f.exp.modified_set);
    EXPECT_EQ(g.exp.accept_qubit, f.exp.accept_qubit);
    EXPECT_EQ(g.table, f.table);
    EXPECT_EQ(g.modified, f.modified);
  }
}

TEST(TextFormat, ParsesByHand) {
  const auto f = parse_experiment(
      "# one query\n"
      "qubits 3 1 0\n"
      "steps 1\n"
      "gate 0 H 0\ngate 0 H 1\ngate 0 H 2\n"
      "table 0 0 0 0 0 0 0 0\n"
      "modified 0 0 0 0 0 1 0 0\n"
      "modify 0 5\n");
  ASSERT_TRUE(f.table && f.modified);
  const auto r = run_bbbv_experiment(f.exp, *f.table, *f.modified);
  EXPECT_NEAR(r.distance, 0.5, 1e-12);
}

TEST(TextFormat, ReportsLines) {
  const char* bad[] = {
      "qubits 3 1\nsteps 1\n",
      "qubits 3 1 0\nsteps 1\ngate 0 Y 0\n",
      "qubits 3 1 0\nsteps 1\ngate 2 H 0\n",
      "qubits 3 1 0\nsteps 1\nfrobnicate\n",
      "qubits 3 1 0\nsteps 1\ntable zz\n",
      "steps 1\n",
  };
  for (const char* text : bad) {
    try {
      parse_experiment(text);
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kDecodeError) << text;
    }
  }
  try {
    parse_experiment("qubits 3 1 0\nsteps 1\n\ngate 0 H 9\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

}  // namespace
}  // namespace ofs::qstate
