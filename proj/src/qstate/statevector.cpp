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

#include "ofs/qstate/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ofs/error.hpp"

namespace ofs::qstate {

void check_registers(const Registers& r) {
  if (r.input == 0 || r.answer == 0) {
    throw Error(ErrorCode::kUnsupportedParameters, "input and answer registers need at least one qubit");
  }
  if (r.answer > 32) throw Error(ErrorCode::kUnsupportedParameters, "answer register wider than 32 qubits");
  if (r.total() > kMaxQubits) {
    throw Error(ErrorCode::kUnsupportedParameters, std::to_string(r.total()) + " qubits requested, limit is " +
                                                       std::to_string(kMaxQubits));
  }
}

StateVector::StateVector(Registers regs) : regs_(regs) {
  check_registers(regs_);
  amps_.assign(std::size_t{1} << regs_.total(), Amplitude{});
  amps_[0] = 1.0;
}

StateVector StateVector::basis(Registers regs, std::uint64_t index) {
  StateVector s(regs);
  if (index >= s.dimension()) throw Error(ErrorCode::kShapeMismatch, "basis index out of range");
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::uniform_input(Registers regs) {
  StateVector s(regs);
  const std::size_t n = std::size_t{1} << regs.input;
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t x = 0; x < n; ++x) s.amps_[x] = a;
  return s;
}

StateVector StateVector::random(Registers regs, Rng& rng) {
  StateVector s(regs);
  for (auto& a : s.amps_) a = Amplitude(rng.standard_normal(), rng.standard_normal());
  const double n = s.norm();
  for (auto& a : s.amps_) a /= n;
  return s;
}

StateVector StateVector::from_amplitudes(Registers regs, std::vector<Amplitude> amps) {
  StateVector s(regs);
  if (amps.size() != s.dimension()) throw Error(ErrorCode::kShapeMismatch, "amplitude count does not match registers");
  s.amps_ = std::move(amps);
  if (std::abs(s.norm() - 1.0) > 1e-10) throw Error(ErrorCode::kDomainError, "state is not normalised");
  return s;
}

double StateVector::norm() const { return std::sqrt(kernels::norm_squared(amps_)); }

double StateVector::probability_one(unsigned qubit) const {
  if (qubit >= regs_.total()) throw Error(ErrorCode::kShapeMismatch, "qubit index out of range");
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) p += std::norm(amps_[i]);
  }
  return p;
}

double euclidean_distance(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::kShapeMismatch, "states differ in dimension");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) acc += std::norm(a[i] - b[i]);
  return std::sqrt(acc);
}

OracleTable OracleTable::random(unsigned input_bits, unsigned answer_bits, Rng& rng) {
  OracleTable t{input_bits, answer_bits, std::vector<std::uint32_t>(std::size_t{1} << input_bits)};
  for (auto& v : t.values) v = static_cast<std::uint32_t>(rng.uniform(std::uint64_t{1} << answer_bits));
  return t;
}

OracleTable OracleTable::constant(unsigned input_bits, unsigned answer_bits, std::uint32_t value) {
  return {input_bits, answer_bits, std::vector<std::uint32_t>(std::size_t{1} << input_bits, value)};
}

void apply_oracle(StateVector& state, const OracleTable& table) {
  const Registers& r = state.registers();
  if (table.input_bits != r.input || table.answer_bits != r.answer ||
      table.values.size() != (std::size_t{1} << r.input)) {
    throw Error(ErrorCode::kShapeMismatch, "oracle table does not match the register sizes");
  }
  kernels::apply_xor_oracle(state.amplitudes(), r.input, r.answer, table.values);
}

double query_magnitude(const StateVector& state, std::uint32_t rho) {
  const unsigned a = state.registers().input;
  if (rho >= (std::uint64_t{1} << a)) throw Error(ErrorCode::kDomainError, "input value out of range");
  const std::uint64_t mask = (std::uint64_t{1} << a) - 1;
  double p = 0.0;
  for (std::size_t i = rho; i < state.dimension(); i += mask + 1) p += std::norm(state[i]);
  return p;
}

std::vector<double> query_magnitudes(const StateVector& state) {
  const std::uint64_t n = std::uint64_t{1} << state.registers().input;
  std::vector<double> out(n, 0.0);
  for (std::size_t i = 0; i < state.dimension(); ++i) out[i & (n - 1)] += std::norm(state[i]);
  return out;
}

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::kH: return "H";
    case GateKind::kS: return "S";
    case GateKind::kT: return "T";
    case GateKind::kX: return "X";
    case GateKind::kZ: return "Z";
    case GateKind::kCX: return "CX";
    case GateKind::kMCX: return "MCX";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(const std::string& name) {
  for (GateKind k : {GateKind::kH, GateKind::kS, GateKind::kT, GateKind::kX, GateKind::kZ, GateKind::kCX,
                     GateKind::kMCX}) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

kernels::Gate2x2 gate_matrix(GateKind kind) {
  const double h = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::kH: return {h, h, h, -h};
    case GateKind::kS: return {1.0, 0.0, 0.0, Amplitude(0.0, 1.0)};
    case GateKind::kT: return {1.0, 0.0, 0.0, std::polar(1.0, M_PI / 4)};
    case GateKind::kX: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::kZ: return {1.0, 0.0, 0.0, -1.0};
    default: throw Error(ErrorCode::kDomainError, gate_name(kind) + " is not a single-qubit gate");
  }
}

namespace {

void check_gate(const Gate& g, unsigned qubits) {
  if (g.target >= qubits) throw Error(ErrorCode::kShapeMismatch, "gate target outside the state");
  for (unsigned c : g.controls) {
    if (c >= qubits) throw Error(ErrorCode::kShapeMismatch, "gate control outside the state");
    if (c == g.target) throw Error(ErrorCode::kShapeMismatch, "gate control equals its target");
  }
  const bool controlled = g.kind == GateKind::kCX || g.kind == GateKind::kMCX;
  if (!controlled && !g.controls.empty()) {
    throw Error(ErrorCode::kShapeMismatch, gate_name(g.kind) + " takes no controls");
  }
  if (g.kind == GateKind::kCX && g.controls.size() != 1) {
    throw Error(ErrorCode::kShapeMismatch, "CX takes exactly one control");
  }
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate) {
  check_gate(gate, state.registers().total());
  if (gate.kind == GateKind::kCX || gate.kind == GateKind::kMCX) {
    std::uint64_t mask = 0;
    for (unsigned c : gate.controls) mask |= std::uint64_t{1} << c;
    kernels::apply_mcx(state.amplitudes(), mask, gate.target);
  } else {
    kernels::apply_1q(state.amplitudes(), gate.target, gate_matrix(gate.kind));
  }
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  for (const Gate& g : circuit) apply_gate(state, g);
}

Circuit random_circuit(unsigned qubits, unsigned depth, Rng& rng) {
  static constexpr GateKind kSingle[] = {GateKind::kH, GateKind::kS, GateKind::kT, GateKind::kX, GateKind::kZ};
  Circuit c;
  std::vector<unsigned> order(qubits);
  for (unsigned layer = 0; layer < depth; ++layer) {
    std::iota(order.begin(), order.end(), 0u);
    for (unsigned i = qubits; i > 1; --i) std::swap(order[i - 1], order[rng.uniform(i)]);
    for (unsigned i = 0; i < qubits; ++i) {
      if (i + 1 < qubits && rng.uniform(10) < 3) {
        c.push_back({GateKind::kCX, order[i + 1], {order[i]}});
        ++i;
      } else {
        c.push_back({kSingle[rng.uniform(5)], order[i], {}});
      }
    }
  }
  return c;
}

bool circuit_is_unitary(const Circuit& circuit, unsigned qubits, double tolerance) {
  for (const Gate& g : circuit) check_gate(g, qubits);
  if (qubits > 8) {
    for (const Gate& g : circuit) {
      if (g.kind == GateKind::kCX || g.kind == GateKind::kMCX) continue;
      const auto m = gate_matrix(g.kind);
      const Amplitude d0 = std::norm(m[0]) + std::norm(m[2]) - 1.0;
      const Amplitude d1 = std::norm(m[1]) + std::norm(m[3]) - 1.0;
      const Amplitude off = std::conj(m[0]) * m[1] + std::conj(m[2]) * m[3];
      if (std::abs(d0) > tolerance || std::abs(d1) > tolerance || std::abs(off) > tolerance) return false;
    }
    return true;
  }
  // Columns of U are the images of the basis states; run them on a scratch
  // buffer without the register bookkeeping.
  const std::size_t dim = std::size_t{1} << qubits;
  std::vector<std::vector<Amplitude>> cols(dim, std::vector<Amplitude>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    auto& v = cols[j];
    v[j] = 1.0;
    for (const Gate& g : circuit) {
      if (g.kind == GateKind::kCX || g.kind == GateKind::kMCX) {
        std::uint64_t mask = 0;
        for (unsigned c : g.controls) mask |= std::uint64_t{1} << c;
        kernels::apply_mcx(v, mask, g.target);
      } else {
        kernels::apply_1q(v, g.target, gate_matrix(g.kind));
      }
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      Amplitude dot{};
      for (std::size_t k = 0; k < dim; ++k) dot += std::conj(cols[i][k]) * cols[j][k];
      if (std::abs(dot - (i == j ? 1.0 : 0.0)) > tolerance) return false;
    }
  }
  return true;
}

void validate_experiment(const QueryExperiment& exp) {
  check_registers(exp.regs);
  if (exp.step_count == 0) throw Error(ErrorCode::kDomainError, "step_count must be at least 1");
  if (exp.unitaries.size() != exp.step_count + 1) {
    throw Error(ErrorCode::kShapeMismatch, "expected step_count + 1 unitaries, got " +
                                               std::to_string(exp.unitaries.size()));
  }
  const unsigned n = exp.regs.total();
  for (const Circuit& c : exp.unitaries) {
    if (!circuit_is_unitary(c, n)) throw Error(ErrorCode::kDomainError, "circuit is not unitary");
  }
  for (const auto& [t, rho] : exp.modified_set) {
    if (t >= exp.step_count) throw Error(ErrorCode::kShapeMismatch, "modified step out of range");
    if (rho >= (std::uint64_t{1} << exp.regs.input)) {
      throw Error(ErrorCode::kShapeMismatch, "modified input out of range");
    }
  }
  if (exp.accept_qubit && *exp.accept_qubit >= n) {
    throw Error(ErrorCode::kShapeMismatch, "accept qubit outside the state");
  }
}

}  // namespace ofs::qstate
