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
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ofs/kernels/statevec.hpp"
#include "ofs/rng.hpp"

// Exact statevector simulation of oracle-query algorithms on a few qubits.
// Layout: input register on the low qubits, then the answer register, then
// the work register.
namespace ofs::qstate {

using kernels::Amplitude;

constexpr unsigned kMaxQubits = 16;

struct Registers {
  unsigned input = 0;
  unsigned answer = 0;
  unsigned work = 0;

  unsigned total() const { return input + answer + work; }
  friend bool operator==(const Registers&, const Registers&) = default;
};

// Throws UnsupportedParameters if the total exceeds kMaxQubits or the input
// or answer register is empty.
void check_registers(const Registers& r);

class StateVector {
 public:
  explicit StateVector(Registers regs);  // |0...0>

  static StateVector basis(Registers regs, std::uint64_t index);
  // Uniform superposition over the input register, answer and work zero.
  static StateVector uniform_input(Registers regs);
  // Normalised vector of i.i.d. complex Gaussians.
  static StateVector random(Registers regs, Rng& rng);
  static StateVector from_amplitudes(Registers regs, std::vector<Amplitude> amps);

  const Registers& registers() const noexcept { return regs_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<Amplitude> amplitudes() noexcept { return amps_; }
  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;
  // Probability that measuring `qubit` gives 1.
  double probability_one(unsigned qubit) const;

 private:
  Registers regs_;
  std::vector<Amplitude> amps_;
};

double euclidean_distance(const StateVector& a, const StateVector& b);

// O : {0,1}^a -> {0,1}^b as a dense array.
struct OracleTable {
  unsigned input_bits = 0;
  unsigned answer_bits = 0;
  std::vector<std::uint32_t> values;

  static OracleTable random(unsigned input_bits, unsigned answer_bits, Rng& rng);
  static OracleTable constant(unsigned input_bits, unsigned answer_bits, std::uint32_t value);
  friend bool operator==(const OracleTable&, const OracleTable&) = default;
};

// |x>|y>|w> -> |x>|y xor O(x)>|w>. Throws ShapeMismatch.
void apply_oracle(StateVector& state, const OracleTable& table);

// Squared magnitude of input value rho: sum of |amp|^2 over basis states
// whose input register holds rho.
double query_magnitude(const StateVector& state, std::uint32_t rho);
std::vector<double> query_magnitudes(const StateVector& state);

enum class GateKind { kH, kS, kT, kX, kZ, kCX, kMCX };

struct Gate {
  GateKind kind = GateKind::kH;
  unsigned target = 0;
  std::vector<unsigned> controls;  // one for CX, any number for MCX

  friend bool operator==(const Gate&, const Gate&) = default;
};

using Circuit = std::vector<Gate>;

std::string gate_name(GateKind kind);
std::optional<GateKind> gate_from_name(const std::string& name);
kernels::Gate2x2 gate_matrix(GateKind kind);  // single-qubit kinds only

// Throws ShapeMismatch if a gate touches a qubit outside the state.
void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

// `depth` layers; each layer visits the qubits in random order and places a
// CX on a pair or one of H, S, T, X, Z on a single qubit.
Circuit random_circuit(unsigned qubits, unsigned depth, Rng& rng);

// Up to 8 qubits: builds the full matrix and checks U^dagger U = I.
// Beyond that: checks each gate's 2x2 block (permutation gates are exact).
bool circuit_is_unitary(const Circuit& circuit, unsigned qubits, double tolerance = 1e-9);

// U_0, O, U_1, O, ..., O, U_T with T = step_count queries. modified_set holds
// (step, input) pairs where the modified oracle differs.
struct QueryExperiment {
  Registers regs;
  unsigned step_count = 1;
  std::vector<Circuit> unitaries;  // step_count + 1 entries
  std::set<std::pair<unsigned, std::uint32_t>> modified_set;
  std::optional<unsigned> accept_qubit;
};

// Throws ShapeMismatch or DomainError (non-unitary circuit, bad step count).
void validate_experiment(const QueryExperiment& exp);

// Final state with oracle O_t at query t given by `oracle_at(t)`.
template <class OracleAt>
StateVector run_experiment(const QueryExperiment& exp, OracleAt&& oracle_at,
                           std::vector<StateVector>* before_query = nullptr) {
  StateVector state(exp.regs);
  for (unsigned t = 0; t < exp.step_count; ++t) {
    apply_circuit(state, exp.unitaries[t]);
    if (before_query) before_query->push_back(state);
    apply_oracle(state, oracle_at(t));
  }
  apply_circuit(state, exp.unitaries[exp.step_count]);
  return state;
}

}  // namespace ofs::qstate
