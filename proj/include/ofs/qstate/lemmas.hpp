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
#include <string>
#include <vector>

#include "ofs/qstate/statevector.hpp"

// The three query-model facts the security proof leans on, as measurements.
namespace ofs::qstate {

// Measurement in the computational basis.
struct TvResult {
  double euclid = 0.0;
  double tv = 0.0;  // (1/2) sum |p_i - q_i|

  bool holds() const { return tv <= 4.0 * euclid + 1e-12; }
};

TvResult tv_after_measurement(const StateVector& a, const StateVector& b);

struct BbbvResult {
  double eps_sum = 0.0;   // total query magnitude on the modified set, unmodified run
  double distance = 0.0;  // between the final states
  double ratio = 0.0;     // distance / sqrt(step_count * eps_sum); 0 when both vanish
};

// O'_t(rho) = modified_table[rho] if (t, rho) is in the modified set, else
// table[rho]. Throws ShapeMismatch, or DomainError if the two tables differ at
// an input that never appears in the modified set.
BbbvResult run_bbbv_experiment(const QueryExperiment& exp, const OracleTable& table,
                               const OracleTable& modified_table);

// table with every input named in the modified set answered by one fresh
// uniform string R.
OracleTable draw_modified_table(const QueryExperiment& exp, const OracleTable& table, Rng& rng);

// a = 3, b = 1: one query on the uniform superposition, one modified point
// whose answer flips. eps_sum = 1/8 and distance = 1/2.
QueryExperiment closed_form_experiment();

// a <= max_input, T <= max_steps, b in {1, 2}, w in {0, 1}, random circuits
// of depth at most 20 and a nonempty random modified set.
QueryExperiment random_experiment(Rng& rng, unsigned max_input = 4, unsigned max_steps = 4);

// P[accept qubit reads 1] with O answering every query. DomainError if the
// experiment has no accept qubit.
double accept_probability(const QueryExperiment& exp, const OracleTable& table);

// Each input independently joins the constant set with probability delta;
// members answer one shared uniform y, the rest answer uniformly.
OracleTable sample_sc_table(unsigned input_bits, unsigned answer_bits, double delta, Rng& rng);

struct ScResult {
  double p_uniform = 0.0;
  double p_sc = 0.0;
  double advantage = 0.0;
  double bound = 0.0;

  bool holds() const { return advantage <= bound; }
};

// (8/3) q^4 delta^2 + 4 sqrt(ln 40 / trials)
double sc_advantage_bound(unsigned q, double delta, std::size_t trials);

// Each trial draws one uniform oracle and one SC_delta oracle and averages
// the exact acceptance probabilities; q = exp.step_count.
ScResult run_sc_distinguisher(const QueryExperiment& exp, double delta, std::size_t trials, Rng& rng);

struct Distinguisher {
  std::string name;
  QueryExperiment exp;
};

// Five q-query distinguishers on a = 4, b = 2, w = 1 (accept on qubit 6):
// collision (XOR of the answers at inputs 0..q-1 is zero), phase kickback,
// Grover-style diffusion, and two random circuits.
std::vector<Distinguisher> distinguisher_family(unsigned q, Rng& rng);

}  // namespace ofs::qstate
