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

#include "ofs/qstate/lemmas.hpp"

#include <cmath>

#include "ofs/error.hpp"
#include "ofs/kernels/trials.hpp"

namespace ofs::qstate {

TvResult tv_after_measurement(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorCode::kShapeMismatch, "states differ in dimension");
  TvResult r;
  double l1 = 0.0, d2 = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    l1 += std::abs(std::norm(a[i]) - std::norm(b[i]));
    d2 += std::norm(a[i] - b[i]);
  }
  r.euclid = std::sqrt(d2);
  r.tv = 0.5 * l1;
  return r;
}

BbbvResult run_bbbv_experiment(const QueryExperiment& exp, const OracleTable& table,
                               const OracleTable& modified_table) {
  validate_experiment(exp);
  if (!(table.input_bits == modified_table.input_bits && table.answer_bits == modified_table.answer_bits &&
        table.values.size() == modified_table.values.size())) {
    throw Error(ErrorCode::kShapeMismatch, "modified table has a different shape");
  }
  std::vector<bool> named(table.values.size(), false);
  for (const auto& [t, rho] : exp.modified_set) named[rho] = true;
  for (std::size_t x = 0; x < table.values.size(); ++x) {
    if (table.values[x] != modified_table.values[x] && !named[x]) {
      throw Error(ErrorCode::kDomainError, "tables differ at input " + std::to_string(x) +
                                               " outside the modified set");
    }
  }

  std::vector<OracleTable> per_step(exp.step_count, table);
  for (const auto& [t, rho] : exp.modified_set) per_step[t].values[rho] = modified_table.values[rho];

  std::vector<StateVector> before;
  const StateVector plain = run_experiment(exp, [&](unsigned) -> const OracleTable& { return table; }, &before);
  const StateVector moved = run_experiment(exp, [&](unsigned t) -> const OracleTable& { return per_step[t]; });

  BbbvResult r;
  for (const auto& [t, rho] : exp.modified_set) r.eps_sum += query_magnitude(before[t], rho);
  r.distance = euclidean_distance(plain, moved);
  const double scale = std::sqrt(exp.step_count * r.eps_sum);
  r.ratio = scale > 0.0 ? r.distance / scale : 0.0;
  return r;
}

OracleTable draw_modified_table(const QueryExperiment& exp, const OracleTable& table, Rng& rng) {
  OracleTable out = table;
  const auto r = static_cast<std::uint32_t>(rng.uniform(std::uint64_t{1} << table.answer_bits));
  for (const auto& [t, rho] : exp.modified_set) out.values.at(rho) = r;
  return out;
}

QueryExperiment closed_form_experiment() {
  QueryExperiment exp;
  exp.regs = {3, 1, 0};
  exp.step_count = 1;
  exp.unitaries = {{{GateKind::kH, 0, {}}, {GateKind::kH, 1, {}}, {GateKind::kH, 2, {}}}, {}};
  exp.modified_set = {{0, 5}};
  return exp;
}

QueryExperiment random_experiment(Rng& rng, unsigned max_input, unsigned max_steps) {
  QueryExperiment exp;
  exp.regs = {1 + static_cast<unsigned>(rng.uniform(max_input)), 1 + static_cast<unsigned>(rng.uniform(2)),
              static_cast<unsigned>(rng.uniform(2))};
  check_registers(exp.regs);
  exp.step_count = 1 + static_cast<unsigned>(rng.uniform(max_steps));
  const unsigned n = exp.regs.total();
  for (unsigned t = 0; t <= exp.step_count; ++t) {
    exp.unitaries.push_back(random_circuit(n, 1 + static_cast<unsigned>(rng.uniform(20)), rng));
  }
  const std::uint64_t inputs = std::uint64_t{1} << exp.regs.input;
  for (unsigned t = 0; t < exp.step_count; ++t) {
    for (std::uint64_t rho = 0; rho < inputs; ++rho) {
      if (rng.uniform(4) == 0) exp.modified_set.emplace(t, static_cast<std::uint32_t>(rho));
    }
  }
  if (exp.modified_set.empty()) {
    exp.modified_set.emplace(static_cast<unsigned>(rng.uniform(exp.step_count)),
                             static_cast<std::uint32_t>(rng.uniform(inputs)));
  }
  return exp;
}

double accept_probability(const QueryExperiment& exp, const OracleTable& table) {
  if (!exp.accept_qubit) throw Error(ErrorCode::kDomainError, "experiment has no accept qubit");
  const StateVector out = run_experiment(exp, [&](unsigned) -> const OracleTable& { return table; });
  return out.probability_one(*exp.accept_qubit);
}

OracleTable sample_sc_table(unsigned input_bits, unsigned answer_bits, double delta, Rng& rng) {
  OracleTable t = OracleTable::random(input_bits, answer_bits, rng);
  const auto y = static_cast<std::uint32_t>(rng.uniform(std::uint64_t{1} << answer_bits));
  for (auto& v : t.values) {
    if (rng.bernoulli(delta)) v = y;
  }
  return t;
}

double sc_advantage_bound(unsigned q, double delta, std::size_t trials) {
  const double q4 = std::pow(static_cast<double>(q), 4);
  return 8.0 / 3.0 * q4 * delta * delta + 4.0 * std::sqrt(std::log(40.0) / static_cast<double>(trials));
}

ScResult run_sc_distinguisher(const QueryExperiment& exp, double delta, std::size_t trials, Rng& rng) {
  validate_experiment(exp);
  if (trials == 0) throw Error(ErrorCode::kDomainError, "trials must be positive");
  if (!(delta >= 0.0 && delta <= 1.0)) throw Error(ErrorCode::kDomainError, "delta must lie in [0, 1]");
  const std::uint64_t seed = rng.next_u64();
  struct Pair {
    double uniform = 0.0, sc = 0.0;
  };
  const auto rows = kernels::run_trials<Pair>(trials, [&](std::size_t i) {
    Rng r = Rng::derive(seed, i);
    const OracleTable o = OracleTable::random(exp.regs.input, exp.regs.answer, r);
    const OracleTable o_sc = sample_sc_table(exp.regs.input, exp.regs.answer, delta, r);
    return Pair{accept_probability(exp, o), accept_probability(exp, o_sc)};
  });
  ScResult res;
  for (const Pair& p : rows) {
    res.p_uniform += p.uniform;
    res.p_sc += p.sc;
  }
  res.p_uniform /= static_cast<double>(trials);
  res.p_sc /= static_cast<double>(trials);
  res.advantage = std::abs(res.p_uniform - res.p_sc);
  res.bound = sc_advantage_bound(exp.step_count, delta, trials);
  return res;
}

namespace {

constexpr unsigned kIn = 4, kAns = 2, kAccept = 6;

Circuit on_inputs(GateKind k) {
  Circuit c;
  for (unsigned i = 0; i < kIn; ++i) c.push_back({k, i, {}});
  return c;
}

void append(Circuit& c, const Circuit& more) { c.insert(c.end(), more.begin(), more.end()); }

// Flip the accept qubit when the input register is all zero.
Circuit accept_if_input_zero() {
  Circuit c = on_inputs(GateKind::kX);
  c.push_back({GateKind::kMCX, kAccept, {0, 1, 2, 3}});
  return c;
}

// Reflection about the uniform superposition, up to global phase.
Circuit diffusion() {
  Circuit c = on_inputs(GateKind::kH);
  append(c, on_inputs(GateKind::kX));
  c.push_back({GateKind::kH, 3, {}});
  c.push_back({GateKind::kMCX, 3, {0, 1, 2}});
  c.push_back({GateKind::kH, 3, {}});
  append(c, on_inputs(GateKind::kX));
  append(c, on_inputs(GateKind::kH));
  return c;
}

QueryExperiment blank(unsigned q) {
  QueryExperiment exp;
  exp.regs = {kIn, kAns, 1};
  exp.step_count = q;
  exp.unitaries.assign(q + 1, {});
  exp.accept_qubit = kAccept;
  return exp;
}

QueryExperiment collision(unsigned q) {
  QueryExperiment exp = blank(q);
  // Input register steps through 0, 1, ..., q-1 by XORing in i ^ (i-1).
  for (unsigned t = 1; t < q; ++t) {
    const unsigned diff = t ^ (t - 1);
    for (unsigned b = 0; b < kIn; ++b) {
      if (diff >> b & 1) exp.unitaries[t].push_back({GateKind::kX, b, {}});
    }
  }
  Circuit& last = exp.unitaries[q];
  last.push_back({GateKind::kX, kIn, {}});
  last.push_back({GateKind::kX, kIn + 1, {}});
  last.push_back({GateKind::kMCX, kAccept, {kIn, kIn + 1}});
  return exp;
}

// Answer qubit kIn in |->, so each query applies (-1)^{O(x)_0}.
Circuit phase_setup() {
  Circuit c{{GateKind::kX, kIn, {}}, {GateKind::kH, kIn, {}}};
  append(c, on_inputs(GateKind::kH));
  return c;
}

QueryExperiment phase_kickback(unsigned q) {
  QueryExperiment exp = blank(q);
  exp.unitaries[0] = phase_setup();
  for (unsigned t = 1; t < q; ++t) {
    append(exp.unitaries[t], on_inputs(GateKind::kH));
    append(exp.unitaries[t], on_inputs(GateKind::kS));
    append(exp.unitaries[t], on_inputs(GateKind::kH));
  }
  append(exp.unitaries[q], on_inputs(GateKind::kH));
  append(exp.unitaries[q], accept_if_input_zero());
  return exp;
}

QueryExperiment grover(unsigned q) {
  QueryExperiment exp = blank(q);
  exp.unitaries[0] = phase_setup();
  for (unsigned t = 1; t <= q; ++t) append(exp.unitaries[t], diffusion());
  append(exp.unitaries[q], accept_if_input_zero());
  return exp;
}

QueryExperiment random_distinguisher(unsigned q, Rng& rng) {
  QueryExperiment exp = blank(q);
  for (auto& u : exp.unitaries) u = random_circuit(exp.regs.total(), 6, rng);
  // Fold the answer register into the accept qubit so it is not left idle.
  exp.unitaries[q].push_back({GateKind::kCX, kAccept, {kIn}});
  exp.unitaries[q].push_back({GateKind::kCX, kAccept, {kIn + 1}});
  return exp;
}

}  // namespace

std::vector<Distinguisher> distinguisher_family(unsigned q, Rng& rng) {
  if (q == 0) throw Error(ErrorCode::kDomainError, "distinguishers need at least one query");
  std::vector<Distinguisher> out;
  out.push_back({"collision", collision(q)});
  out.push_back({"phase", phase_kickback(q)});
  out.push_back({"grover", grover(q)});
  out.push_back({"random-a", random_distinguisher(q, rng)});
  out.push_back({"random-b", random_distinguisher(q, rng)});
  return out;
}

}  // namespace ofs::qstate
