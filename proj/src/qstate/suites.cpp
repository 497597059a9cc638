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

#include "ofs/qstate/suites.hpp"

#include <cmath>
#include <cstdio>

#include "ofs/error.hpp"

namespace ofs::qstate {

namespace {

// Stream tags so the suites draw independent randomness from one seed.
constexpr std::uint64_t kLemma1Stream = 1, kLemma2Stream = 2, kLemma3Stream = 3;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void check_suite_config(const SuiteConfig& cfg) {
  if (cfg.lemma1_max_qubits < 2) throw Error(ErrorCode::kUnsupportedParameters, "lemma 1 states need 2 qubits");
  check_registers({cfg.lemma1_max_qubits - 1, 1, 0});
  if (cfg.lemma2_max_input == 0 || cfg.lemma2_max_steps == 0) {
    throw Error(ErrorCode::kUnsupportedParameters, "lemma 2 needs at least one input qubit and one query");
  }
  check_registers({cfg.lemma2_max_input, 2, 1});
}

std::vector<CheckRow> lemma1_suite(const SuiteConfig& cfg) {
  check_suite_config(cfg);
  Rng rng = Rng::derive(cfg.seed, kLemma1Stream);
  std::vector<CheckRow> rows;
  for (std::size_t i = 0; i < cfg.lemma1_pairs; ++i) {
    const unsigned n = 2 + static_cast<unsigned>(rng.uniform(cfg.lemma1_max_qubits - 1));
    const Registers regs{n - 1, 1, 0};
    const StateVector a = StateVector::random(regs, rng);
    StateVector b = StateVector::random(regs, rng);
    // Odd pairs are perturbations of a at scales from 1e-6 to 1.
    if (i % 2 == 1) {
      const double scale = std::pow(10.0, -6.0 * rng.uniform01());
      std::vector<Amplitude> amps(a.amplitudes().begin(), a.amplitudes().end());
      for (std::size_t k = 0; k < amps.size(); ++k) amps[k] += scale * b[k];
      double nn = 0.0;
      for (const auto& v : amps) nn += std::norm(v);
      for (auto& v : amps) v /= std::sqrt(nn);
      b = StateVector::from_amplitudes(regs, std::move(amps));
    }
    const TvResult r = tv_after_measurement(a, b);
    rows.push_back({"pair-" + std::to_string(i), 1, std::nullopt, r.tv, r.euclid > 0 ? r.tv / r.euclid : 0.0,
                    4.0 * r.euclid, r.holds()});
  }
  return rows;
}

std::vector<CheckRow> lemma2_suite(const SuiteConfig& cfg) {
  check_suite_config(cfg);
  Rng rng = Rng::derive(cfg.seed, kLemma2Stream);
  std::vector<CheckRow> rows;
  auto row = [&](std::string id, const BbbvResult& r, unsigned steps, bool pass) {
    rows.push_back({std::move(id), 2, r.eps_sum, r.distance, r.ratio, 2.0 * std::sqrt(steps * r.eps_sum), pass});
  };

  QueryExperiment closed = closed_form_experiment();
  const OracleTable zero = OracleTable::constant(3, 1, 0);
  OracleTable flipped = zero;
  if (cfg.empty_modified_set) {
    closed.modified_set.clear();
  } else {
    for (const auto& [t, rho] : closed.modified_set) flipped.values[rho] = 1;
  }
  const BbbvResult c = run_bbbv_experiment(closed, zero, flipped);
  const bool closed_ok = cfg.empty_modified_set
                             ? c.distance == 0.0
                             : std::abs(c.eps_sum - 0.125) <= 1e-10 && std::abs(c.distance - 0.5) <= 1e-10;
  row("closed-form", c, closed.step_count, closed_ok && c.ratio <= 2.0);

  for (std::size_t i = 0; i < cfg.lemma2_experiments; ++i) {
    QueryExperiment exp = random_experiment(rng, cfg.lemma2_max_input, cfg.lemma2_max_steps);
    const OracleTable table = OracleTable::random(exp.regs.input, exp.regs.answer, rng);
    if (cfg.empty_modified_set) exp.modified_set.clear();
    const OracleTable modified = draw_modified_table(exp, table, rng);
    const BbbvResult r = run_bbbv_experiment(exp, table, modified);
    const bool pass = cfg.empty_modified_set ? r.distance == 0.0 : r.ratio <= 2.0;
    row("random-" + std::to_string(i), r, exp.step_count, pass);
  }
  return rows;
}

std::vector<CheckRow> lemma3_suite(const SuiteConfig& cfg) {
  Rng rng = Rng::derive(cfg.seed, kLemma3Stream);
  std::vector<CheckRow> rows;
  for (unsigned q : cfg.lemma3_queries) {
    const auto family = distinguisher_family(q, rng);
    for (double delta : cfg.lemma3_deltas) {
      for (const auto& d : family) {
        const ScResult r = run_sc_distinguisher(d.exp, delta, cfg.lemma3_trials, rng);
        rows.push_back({d.name + "-q" + std::to_string(q) + "-delta" + fmt(delta), 3, std::nullopt, r.advantage,
                        r.advantage / r.bound, r.bound, r.holds()});
      }
    }
  }
  return rows;
}

std::vector<CheckRow> run_suites(const SuiteConfig& cfg) {
  check_suite_config(cfg);
  std::vector<CheckRow> rows;
  auto add = [&](std::vector<CheckRow> more) { rows.insert(rows.end(), more.begin(), more.end()); };
  if (cfg.lemma1) add(lemma1_suite(cfg));
  if (cfg.lemma2) add(lemma2_suite(cfg));
  if (cfg.lemma3) add(lemma3_suite(cfg));
  return rows;
}

void write_check_csv(std::ostream& out, const std::vector<CheckRow>& rows) {
  out << "experiment,lemma,eps_sum,distance,ratio,bound,pass\n";
  for (const auto& r : rows) {
    out << r.experiment << ',' << r.lemma << ',' << (r.eps_sum ? fmt(*r.eps_sum) : "") << ',' << fmt(r.distance)
        << ',' << fmt(r.ratio) << ',' << fmt(r.bound) << ',' << int(r.pass) << '\n';
  }
}

}  // namespace ofs::qstate
