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

#include "ofs/qstate/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "ofs/error.hpp"

namespace ofs::qstate {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kDecodeError, "line " + std::to_string(line) + ": " + what);
}

std::uint64_t number(const std::string& tok, std::size_t line, int base = 10) {
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v, base);
  if (ec != std::errc{} || p != tok.data() + tok.size()) fail(line, "bad number '" + tok + "'");
  return v;
}

std::string hex(std::uint32_t v) {
  std::ostringstream s;
  s << std::hex << v;
  return s.str();
}

OracleTable finish_table(std::vector<std::uint32_t> values, const Registers& r, const char* what) {
  if (values.size() != (std::size_t{1} << r.input)) {
    throw Error(ErrorCode::kDecodeError, std::string(what) + " needs " + std::to_string(std::size_t{1} << r.input) +
                                             " entries, got " + std::to_string(values.size()));
  }
  for (auto v : values) {
    if (r.answer < 32 && v >> r.answer) {
      throw Error(ErrorCode::kDecodeError, std::string(what) + " entry " + hex(v) + " wider than the answer register");
    }
  }
  return {r.input, r.answer, std::move(values)};
}

}  // namespace

ExperimentFile parse_experiment(std::string_view text) {
  ExperimentFile f;
  bool have_qubits = false, have_steps = false;
  struct PendingGate {
    std::size_t line;
    unsigned layer;
    Gate gate;
  };
  std::vector<PendingGate> gates;
  std::vector<std::uint32_t> table, modified;
  bool have_table = false, have_modified = false;

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    auto arg = [&](std::size_t i) { return static_cast<unsigned>(number(tok.at(i), lineno)); };
    if (key == "qubits") {
      if (tok.size() != 4) fail(lineno, "qubits takes three sizes");
      f.exp.regs = {arg(1), arg(2), arg(3)};
      check_registers(f.exp.regs);
      have_qubits = true;
    } else if (key == "steps") {
      if (tok.size() != 2) fail(lineno, "steps takes one count");
      f.exp.step_count = arg(1);
      have_steps = true;
    } else if (key == "accept") {
      if (tok.size() != 2) fail(lineno, "accept takes one qubit");
      f.exp.accept_qubit = arg(1);
    } else if (key == "gate") {
      if (tok.size() < 4) fail(lineno, "gate needs a layer, a name and qubits");
      const auto kind = gate_from_name(tok[2]);
      if (!kind) fail(lineno, "unknown gate '" + tok[2] + "'");
      Gate g{*kind, arg(tok.size() - 1), {}};
      for (std::size_t i = 3; i + 1 < tok.size(); ++i) g.controls.push_back(arg(i));
      const std::size_t want = *kind == GateKind::kCX ? 1 : 0;
      if (*kind != GateKind::kMCX && g.controls.size() != want) fail(lineno, "wrong number of qubits for " + tok[2]);
      gates.push_back({lineno, arg(1), std::move(g)});
    } else if (key == "table" || key == "modified") {
      auto& dst = key == "table" ? table : modified;
      (key == "table" ? have_table : have_modified) = true;
      for (std::size_t i = 1; i < tok.size(); ++i) dst.push_back(static_cast<std::uint32_t>(number(tok[i], lineno, 16)));
    } else if (key == "modify") {
      if (tok.size() != 3) fail(lineno, "modify takes a step and an input");
      f.exp.modified_set.emplace(arg(1), arg(2));
    } else {
      fail(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!have_qubits || !have_steps) throw Error(ErrorCode::kDecodeError, "qubits and steps are required");
  f.exp.unitaries.assign(f.exp.step_count + 1, {});
  for (auto& [line, layer, g] : gates) {
    if (layer > f.exp.step_count) fail(line, "gate layer beyond the last step");
    bool inside = g.target < f.exp.regs.total();
    for (unsigned c : g.controls) inside = inside && c < f.exp.regs.total();
    if (!inside) fail(line, "gate qubit outside the registers");
    f.exp.unitaries[layer].push_back(std::move(g));
  }
  if (have_table) f.table = finish_table(std::move(table), f.exp.regs, "table");
  if (have_modified) f.modified = finish_table(std::move(modified), f.exp.regs, "modified");
  validate_experiment(f.exp);
  return f;
}

std::string format_experiment(const ExperimentFile& f) {
  std::ostringstream out;
  const auto& e = f.exp;
  out << "qubits " << e.regs.input << ' ' << e.regs.answer << ' ' << e.regs.work << '\n';
  out << "steps " << e.step_count << '\n';
  if (e.accept_qubit) out << "accept " << *e.accept_qubit << '\n';
  for (std::size_t layer = 0; layer < e.unitaries.size(); ++layer) {
    for (const Gate& g : e.unitaries[layer]) {
      out << "gate " << layer << ' ' << gate_name(g.kind);
      for (unsigned c : g.controls) out << ' ' << c;
      out << ' ' << g.target << '\n';
    }
  }
  auto table = [&](const char* key, const OracleTable& t) {
    out << key;
    for (auto v : t.values) out << ' ' << hex(v);
    out << '\n';
  };
  if (f.table) table("table", *f.table);
  if (f.modified) table("modified", *f.modified);
  for (const auto& [t, rho] : e.modified_set) out << "modify " << t << ' ' << rho << '\n';
  return out.str();
}

}  // namespace ofs::qstate
