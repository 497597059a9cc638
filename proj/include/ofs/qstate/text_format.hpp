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

#include <optional>
#include <string>
#include <string_view>

#include "ofs/qstate/statevector.hpp"

// Line-oriented experiment description. `#` starts a comment.
//
//   qubits <a> <b> <w>
//   steps <T>
//   accept <qubit>                     optional
//   gate <layer> <name> <qubits...>    layer 0..T; H S T X Z take a target,
//                                      CX control target, MCX controls... target
//   table <hex> ...                    O(0), O(1), ...; may repeat to continue
//   modified <hex> ...                 the modified oracle, same layout
//   modify <t> <rho>                   one modified-set entry
//
// Layer t runs before query t; layer T runs after the last query.
namespace ofs::qstate {

struct ExperimentFile {
  QueryExperiment exp;
  std::optional<OracleTable> table;
  std::optional<OracleTable> modified;
};

// Throws Error(kDecodeError) naming the line, or the validation errors of
// validate_experiment.
ExperimentFile parse_experiment(std::string_view text);
std::string format_experiment(const ExperimentFile& file);

}  // namespace ofs::qstate
