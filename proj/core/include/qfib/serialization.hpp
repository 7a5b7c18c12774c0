// Copyright 2026 The qfibounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * JSON schema for operators and states:
 *   {"dim": d, "entries": [[re, im], ...]}   row-major, d*d pairs
 * and for k-local Hamiltonians:
 *   {"n_sites": n, "local_dim": d, "k": k,
 *    "terms": [{"sites": [...], "op": {dim, entries}}, ...]}
 * Loaders validate all type invariants on read (Hermiticity, trace,
 * positivity, site ranges).
 */

#pragma once

#include <string>

#include "qfib/states.hpp"

namespace qfib {

std::string to_json_string(const HermitianOperator& op);
std::string to_json_string(const DensityMatrix& rho);
std::string to_json_string(const KLocalHamiltonian& h);

HermitianOperator hermitian_from_json(const std::string& text);
DensityMatrix density_from_json(const std::string& text);
KLocalHamiltonian klocal_from_json(const std::string& text);

}  // namespace qfib
