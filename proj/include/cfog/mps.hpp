/*
 * Copyright 2026 The cfog Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CFOG_MPS_HPP
#define CFOG_MPS_HPP

#include <string>

#include "cfog/milp.hpp"

namespace cfog {

// Fixed-format MPS with ROWS/COLUMNS/RHS/BOUNDS sections and INTORG/INTEND
// markers around integer variables. Emission order is deterministic: variable
// registration order, then constraint registration order. Names that do not
// fit the 8-character field are mangled (X/C + registration index) and the
// original <-> mangled map is written to a sidecar `<path>.names` file.

/// Renders the model as MPS text; `names_out`, when non-null, receives the
/// sidecar map (one `mangled<TAB>original` line per renamed symbol).
std::string render_mps(const MilpModel& model, std::string* names_out);

/// Writes `path` and, when any name was mangled, `path`.names.
void export_mps(const MilpModel& model, const std::string& path);

/// Parses an MPS file back into a model. When `path`.names exists the original
/// names are restored. Binary variables round-trip as Integer with bounds
/// [0,1]; import normalizes that back to Binary.
MilpModel import_mps(const std::string& path);
MilpModel parse_mps(const std::string& content, const std::string& path,
                    const std::string& names_content);

/// Structural equality: same variables (name, kind, bounds), constraints
/// (name, sense, rhs, merged coefficients) and objective, up to `tol`.
bool models_equivalent(const MilpModel& a, const MilpModel& b, double tol, std::string* why);

} // namespace cfog

#endif // CFOG_MPS_HPP
