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

#ifndef CFOG_SIMPLEX_HPP
#define CFOG_SIMPLEX_HPP

#include <vector>

#include "cfog/milp.hpp"

namespace cfog {

enum class LpStatus { Optimal, Infeasible, Unbounded, IterLimit, NumericalFailure };

struct LpResult {
    LpStatus status = LpStatus::NumericalFailure;
    double objective = 0.0;
    std::vector<double> x;  // one value per model variable
    long iterations = 0;
};

/// Two-phase dense primal simplex over the model with integrality relaxed.
/// Deterministic: Dantzig pricing with lowest-index tie-breaks, falling back
/// to Bland's rule after a run of degenerate pivots. `lo`/`hi`, when given,
/// override the model bounds (used by branch-and-bound nodes).
LpResult solve_lp_relaxation(const MilpModel& model, const std::vector<double>* lo = nullptr,
                             const std::vector<double>* hi = nullptr,
                             long iteration_limit = 200000);

} // namespace cfog

#endif // CFOG_SIMPLEX_HPP
