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

#ifndef CFOG_SOLVER_HPP
#define CFOG_SOLVER_HPP

#include "cfog/milp.hpp"
#include "cfog/simplex.hpp"

namespace cfog {

struct SolveLimits {
    double time_limit_s = 600.0;
    double gap = 1e-6;       // relative optimality gap
    long node_limit = 5000000;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, TimeLimit };

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    double objective = 0.0;
    Assignment assignment;
    long node_count = 0;
    long lp_iterations = 0;
    double wall_time_s = 0.0;
    double bound_gap = 0.0;   // relative gap between incumbent and best bound
    double best_bound = 0.0;
    bool has_incumbent = false;
};

class SolveError : public std::runtime_error {
public:
    explicit SolveError(const std::string& what) : std::runtime_error(what) {}
};

/// LP relaxation of the model (integrality dropped). Deterministic.
SolveResult solve_lp(const MilpModel& model);

/// Exact branch-and-bound: best-bound node selection, most-fractional
/// branching, lowest-index tie-breaks throughout. Every Optimal result is
/// re-checked with evaluate() before being returned.
SolveResult solve_milp(const MilpModel& model, const SolveLimits& limits = {});

} // namespace cfog

#endif // CFOG_SOLVER_HPP
