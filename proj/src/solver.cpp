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

#include "cfog/solver.hpp"

#include <chrono>
#include <cmath>
#include <queue>

namespace cfog {

namespace {

using Clock = std::chrono::steady_clock;

struct Node {
    double bound = -kInfinity;
    long id = 0;
    // Bound tightenings relative to the root model, accumulated on the path.
    std::vector<std::pair<int, double>> lo_delta;
    std::vector<std::pair<int, double>> hi_delta;
};

struct NodeOrder {
    bool operator()(const Node& a, const Node& b) const {
        if (a.bound != b.bound) return a.bound > b.bound;  // min-heap on bound
        return a.id > b.id;
    }
};

void apply_deltas(const Node& node, std::vector<double>& lo, std::vector<double>& hi,
                  const std::vector<double>& root_lo, const std::vector<double>& root_hi) {
    lo = root_lo;
    hi = root_hi;
    for (const auto& [v, b] : node.lo_delta) lo[v] = std::max(lo[v], b);
    for (const auto& [v, b] : node.hi_delta) hi[v] = std::min(hi[v], b);
}

/// Snaps integer variables to the nearest integer within node bounds.
Assignment snapped(const MilpModel& model, const std::vector<double>& x) {
    Assignment a = x;
    for (int v = 0; v < model.variable_count(); ++v)
        if (model.variable(v).kind != VarKind::Continuous)
            a[v] = std::round(a[v]);
    return a;
}

} // namespace

SolveResult solve_lp(const MilpModel& model) {
    auto start = Clock::now();
    SolveResult res;
    LpResult lp = solve_lp_relaxation(model);
    res.lp_iterations = lp.iterations;
    res.wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
    switch (lp.status) {
        case LpStatus::Optimal:
            res.status = SolveStatus::Optimal;
            res.objective = lp.objective;
            res.best_bound = lp.objective;
            res.assignment = std::move(lp.x);
            res.has_incumbent = true;
            break;
        case LpStatus::Infeasible:
            res.status = SolveStatus::Infeasible;
            break;
        case LpStatus::Unbounded:
            res.status = SolveStatus::Unbounded;
            break;
        case LpStatus::IterLimit:
            res.status = SolveStatus::TimeLimit;
            break;
        case LpStatus::NumericalFailure:
            throw SolveError("solve_lp: numerical failure in the simplex");
    }
    return res;
}

SolveResult solve_milp(const MilpModel& model, const SolveLimits& limits) {
    auto start = Clock::now();
    auto elapsed = [&start] {
        return std::chrono::duration<double>(Clock::now() - start).count();
    };

    SolveResult res;
    std::vector<double> root_lo(model.variable_count()), root_hi(model.variable_count());
    for (int v = 0; v < model.variable_count(); ++v) {
        root_lo[v] = model.variable(v).lower;
        root_hi[v] = model.variable(v).upper;
        if (model.variable(v).kind != VarKind::Continuous && std::isinf(root_hi[v]))
            throw SolveError("solve_milp: integer variable '" + model.variable(v).name +
                             "' has no finite upper bound");
    }

    double incumbent_obj = kInfinity;
    Assignment incumbent;

    std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
    long next_id = 0;

    {
        Node root;
        root.id = next_id++;
        open.push(std::move(root));
    }

    std::vector<double> lo, hi;
    double final_bound = -kInfinity;

    auto gap_of = [&](double bound) {
        if (!std::isfinite(incumbent_obj)) return kInfinity;
        return (incumbent_obj - bound) / std::max(1.0, std::abs(incumbent_obj));
    };

    while (!open.empty()) {
        if (elapsed() > limits.time_limit_s || res.node_count >= limits.node_limit) {
            res.status = SolveStatus::TimeLimit;
            res.best_bound = open.top().bound;
            res.bound_gap = gap_of(res.best_bound);
            res.objective = incumbent_obj;
            res.assignment = incumbent;
            res.has_incumbent = std::isfinite(incumbent_obj);
            res.wall_time_s = elapsed();
            return res;
        }

        Node node = open.top();
        open.pop();
        ++res.node_count;

        // The heap is ordered by bound, so this node's bound is the global
        // lower bound; stop once it is within gap of the incumbent.
        if (std::isfinite(incumbent_obj) &&
            node.bound >= incumbent_obj - limits.gap * std::max(1.0, std::abs(incumbent_obj))) {
            final_bound = node.bound;
            break;
        }

        apply_deltas(node, lo, hi, root_lo, root_hi);
        LpResult lp = solve_lp_relaxation(model, &lo, &hi);
        res.lp_iterations += lp.iterations;

        if (lp.status == LpStatus::Infeasible) continue;
        if (lp.status == LpStatus::Unbounded) {
            if (node.id == 0) {
                res.status = SolveStatus::Unbounded;
                res.wall_time_s = elapsed();
                return res;
            }
            throw SolveError("solve_milp: unbounded node below a bounded root");
        }
        if (lp.status == LpStatus::IterLimit || lp.status == LpStatus::NumericalFailure)
            throw SolveError("solve_milp: LP relaxation failed at node " +
                             std::to_string(node.id));

        double bound = lp.objective;
        if (std::isfinite(incumbent_obj) &&
            bound >= incumbent_obj - limits.gap * std::max(1.0, std::abs(incumbent_obj)))
            continue;

        // Branching variable: most fractional integer, lowest index on ties.
        int branch_var = -1;
        double branch_frac = kIntTol;
        for (int v = 0; v < model.variable_count(); ++v) {
            if (model.variable(v).kind == VarKind::Continuous) continue;
            double f = lp.x[v] - std::floor(lp.x[v]);
            double dist = std::min(f, 1.0 - f);
            if (dist > branch_frac + 1e-12) {
                branch_frac = dist;
                branch_var = v;
            }
        }

        if (branch_var < 0) {
            Assignment cand = snapped(model, lp.x);
            double obj = model.objective_value(cand);
            if (obj < incumbent_obj && evaluate(model, cand).feasible()) {
                incumbent_obj = obj;
                incumbent = std::move(cand);
            }
            continue;
        }

        // Probe: nearest-integer rounding of this relaxation sometimes is
        // already feasible and gives an early incumbent.
        {
            Assignment cand = snapped(model, lp.x);
            double obj = model.objective_value(cand);
            if (obj < incumbent_obj && evaluate(model, cand).feasible()) {
                incumbent_obj = obj;
                incumbent = std::move(cand);
            }
        }

        double floor_v = std::floor(lp.x[branch_var]);
        Node down;
        down.bound = bound;
        down.id = next_id++;
        down.lo_delta = node.lo_delta;
        down.hi_delta = node.hi_delta;
        down.hi_delta.emplace_back(branch_var, floor_v);
        Node up;
        up.bound = bound;
        up.id = next_id++;
        up.lo_delta = node.lo_delta;
        up.hi_delta = node.hi_delta;
        up.lo_delta.emplace_back(branch_var, floor_v + 1.0);

        open.push(std::move(down));
        open.push(std::move(up));
    }

    res.wall_time_s = elapsed();
    if (!std::isfinite(incumbent_obj)) {
        res.status = SolveStatus::Infeasible;
        return res;
    }
    res.status = SolveStatus::Optimal;
    res.objective = incumbent_obj;
    res.assignment = std::move(incumbent);
    res.has_incumbent = true;
    res.best_bound = std::isfinite(final_bound) ? final_bound : incumbent_obj;
    res.bound_gap = std::max(0.0, gap_of(res.best_bound));

    FeasibilityReport check = evaluate(model, res.assignment);
    if (!check.feasible())
        throw SolveError("solve_milp: optimal assignment failed the feasibility re-check");
    return res;
}

} // namespace cfog
