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

#include "cfog/simplex.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace cfog {

namespace {

constexpr double kPivotEps = 1e-9;
constexpr double kCostEps = 1e-9;
constexpr double kPhase1Tol = 1e-7;

// Standard-form column built from one model variable. Shifted so every
// transformed column is >= 0; finite upper bounds become extra rows.
struct ColMap {
    VarId var = -1;
    double shift = 0.0;   // x = shift + sign * x'
    double sign = 1.0;
    int partner = -1;     // second column of a free split (x = x+ - x-)
};

struct StandardForm {
    // rows: A x' (sense) b with b >= 0 after normalization
    std::vector<std::vector<std::pair<int, double>>> rows;  // col -> coeff
    std::vector<double> rhs;
    std::vector<Sense> sense;
    std::vector<ColMap> cols;
    std::vector<double> cost;  // phase-2 cost per column
    double cost_offset = 0.0;
    bool infeasible_bounds = false;
};

StandardForm build_standard_form(const MilpModel& model, const std::vector<double>* lo_over,
                                 const std::vector<double>* hi_over) {
    int n = model.variable_count();
    StandardForm sf;
    std::vector<int> first_col(n, -1);

    for (int v = 0; v < n; ++v) {
        double lo = lo_over ? (*lo_over)[v] : model.variable(v).lower;
        double hi = hi_over ? (*hi_over)[v] : model.variable(v).upper;
        if (lo > hi + 1e-12) {
            sf.infeasible_bounds = true;
            return sf;
        }
        ColMap c;
        c.var = v;
        if (std::isinf(lo) && std::isinf(hi)) {
            // free: x = x+ - x-
            c.shift = 0.0;
            c.sign = 1.0;
            first_col[v] = static_cast<int>(sf.cols.size());
            sf.cols.push_back(c);
            ColMap neg = c;
            neg.sign = -1.0;
            sf.cols[first_col[v]].partner = static_cast<int>(sf.cols.size());
            sf.cols.push_back(neg);
            continue;
        }
        if (std::isinf(lo)) {
            // only upper bound: x = hi - x'
            c.shift = hi;
            c.sign = -1.0;
        } else {
            c.shift = lo;
            c.sign = 1.0;
        }
        first_col[v] = static_cast<int>(sf.cols.size());
        sf.cols.push_back(c);
        if (!std::isinf(lo) && !std::isinf(hi) && hi > lo) {
            // x' <= hi - lo as an explicit row
            sf.rows.push_back({{first_col[v], 1.0}});
            sf.rhs.push_back(hi - lo);
            sf.sense.push_back(Sense::LessEqual);
        }
        if (!std::isinf(lo) && !std::isinf(hi) && hi == lo) {
            // fixed variable: x' == 0; keep the column but pin it
            sf.rows.push_back({{first_col[v], 1.0}});
            sf.rhs.push_back(0.0);
            sf.sense.push_back(Sense::LessEqual);
        }
    }

    sf.cost.assign(sf.cols.size(), 0.0);
    for (int v = 0; v < n; ++v) {
        double c = model.objective()[v];
        if (c == 0.0) continue;
        int col = first_col[v];
        sf.cost[col] += c * sf.cols[col].sign;
        if (sf.cols[col].partner >= 0) sf.cost[sf.cols[col].partner] -= c;
        sf.cost_offset += c * sf.cols[col].shift;
    }

    for (int r = 0; r < model.constraint_count(); ++r) {
        const LinearConstraint& row = model.constraint(r);
        std::vector<std::pair<int, double>> entries;
        double rhs = row.rhs;
        for (const auto& [coeff, var] : row.terms) {
            int col = first_col[var];
            rhs -= coeff * sf.cols[col].shift;
            entries.emplace_back(col, coeff * sf.cols[col].sign);
            if (sf.cols[col].partner >= 0) entries.emplace_back(sf.cols[col].partner, -coeff);
        }
        sf.rows.push_back(std::move(entries));
        sf.rhs.push_back(rhs);
        sf.sense.push_back(row.sense);
    }
    return sf;
}

} // namespace

LpResult solve_lp_relaxation(const MilpModel& model, const std::vector<double>* lo,
                             const std::vector<double>* hi, long iteration_limit) {
    LpResult result;
    StandardForm sf = build_standard_form(model, lo, hi);
    if (sf.infeasible_bounds) {
        result.status = LpStatus::Infeasible;
        return result;
    }

    const int m = static_cast<int>(sf.rows.size());
    const int ns = static_cast<int>(sf.cols.size());

    // Normalize rows to rhs >= 0, then attach slack/surplus and artificials.
    int n_slack = 0, n_art = 0;
    std::vector<int> slack_col(m, -1), art_col(m, -1);
    for (int r = 0; r < m; ++r) {
        if (sf.rhs[r] < 0) {
            for (auto& [c, v] : sf.rows[r]) v = -v;
            sf.rhs[r] = -sf.rhs[r];
            if (sf.sense[r] == Sense::LessEqual) sf.sense[r] = Sense::GreaterEqual;
            else if (sf.sense[r] == Sense::GreaterEqual) sf.sense[r] = Sense::LessEqual;
        }
        if (sf.sense[r] != Sense::Equal) ++n_slack;
    }
    int total = ns + n_slack;
    {
        int s = 0;
        for (int r = 0; r < m; ++r) {
            if (sf.sense[r] == Sense::LessEqual) slack_col[r] = ns + s++;
            else if (sf.sense[r] == Sense::GreaterEqual) slack_col[r] = ns + s++;
        }
    }
    for (int r = 0; r < m; ++r) {
        bool needs_art = sf.sense[r] == Sense::Equal ||
                         (sf.sense[r] == Sense::GreaterEqual) ||
                         (sf.sense[r] == Sense::LessEqual && false);
        if (needs_art) art_col[r] = total + n_art++;
    }
    const int ncols = total + n_art;

    Eigen::MatrixXd tab = Eigen::MatrixXd::Zero(m, ncols + 1);
    for (int r = 0; r < m; ++r) {
        for (const auto& [c, v] : sf.rows[r]) tab(r, c) += v;
        if (slack_col[r] >= 0)
            tab(r, slack_col[r]) = sf.sense[r] == Sense::LessEqual ? 1.0 : -1.0;
        if (art_col[r] >= 0) tab(r, art_col[r]) = 1.0;
        tab(r, ncols) = sf.rhs[r];
    }

    std::vector<int> basis(m, -1);
    for (int r = 0; r < m; ++r) {
        if (sf.sense[r] == Sense::LessEqual) basis[r] = slack_col[r];
        else basis[r] = art_col[r];
    }

    std::vector<char> is_art(ncols, 0);
    for (int r = 0; r < m; ++r)
        if (art_col[r] >= 0) is_art[art_col[r]] = 1;

    Eigen::VectorXd cost_row = Eigen::VectorXd::Zero(ncols + 1);
    long iterations = 0;

    auto pivot = [&](int prow, int pcol) {
        double p = tab(prow, pcol);
        tab.row(prow) /= p;
        for (int r = 0; r < m; ++r) {
            if (r == prow) continue;
            double f = tab(r, pcol);
            if (f != 0.0) tab.row(r) -= f * tab.row(prow);
        }
        double cf = cost_row(pcol);
        if (cf != 0.0) cost_row -= cf * tab.row(prow).transpose();
        basis[prow] = pcol;
    };

    // Runs the simplex loop on the current cost_row. `allow` masks columns
    // that may enter; artificials are banned for good once they leave the
    // basis. Returns false on unboundedness.
    auto run = [&](std::vector<char>& allow, bool* hit_limit) -> bool {
        long degenerate_run = 0;
        double last_obj = cost_row(ncols);
        while (true) {
            if (++iterations > iteration_limit) {
                *hit_limit = true;
                return true;
            }
            bool bland = degenerate_run > 2L * (m + ncols);
            int enter = -1;
            double best = -kCostEps;
            for (int j = 0; j < ncols; ++j) {
                if (!allow[j]) continue;
                double rc = cost_row(j);
                if (rc < -kCostEps) {
                    if (bland) {
                        enter = j;
                        break;
                    }
                    if (rc < best) {
                        best = rc;
                        enter = j;
                    }
                }
            }
            if (enter < 0) return true;  // optimal

            int leave = -1;
            double best_ratio = 0.0;
            for (int r = 0; r < m; ++r) {
                double a = tab(r, enter);
                if (a > kPivotEps) {
                    double ratio = tab(r, ncols) / a;
                    if (leave < 0 || ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 && basis[r] < basis[leave])) {
                        leave = r;
                        best_ratio = ratio;
                    }
                }
            }
            if (leave < 0) return false;  // unbounded direction

            int leaving_col = basis[leave];
            pivot(leave, enter);
            if (leaving_col >= 0 && is_art[leaving_col]) allow[leaving_col] = 0;
            double obj = cost_row(ncols);
            if (obj > last_obj - 1e-12) ++degenerate_run;
            else degenerate_run = 0;
            last_obj = obj;
        }
    };

    std::vector<char> allow(ncols, 1);
    bool hit_limit = false;

    if (n_art > 0) {
        // Phase 1: minimize the artificial sum. With artificials basic the
        // reduced-cost row is the negated sum of their rows.
        cost_row.setZero();
        for (int r = 0; r < m; ++r)
            if (basis[r] == art_col[r] && art_col[r] >= 0)
                cost_row -= tab.row(r).transpose();
        for (int r = 0; r < m; ++r)
            if (art_col[r] >= 0) cost_row(art_col[r]) = 0.0;

        if (!run(allow, &hit_limit)) {
            result.status = LpStatus::NumericalFailure;  // phase 1 cannot be unbounded
            return result;
        }
        if (hit_limit) {
            result.status = LpStatus::IterLimit;
            return result;
        }
        if (-cost_row(ncols) > kPhase1Tol * (1.0 + std::abs(cost_row(ncols)))) {
            result.status = LpStatus::Infeasible;
            result.iterations = iterations;
            return result;
        }
        // Drive any artificial still basic (at zero) out of the basis.
        for (int r = 0; r < m; ++r) {
            if (art_col[r] >= 0 && basis[r] == art_col[r]) {
                int pcol = -1;
                for (int j = 0; j < total; ++j)
                    if (std::abs(tab(r, j)) > kPivotEps) {
                        pcol = j;
                        break;
                    }
                if (pcol >= 0) pivot(r, pcol);
                // else: redundant row; artificial stays basic at value 0
            }
        }
        for (int j = 0; j < ncols; ++j)
            if (is_art[j]) allow[j] = 0;
    }

    // Phase 2 cost row: c_j - c_B' B^-1 a_j over the current tableau.
    cost_row.setZero();
    for (int j = 0; j < ns; ++j) cost_row(j) = sf.cost[j];
    for (int r = 0; r < m; ++r) {
        if (basis[r] < ns && sf.cost[basis[r]] != 0.0)
            cost_row -= sf.cost[basis[r]] * tab.row(r).transpose();
    }
    for (int r = 0; r < m; ++r)
        if (basis[r] >= 0 && basis[r] < ncols) cost_row(basis[r]) = 0.0;

    if (!run(allow, &hit_limit)) {
        result.status = LpStatus::Unbounded;
        result.iterations = iterations;
        return result;
    }
    if (hit_limit) {
        result.status = LpStatus::IterLimit;
        result.iterations = iterations;
        return result;
    }

    std::vector<double> xs(ns, 0.0);
    for (int r = 0; r < m; ++r)
        if (basis[r] >= 0 && basis[r] < ns) xs[basis[r]] = tab(r, ncols);

    result.x.assign(model.variable_count(), 0.0);
    for (int c = 0; c < ns; ++c) {
        const ColMap& cm = sf.cols[c];
        if (cm.sign > 0) result.x[cm.var] += cm.shift + xs[c];
        else result.x[cm.var] += cm.shift - xs[c];
    }
    // free splits: first column added shift already; partner handled by sign
    result.objective = model.objective_value(result.x);
    result.status = LpStatus::Optimal;
    result.iterations = iterations;
    return result;
}

} // namespace cfog
