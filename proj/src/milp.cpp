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

#include "cfog/milp.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace cfog {

VarId MilpModel::add_variable(const std::string& name, VarKind kind, double lo, double hi) {
    if (frozen_) throw DomainError("add_variable: model is frozen");
    if (var_names_.count(name)) throw DomainError("DuplicateName: variable '" + name + "'");
    if (kind == VarKind::Binary) {
        lo = 0.0;
        hi = 1.0;
    }
    if (!(lo <= hi)) throw DomainError("BadBounds: variable '" + name + "'");
    VarId id = static_cast<VarId>(vars_.size());
    vars_.push_back(Variable{name, kind, lo, hi});
    objective_.push_back(0.0);
    var_names_.emplace(name, id);
    return id;
}

ConstraintId MilpModel::add_constraint(const std::string& name,
                                       const std::vector<std::pair<double, VarId>>& terms,
                                       Sense sense, double rhs) {
    if (frozen_) throw DomainError("add_constraint: model is frozen");
    if (con_names_.count(name)) throw DomainError("DuplicateName: constraint '" + name + "'");
    LinearConstraint c;
    c.name = name;
    c.sense = sense;
    c.rhs = rhs;
    std::map<VarId, double> merged;
    for (const auto& [coeff, var] : terms) {
        if (var < 0 || var >= variable_count())
            throw DomainError("UnknownVariable: constraint '" + name + "'");
        if (!std::isfinite(coeff))
            throw DomainError("NonFiniteCoefficient: constraint '" + name + "' variable '" +
                              vars_[var].name + "'");
        merged[var] += coeff;
    }
    c.terms.reserve(merged.size());
    for (const auto& [var, coeff] : merged) c.terms.emplace_back(coeff, var);
    ConstraintId id = static_cast<ConstraintId>(cons_.size());
    cons_.push_back(std::move(c));
    con_names_.emplace(name, id);
    return id;
}

void MilpModel::add_objective_term(double coeff, VarId var) {
    if (frozen_) throw DomainError("add_objective_term: model is frozen");
    if (var < 0 || var >= variable_count()) throw DomainError("UnknownVariable in objective");
    if (!std::isfinite(coeff)) throw DomainError("NonFiniteCoefficient in objective");
    objective_[var] += coeff;
}

VarId MilpModel::find_variable(const std::string& name) const {
    auto it = var_names_.find(name);
    return it == var_names_.end() ? -1 : it->second;
}

double MilpModel::objective_value(const std::vector<double>& assignment) const {
    double v = 0.0;
    for (int i = 0; i < variable_count(); ++i) v += objective_[i] * assignment[i];
    return v;
}

FeasibilityReport evaluate(const MilpModel& model, const Assignment& a) {
    if (static_cast<int>(a.size()) != model.variable_count())
        throw DomainError("MissingVariable: assignment covers " + std::to_string(a.size()) +
                          " of " + std::to_string(model.variable_count()) + " variables");

    FeasibilityReport rep;
    rep.objective = model.objective_value(a);

    for (int i = 0; i < model.variable_count(); ++i) {
        const Variable& v = model.variable(i);
        double scale = std::max(1.0, std::max(std::abs(v.lower), std::abs(a[i])));
        if (a[i] < v.lower - kFeasTol * scale || a[i] > v.upper + kFeasTol * scale)
            rep.bound_violations.push_back(i);
        if (v.kind != VarKind::Continuous) {
            double nearest = std::round(a[i]);
            if (std::abs(a[i] - nearest) > kIntTol)
                rep.integrality.push_back({i, a[i]});
        }
    }

    for (int c = 0; c < model.constraint_count(); ++c) {
        const LinearConstraint& row = model.constraint(c);
        double activity = 0.0, magnitude = std::abs(row.rhs);
        for (const auto& [coeff, var] : row.terms) {
            activity += coeff * a[var];
            magnitude = std::max(magnitude, std::abs(coeff * a[var]));
        }
        double scale = std::max(1.0, magnitude);
        double viol = 0.0;
        switch (row.sense) {
            case Sense::LessEqual: viol = activity - row.rhs; break;
            case Sense::GreaterEqual: viol = row.rhs - activity; break;
            case Sense::Equal: viol = std::abs(activity - row.rhs); break;
        }
        if (viol > kFeasTol * scale)
            rep.violations.push_back({c, -viol, viol / scale});
    }
    return rep;
}

} // namespace cfog
