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

#ifndef CFOG_MILP_HPP
#define CFOG_MILP_HPP

#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "cfog/textio.hpp"

namespace cfog {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Row feasibility and integrality tolerances, relative per row.
constexpr double kFeasTol = 1e-6;
constexpr double kIntTol = 1e-6;

enum class VarKind { Continuous, Integer, Binary };
enum class Sense { LessEqual, Equal, GreaterEqual };

using VarId = int;
using ConstraintId = int;

struct Variable {
    std::string name;   // structured as family[index,...]
    VarKind kind = VarKind::Continuous;
    double lower = 0.0;
    double upper = kInfinity;
};

struct LinearConstraint {
    std::string name;
    std::vector<std::pair<double, VarId>> terms;  // coefficients pre-merged
    Sense sense = Sense::LessEqual;
    double rhs = 0.0;
};

/// Solver-agnostic MILP: typed variables, linear constraints and a minimize
/// objective, all with stable registration order. Building is single-writer;
/// a frozen model is immutable and freely shareable for evaluation/export.
class MilpModel {
public:
    std::string name = "model";

    VarId add_variable(const std::string& name, VarKind kind, double lo, double hi);
    ConstraintId add_constraint(const std::string& name,
                                const std::vector<std::pair<double, VarId>>& terms, Sense sense,
                                double rhs);
    /// Adds `coeff * var` to the minimize objective (accumulates per variable).
    void add_objective_term(double coeff, VarId var);

    void freeze() { frozen_ = true; }
    bool frozen() const { return frozen_; }

    int variable_count() const { return static_cast<int>(vars_.size()); }
    int constraint_count() const { return static_cast<int>(cons_.size()); }
    const Variable& variable(VarId v) const { return vars_[v]; }
    const LinearConstraint& constraint(ConstraintId c) const { return cons_[c]; }
    const std::vector<Variable>& variables() const { return vars_; }
    const std::vector<LinearConstraint>& constraints() const { return cons_; }
    const std::vector<double>& objective() const { return objective_; }

    VarId find_variable(const std::string& name) const;  // -1 when absent

    double objective_value(const std::vector<double>& assignment) const;

private:
    std::vector<Variable> vars_;
    std::vector<LinearConstraint> cons_;
    std::vector<double> objective_;  // per-variable coefficient
    std::unordered_map<std::string, VarId> var_names_;
    std::unordered_map<std::string, ConstraintId> con_names_;
    bool frozen_ = false;
};

/// A full variable->value map, indexed by VarId.
using Assignment = std::vector<double>;

struct RowViolation {
    ConstraintId constraint = -1;
    double slack = 0.0;      // negative when violated
    double relative = 0.0;   // violation / row scale
};

struct IntegralityViolation {
    VarId var = -1;
    double value = 0.0;
};

struct FeasibilityReport {
    double objective = 0.0;
    std::vector<RowViolation> violations;
    std::vector<IntegralityViolation> integrality;
    std::vector<VarId> bound_violations;

    bool feasible() const {
        return violations.empty() && integrality.empty() && bound_violations.empty();
    }
};

/// Checks an assignment against every row (relative tolerance 1e-6), variable
/// bound and integrality mark. Deterministic and independent of constraint
/// insertion order.
FeasibilityReport evaluate(const MilpModel& model, const Assignment& a);

} // namespace cfog

#endif // CFOG_MILP_HPP
