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

#ifndef CFOG_ORACLE_HPP
#define CFOG_ORACLE_HPP

#include "cfog/catalog.hpp"
#include "cfog/formulation.hpp"
#include "cfog/profiles.hpp"
#include "cfog/topology.hpp"

namespace cfog {

/// A desk-calculator-sized instance the exhaustive oracle can certify:
/// at most 3 core nodes, 2 PONs, 1 VM, 3 slots, 2 traffic commodities.
struct TinyInstance {
    NetworkTopology topo;
    DeviceCatalog catalog;
    DemandScenario scenario;
    FormulationOptions options;
};

class TooLarge : public std::runtime_error {
public:
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct OracleSlotResult {
    double objective = 0.0;
    double core_w = 0.0;
    double placement_w = 0.0;
};

struct OracleResult {
    double objective = 0.0;                 // sum over slots
    std::vector<OracleSlotResult> slots;
};

/// Exhaustive optimum computed by direct evaluation of the power equations
/// over enumerated placements, demand splits (all-or-nothing per site plus
/// breakpoint splits), replica counts and lightpath routings. Completely
/// independent of the MILP/solver path.
OracleResult oracle_optimum(const TinyInstance& instance);

double oracle_slot_optimum(const TinyInstance& instance, int slot);

} // namespace cfog

#endif // CFOG_ORACLE_HPP
