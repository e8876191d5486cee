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

#ifndef CFOG_FORMULATION_HPP
#define CFOG_FORMULATION_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfog/catalog.hpp"
#include "cfog/milp.hpp"
#include "cfog/profiles.hpp"
#include "cfog/topology.hpp"

namespace cfog {

struct LayerToggles {
    bool cloud = true;
    bool metro = true;
    bool access = true;

    bool any() const { return cloud || metro || access; }
};

struct FormulationOptions {
    WorkloadProfile workload_profile = WorkloadProfile::Linear;
    bool solar_enabled = false;
    std::optional<double> big_m_override;
    bool multi_slot = false;     // concatenate slots into one model (MPS export)
    LayerToggles layers;         // data-center candidacy per layer
    double traffic_scale = 1.0;  // multiplies the scenario traffic matrix
    double indicator_epsilon = 1e-3;  // Gb/s that force a placement indicator on
};

/// Big-M used by the placement indicator links: ten times the largest
/// conceivable response traffic, floored at 10 for degenerate scenarios.
double big_m_value(const DemandScenario& scenario, const std::vector<VmSpec>& vms);

/// One slot's MILP plus the structural information needed to decode it.
/// Variable names follow `sym[indices,t]`, constraints `c<paperNo>[indices,t]`.
struct SlotFormulation {
    MilpModel model;
    int slot = 0;
    double hour = 0.0;
    double big_m = 0.0;
    FormulationOptions options;
    bool core_built = false;
    bool placement_built = false;
    std::vector<std::pair<int, int>> commodities;  // traffic pairs with demand
    std::vector<std::pair<int, int>> arcs;         // directed physical arcs (node, node)
    std::vector<int> arc_link;                     // arc -> topology link index
};

class MissingDemand : public std::runtime_error {
public:
    explicit MissingDemand(const std::string& what) : std::runtime_error(what) {}
};

class SolarDataMissing : public std::runtime_error {
public:
    explicit SolarDataMissing(const std::string& what) : std::runtime_error(what) {}
};

/// Builds the complete single-slot model: core transport (21)-(24), demand
/// accounting (25)-(26), placement indicators (27)-(38), workloads (39)-(48),
/// dimensioning (49)-(57) and, with solar enabled, the green split (58)-(67),
/// with the layer power objective over it all.
SlotFormulation build_slot_model(const NetworkTopology& topo, const DeviceCatalog& catalog,
                                 const DemandScenario& scenario, int slot,
                                 const FormulationOptions& options);

/// Slot concatenation (variables carry their slot in the index tuple); used
/// for whole-instance MPS export. `slots` empty means all.
MilpModel build_multi_slot_model(const NetworkTopology& topo, const DeviceCatalog& catalog,
                                 const DemandScenario& scenario,
                                 const FormulationOptions& options,
                                 const std::vector<int>& slots = {});

/// Numeric constraint families present in a model (the NN of `cNN[...]`).
std::set<int> constraint_families(const MilpModel& model);

/// The families build_slot_model must emit for the given options and slot
/// content. Families 63/65/66 never appear: the circular green trio is the
/// single budget row c61 (see module docs). Family/equation map:
///   40/43 access workload, 41/44 metro, 42/45 cloud (linear/constant).
std::set<int> expected_families(const FormulationOptions& options, bool has_traffic,
                                bool has_metro_candidates);

/// Name helpers shared by the formulation, reports and tests.
std::string slot_tag(double hour);
std::string var_name(const std::string& sym, const std::vector<std::string>& indices);

} // namespace cfog

#endif // CFOG_FORMULATION_HPP
