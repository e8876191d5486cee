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

#ifndef CFOG_REPORT_HPP
#define CFOG_REPORT_HPP

#include <string>
#include <vector>

#include "cfog/formulation.hpp"
#include "cfog/solver.hpp"

namespace cfog {

enum class Layer { Access, Metro, Cloud };

const char* layer_name(Layer l);

struct PowerBreakdown {
    double transponder_w = 0.0;
    double edfa_w = 0.0;
    double router_port_w = 0.0;
    double cloud_dc_w = 0.0;
    double metro_dc_w = 0.0;
    double metro_node_w = 0.0;
    double access_dc_w = 0.0;   // brown only when solar is enabled
    double olt_w = 0.0;
    double onu_w = 0.0;

    double core_w() const { return transponder_w + edfa_w + router_port_w; }
    double total_w() const {
        return core_w() + cloud_dc_w + metro_dc_w + metro_node_w + access_dc_w + olt_w + onu_w;
    }
};

struct SitePlacement {
    Layer layer = Layer::Access;
    std::string vm;
    std::string site;   // PON id for access, node id otherwise
    double replicas = 0.0;
    double response_gbps = 0.0;
    double workload_pct = 0.0;
};

struct SiteDevices {
    Layer layer = Layer::Access;
    std::string site;
    long servers = 0, green_servers = 0;
    long routers = 0, green_routers = 0;
    long switches = 0, green_switches = 0;
};

/// Decoded optimum of one slot: placements, device counts and the power
/// breakdown, which sums to the solver objective (accounting identity).
struct PlacementReport {
    double hour = 0.0;
    double objective = 0.0;
    PowerBreakdown power;
    std::vector<SitePlacement> placements;
    std::vector<SiteDevices> devices;
    long physical_wavelengths = 0;
    long virtual_wavelengths = 0;
    long aggregation_ports = 0;
    double fog_replicas = 0.0;    // metro + access
    double cloud_replicas = 0.0;
};

class NonOptimalResult : public std::runtime_error {
public:
    explicit NonOptimalResult(const std::string& what) : std::runtime_error(what) {}
};

PlacementReport placement_report(const SlotFormulation& f, const SolveResult& result,
                                 const NetworkTopology& topo, const DeviceCatalog& catalog,
                                 const DemandScenario& scenario);

} // namespace cfog

#endif // CFOG_REPORT_HPP
