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

#ifndef CFOG_PROFILES_HPP
#define CFOG_PROFILES_HPP

#include <string>
#include <vector>

#include "cfog/textio.hpp"
#include "cfog/topology.hpp"

namespace cfog {

enum class WorkloadProfile { Linear, Constant };

struct VmSpec {
    std::string id;
    double user_download_rate_gbps = 0.0;  // per-user response rate
    int max_users = 0;                     // users one replica can serve
    double max_workload_pct = 100.0;       // CPU share at full load
    double min_workload_pct = 0.0;         // CPU share of an idle replica
    WorkloadProfile profile_kind = WorkloadProfile::Linear;
};

class UnknownSite : public std::runtime_error {
public:
    explicit UnknownSite(const std::string& what) : std::runtime_error(what) {}
};

class OutOfHorizon : public std::runtime_error {
public:
    explicit OutOfHorizon(const std::string& what) : std::runtime_error(what) {}
};

/// Time-indexed demand data: one traffic matrix, per-PON user counts and
/// per-site solar availability for each slot. Immutable after load; the MILP
/// is built and solved per slot, so no intra-slot interpolation exists.
struct DemandScenario {
    std::vector<double> time_slots;  // strictly increasing hours in [0, 24)
    std::vector<VmSpec> vms;

    // core_traffic[t][s * n + d]: Gb/s demand from node s to node d at slot t.
    std::vector<std::vector<double>> core_traffic;
    // users[t][x * pons + p]: concurrent users of VM x in PON p during slot t.
    std::vector<std::vector<double>> users;
    // solar_w[t][p]: available solar power (W) at PON p's access site.
    std::vector<std::vector<double>> solar_w;

    int node_count = 0;
    int pon_count = 0;

    int slot_count() const { return static_cast<int>(time_slots.size()); }
    int vm_count() const { return static_cast<int>(vms.size()); }
    int vm_index(const std::string& id) const;

    double traffic(int t, int s, int d) const { return core_traffic[t][s * node_count + d]; }
    double user_count(int t, int x, int p) const { return users[t][x * pon_count + p]; }

    /// Piecewise-constant solar lookup: value of the slot containing hour t.
    double solar_at(int pon, double hour) const;
};

/// demand = users * per-user rate.
double demand_request_rate(const VmSpec& spec, double users);

/// Response capacity of one replica: per-user rate * max users.
double vm_unit_capacity(const VmSpec& spec);

std::vector<VmSpec> load_vm_specs(const std::string& path);
std::vector<VmSpec> parse_vm_specs(const TextDocument& doc);

DemandScenario load_scenario(const std::string& path, const std::string& vms_path,
                             const NetworkTopology& topo);
DemandScenario parse_scenario(const TextDocument& doc, std::vector<VmSpec> vms,
                              const NetworkTopology& topo);

std::string serialize_scenario(const DemandScenario& s, const NetworkTopology& topo);

} // namespace cfog

#endif // CFOG_PROFILES_HPP
