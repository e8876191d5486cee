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

#ifndef CFOG_TOPOLOGY_HPP
#define CFOG_TOPOLOGY_HPP

#include <string>
#include <vector>

#include "cfog/textio.hpp"

namespace cfog {

/// One undirected physical fiber link between two core nodes. Flow variables
/// are directed; both directions share this record.
struct PhysicalLink {
    int a = -1;           // node index
    int b = -1;
    double distance_km = 0.0;
};

struct PonGroup {
    std::string id;
    int node = -1;        // owning core node index
    std::string profile_ref;  // optional user-count profile tag, informational
};

/// Layered cloud-fog network graph. Immutable after load; safe to share
/// across threads without synchronization.
struct NetworkTopology {
    std::vector<std::string> node_names;     // index -> id used in files
    std::vector<std::string> node_display;
    std::vector<PhysicalLink> links;         // one record per bidirectional link
    std::vector<PonGroup> pons;
    std::vector<char> metro_presence;        // per node: metro DC site exists
    std::vector<std::vector<int>> neighbors; // per node: adjacent node indices
    std::vector<std::vector<int>> node_pons; // per node: indices into pons

    int node_count() const { return static_cast<int>(node_names.size()); }
    int link_count() const { return static_cast<int>(links.size()); }
    int pon_count() const { return static_cast<int>(pons.size()); }

    /// Index of the node with this id, -1 when unknown.
    int node_index(const std::string& id) const;
    int pon_index(const std::string& id) const;
};

struct TopologyViolation {
    std::string kind;     // NonPositiveDistance, Disconnected, DanglingPon, ...
    std::string element;  // offending node/link/PON id
    std::string detail;
};

NetworkTopology load_topology(const std::string& path);
NetworkTopology parse_topology(const TextDocument& doc);

/// Empty iff every NetworkTopology invariant holds; one entry per violation.
std::vector<TopologyViolation> validate_topology(const NetworkTopology& t);

/// Re-serialize in the topology file schema; load_topology on the output
/// yields an identical topology.
std::string serialize_topology(const NetworkTopology& t);

/// Number of amplifier stages on a physical link: one inline amplifier per
/// started span beyond the first, plus the two terminal stages.
/// edfa_count(d, s) = ceil(d/s - 1) + 2.
int edfa_count(double distance_km, double span_km);

} // namespace cfog

#endif // CFOG_TOPOLOGY_HPP
