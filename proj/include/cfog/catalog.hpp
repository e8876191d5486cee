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

#ifndef CFOG_CATALOG_HPP
#define CFOG_CATALOG_HPP

#include <string>
#include <vector>

#include "cfog/textio.hpp"

namespace cfog {

/// Every device power/capacity parameter of the network model. Rates are
/// normalized to Gb/s and powers to watts at load time. Immutable after load.
struct DeviceCatalog {
    // Core / IP-over-WDM and cloud data centers.
    int wavelengths_per_fiber = 32;
    double wavelength_rate_gbps = 40.0;
    double edfa_span_km = 80.0;
    double edfa_power_w = 55.0;
    double transponder_power_w = 167.0;
    double core_router_port_power_w = 638.0;
    double cloud_pue = 1.3;
    double cloud_switch_power_w = 470.0;
    double cloud_switch_bitrate_gbps = 600.0;
    double cloud_router_power_w = 30.0;
    double cloud_router_bitrate_gbps = 40.0;

    // Metro fog data centers and metro aggregation nodes.
    double metro_pue = 1.4;
    double metro_switch_power_w = 470.0;
    double metro_switch_bitrate_gbps = 600.0;
    double metro_router_power_w = 13.0;
    double metro_router_bitrate_gbps = 600.0;
    double metro_node_router_power_w = 30.0;
    double metro_node_router_bitrate_gbps = 40.0;
    double metro_node_switch_power_w = 55.0;
    double metro_node_switch_bitrate_gbps = 384.0;
    double metro_node_redundancy = 2.0;

    // Access fogs and the PON.
    double access_pue = 1.5;
    double access_switch_power_w = 102.0;
    double access_switch_bitrate_gbps = 160.0;
    double access_router_power_w = 13.0;
    double access_router_bitrate_gbps = 40.0;
    double olt_power_w = 1842.0;
    double olt_capacity_gbps = 1280.0;
    double onu_power_w = 5.0;

    // Servers.
    double server_power_w = 450.0;
    double server_max_workload_pct = 100.0;
};

struct CatalogViolation {
    std::string kind;  // NonPositive, PueBelowOne, NonIntegral
    std::string key;
    double value = 0.0;
};

DeviceCatalog load_catalog(const std::string& path);
DeviceCatalog parse_catalog(const TextDocument& doc);
std::vector<CatalogViolation> validate_catalog(const DeviceCatalog& c);

} // namespace cfog

#endif // CFOG_CATALOG_HPP
