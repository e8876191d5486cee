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

#include "cfog/report.hpp"

#include <cmath>

namespace cfog {

const char* layer_name(Layer l) {
    switch (l) {
        case Layer::Access: return "access";
        case Layer::Metro: return "metro";
        case Layer::Cloud: return "cloud";
    }
    return "?";
}

namespace {

long lround_nonneg(double v) { return std::lround(std::max(0.0, v)); }

} // namespace

PlacementReport placement_report(const SlotFormulation& f, const SolveResult& result,
                                 const NetworkTopology& topo, const DeviceCatalog& cat,
                                 const DemandScenario& scen) {
    if (result.status != SolveStatus::Optimal)
        throw NonOptimalResult("placement_report: solver status is not Optimal");

    const MilpModel& model = f.model;
    const Assignment& a = result.assignment;
    std::string tag = slot_tag(f.hour);

    auto value = [&](const std::string& sym, const std::vector<std::string>& idx) {
        VarId v = model.find_variable(var_name(sym, idx));
        return v < 0 ? 0.0 : a[v];
    };
    auto present = [&](const std::string& sym, const std::vector<std::string>& idx) {
        return model.find_variable(var_name(sym, idx)) >= 0;
    };

    PlacementReport rep;
    rep.hour = f.hour;
    rep.objective = result.objective;

    // Core transport power, replaying the objective coefficients.
    for (size_t arc = 0; arc < f.arcs.size(); ++arc) {
        std::string an = topo.node_names[f.arcs[arc].first];
        std::string bn = topo.node_names[f.arcs[arc].second];
        double wp = value("WP", {an, bn, tag});
        double fp = value("FP", {an, bn, tag});
        rep.physical_wavelengths += lround_nonneg(wp);
        rep.power.transponder_w += cat.transponder_power_w * wp;
        int amps = edfa_count(topo.links[f.arc_link[arc]].distance_km, cat.edfa_span_km);
        rep.power.edfa_w += cat.edfa_power_w * amps * fp;
    }
    if (f.core_built) {
        for (int i = 0; i < topo.node_count(); ++i)
            for (int j = 0; j < topo.node_count(); ++j)
                if (i != j) {
                    double wv = value("WV", {topo.node_names[i], topo.node_names[j], tag});
                    rep.virtual_wavelengths += lround_nonneg(wv);
                    rep.power.router_port_w += cat.core_router_port_power_w * wv;
                }
    }
    for (int n = 0; n < topo.node_count(); ++n) {
        double ports = value("RPAGG", {topo.node_names[n], tag});
        rep.aggregation_ports += lround_nonneg(ports);
        rep.power.router_port_w += cat.core_router_port_power_w * ports;
    }

    // Data-center devices and power per layer.
    for (int p = 0; p < topo.pon_count(); ++p) {
        const std::string& pid = topo.pons[p].id;
        if (present("AAS", {pid, tag})) {
            SiteDevices d;
            d.layer = Layer::Access;
            d.site = pid;
            d.servers = lround_nonneg(value("AAS", {pid, tag}));
            d.routers = lround_nonneg(value("AAR", {pid, tag}));
            d.switches = lround_nonneg(value("AASW", {pid, tag}));
            if (f.options.solar_enabled) {
                d.green_servers = lround_nonneg(value("AGS", {pid, tag}));
                d.green_routers = lround_nonneg(value("AGR", {pid, tag}));
                d.green_switches = lround_nonneg(value("AGSW", {pid, tag}));
                rep.power.access_dc_w +=
                    cat.access_pue * cat.server_power_w * value("BAS", {pid, tag}) +
                    cat.access_router_power_w * value("BAR", {pid, tag}) +
                    cat.access_switch_power_w * value("BASW", {pid, tag});
            } else {
                rep.power.access_dc_w += cat.access_pue * cat.server_power_w * d.servers +
                                         cat.access_router_power_w * d.routers +
                                         cat.access_switch_power_w * d.switches;
            }
            if (d.servers + d.routers + d.switches > 0) rep.devices.push_back(d);
        }
        rep.power.olt_w += cat.olt_power_w * value("OLT", {pid, tag});
        rep.power.onu_w += cat.onu_power_w * value("ONU", {pid, tag});
    }
    for (int n = 0; n < topo.node_count(); ++n) {
        const std::string& nid = topo.node_names[n];
        if (present("MAS", {nid, tag})) {
            SiteDevices d;
            d.layer = Layer::Metro;
            d.site = nid;
            d.servers = lround_nonneg(value("MAS", {nid, tag}));
            d.routers = lround_nonneg(value("MAR", {nid, tag}));
            d.switches = lround_nonneg(value("MASW", {nid, tag}));
            rep.power.metro_dc_w += cat.metro_pue * cat.server_power_w * d.servers +
                                    cat.metro_router_power_w * d.routers +
                                    cat.metro_switch_power_w * d.switches;
            if (d.servers + d.routers + d.switches > 0) rep.devices.push_back(d);
        }
        if (present("CAS", {nid, tag})) {
            SiteDevices d;
            d.layer = Layer::Cloud;
            d.site = nid;
            d.servers = lround_nonneg(value("CAS", {nid, tag}));
            d.routers = lround_nonneg(value("CAR", {nid, tag}));
            d.switches = lround_nonneg(value("CASW", {nid, tag}));
            rep.power.cloud_dc_w += cat.cloud_pue * cat.server_power_w * d.servers +
                                    cat.cloud_router_power_w * d.routers +
                                    cat.cloud_switch_power_w * d.switches;
            if (d.servers + d.routers + d.switches > 0) rep.devices.push_back(d);
        }
        rep.power.metro_node_w +=
            cat.metro_node_router_power_w * cat.metro_node_redundancy * value("MNR", {nid, tag}) +
            cat.metro_node_switch_power_w * value("MNSW", {nid, tag});
    }

    // VM placements with their replica counts and workloads.
    for (int x = 0; x < scen.vm_count(); ++x) {
        const std::string& vid = scen.vms[x].id;
        for (int p = 0; p < topo.pon_count(); ++p) {
            double r = value("RVMA", {vid, topo.pons[p].id, tag});
            if (r > f.options.indicator_epsilon / 2) {
                SitePlacement sp;
                sp.layer = Layer::Access;
                sp.vm = vid;
                sp.site = topo.pons[p].id;
                sp.response_gbps = r;
                sp.replicas = value("REPA", {vid, topo.pons[p].id, tag});
                sp.workload_pct = value("TVMA", {vid, topo.pons[p].id, tag});
                rep.fog_replicas += sp.replicas;
                rep.placements.push_back(sp);
            }
        }
        for (int n = 0; n < topo.node_count(); ++n) {
            const std::string& nid = topo.node_names[n];
            double rm = value("RVMM", {vid, nid, tag});
            if (rm > f.options.indicator_epsilon / 2) {
                SitePlacement sp;
                sp.layer = Layer::Metro;
                sp.vm = vid;
                sp.site = nid;
                sp.response_gbps = rm;
                sp.replicas = value("REPM", {vid, nid, tag});
                sp.workload_pct = value("TVMM", {vid, nid, tag});
                rep.fog_replicas += sp.replicas;
                rep.placements.push_back(sp);
            }
            double rc = 0.0;
            for (int d = 0; d < topo.node_count(); ++d)
                rc += value("RVMC", {vid, nid, topo.node_names[d], tag});
            if (rc > f.options.indicator_epsilon / 2) {
                SitePlacement sp;
                sp.layer = Layer::Cloud;
                sp.vm = vid;
                sp.site = nid;
                sp.response_gbps = rc;
                sp.replicas = value("REPC", {vid, nid, tag});
                sp.workload_pct = value("TVMC", {vid, nid, tag});
                rep.cloud_replicas += sp.replicas;
                rep.placements.push_back(sp);
            }
        }
    }

    double delta = std::abs(rep.power.total_w() - rep.objective);
    if (delta > 1e-6 * std::max(1.0, std::abs(rep.objective)))
        throw NonOptimalResult("placement_report: power breakdown does not sum to the objective");
    return rep;
}

} // namespace cfog
