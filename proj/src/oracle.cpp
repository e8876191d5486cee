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

#include "cfog/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace cfog {

namespace {

constexpr double kTieEps = 1e-9;

long lceil(double v) {
    return static_cast<long>(std::max(0.0, std::ceil(v - 1e-9)));
}
long lfloor(double v) {
    return static_cast<long>(std::max(0.0, std::floor(v + 1e-9)));
}

// ---------- core transport oracle ----------

struct CoreProblem {
    const NetworkTopology& topo;
    const DeviceCatalog& cat;
    std::vector<std::pair<int, int>> commodities;
    std::vector<double> demand;
    std::vector<std::pair<int, int>> arcs;   // directed
    std::vector<int> arc_amps;               // EDFA count per arc
};

// All simple paths between two nodes as arc-index sequences.
void simple_paths(const CoreProblem& pb, int from, int to, std::vector<std::vector<int>>& out) {
    int n = pb.topo.node_count();
    std::vector<int> path_arcs;
    std::vector<char> used(n, 0);
    std::function<void(int)> dfs = [&](int at) {
        if (at == to) {
            out.push_back(path_arcs);
            return;
        }
        used[at] = 1;
        for (size_t a = 0; a < pb.arcs.size(); ++a) {
            if (pb.arcs[a].first != at || used[pb.arcs[a].second]) continue;
            path_arcs.push_back(static_cast<int>(a));
            dfs(pb.arcs[a].second);
            path_arcs.pop_back();
        }
        used[at] = 0;
    };
    dfs(from);
}

// Minimum physical cost of provisioning the given per-virtual-link wavelength
// counts: every lightpath takes a simple path; counts may split over paths.
double best_physical_cost(const CoreProblem& pb,
                          const std::vector<std::pair<std::pair<int, int>, long>>& vlinks) {
    struct VPaths {
        long count = 0;
        std::vector<std::vector<int>> paths;
    };
    std::vector<VPaths> vp;
    for (const auto& [pair, count] : vlinks) {
        if (count == 0) continue;
        VPaths v;
        v.count = count;
        simple_paths(pb, pair.first, pair.second, v.paths);
        if (v.paths.empty()) throw TooLarge("oracle: no physical path for a virtual link");
        if (v.paths.size() > 4) throw TooLarge("oracle: too many physical paths to enumerate");
        vp.push_back(std::move(v));
    }

    std::vector<long> arc_wp(pb.arcs.size(), 0);
    double best = std::numeric_limits<double>::infinity();

    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == vp.size()) {
            double cost = 0.0;
            for (size_t a = 0; a < pb.arcs.size(); ++a) {
                cost += pb.cat.transponder_power_w * arc_wp[a];
                long fibers = lceil(double(arc_wp[a]) / pb.cat.wavelengths_per_fiber);
                cost += pb.cat.edfa_power_w * pb.arc_amps[a] * fibers;
            }
            best = std::min(best, cost);
            return;
        }
        const VPaths& v = vp[k];
        // distribute v.count lightpaths over v.paths
        std::vector<long> share(v.paths.size(), 0);
        std::function<void(size_t, long)> split = [&](size_t pi, long left) {
            if (pi + 1 == v.paths.size()) {
                share[pi] = left;
                for (size_t q = 0; q < v.paths.size(); ++q)
                    for (int a : v.paths[q]) arc_wp[a] += share[q];
                rec(k + 1);
                for (size_t q = 0; q < v.paths.size(); ++q)
                    for (int a : v.paths[q]) arc_wp[a] -= share[q];
                return;
            }
            for (long c = 0; c <= left; ++c) {
                share[pi] = c;
                split(pi + 1, left - c);
            }
        };
        split(0, v.count);
    };
    rec(0);
    return best;
}

// Exact core transport optimum: enumerate per-commodity virtual routes with
// breakpoint splits, then provision and route the wavelengths physically.
double core_optimum(const CoreProblem& pb) {
    if (pb.commodities.empty()) return 0.0;
    if (pb.topo.node_count() > 3) throw TooLarge("oracle: core with more than 3 nodes");
    if (pb.commodities.size() > 2) throw TooLarge("oracle: more than 2 traffic commodities");

    int n = pb.topo.node_count();
    const double rate = pb.cat.wavelength_rate_gbps;

    // Virtual routes: the direct link or a two-hop detour.
    struct Route {
        std::vector<std::pair<int, int>> vlinks;
    };
    std::vector<std::vector<Route>> routes(pb.commodities.size());
    for (size_t k = 0; k < pb.commodities.size(); ++k) {
        auto [s, d] = pb.commodities[k];
        routes[k].push_back({{{s, d}}});
        for (int m = 0; m < n; ++m)
            if (m != s && m != d) routes[k].push_back({{{s, m}, {m, d}}});
    }

    // Candidate split of each commodity between its first route and one
    // alternative: all-or-nothing plus wavelength-capacity breakpoints.
    auto split_grid = [&](double demand) {
        std::set<double> g{0.0, demand};
        for (double v = rate; v < demand; v += rate) {
            g.insert(v);
            g.insert(demand - v);
        }
        return std::vector<double>(g.begin(), g.end());
    };

    std::map<std::pair<int, int>, double> vload;
    double best = std::numeric_limits<double>::infinity();

    std::function<void(size_t)> assign = [&](size_t k) {
        if (k == pb.commodities.size()) {
            std::vector<std::pair<std::pair<int, int>, long>> vlinks;
            double port_cost = 0.0;
            for (const auto& [pair, load] : vload) {
                if (load <= 0) continue;
                long wv = lceil(load / rate);
                port_cost += pb.cat.core_router_port_power_w * wv;
                vlinks.push_back({pair, wv});
            }
            double cost = port_cost + best_physical_cost(pb, vlinks);
            best = std::min(best, cost);
            return;
        }
        double demand = pb.demand[k];
        auto add = [&](const Route& r, double amount) {
            for (auto vl : r.vlinks) vload[vl] += amount;
        };
        auto sub = [&](const Route& r, double amount) {
            for (auto vl : r.vlinks) {
                vload[vl] -= amount;
                if (std::abs(vload[vl]) < 1e-12) vload.erase(vl);
            }
        };
        for (size_t r1 = 0; r1 < routes[k].size(); ++r1) {
            for (size_t r2 = 0; r2 < routes[k].size(); ++r2) {
                if (r2 < r1) continue;
                if (r1 == r2) {
                    add(routes[k][r1], demand);
                    assign(k + 1);
                    sub(routes[k][r1], demand);
                    continue;
                }
                for (double g : split_grid(demand)) {
                    if (g <= 0 || g >= demand) continue;
                    add(routes[k][r1], g);
                    add(routes[k][r2], demand - g);
                    assign(k + 1);
                    sub(routes[k][r1], g);
                    sub(routes[k][r2], demand - g);
                }
            }
        }
    };
    assign(0);
    return best;
}

// ---------- placement oracle ----------

enum class SiteKind { Access, Metro, Cloud };

struct CandidateSite {
    SiteKind kind;
    int pon = -1;   // for access
    int node = -1;  // owning node (access/metro) or host node (cloud)
};

struct PlacementProblem {
    const NetworkTopology& topo;
    const DeviceCatalog& cat;
    const DemandScenario& scen;
    const FormulationOptions& opt;
    int slot;
    const VmSpec* vm = nullptr;
    std::vector<CandidateSite> sites;
    std::vector<double> pon_demand;       // per PON
    std::vector<double> node_t_up;        // scaled background origin traffic
};

double profile_workload(const PlacementProblem& pb, double load, long replicas) {
    const VmSpec& vm = *pb.vm;
    if (pb.opt.workload_profile == WorkloadProfile::Constant)
        return vm.max_workload_pct * replicas;
    double umd = vm_unit_capacity(vm);
    double slope = (vm.max_workload_pct - vm.min_workload_pct) / umd;
    return slope * load + vm.min_workload_pct * replicas;
}

// Best brown cost of one access site given its load, replica count and solar
// budget; enumerates the green split exactly.
double access_site_brown_cost(const PlacementProblem& pb, double load, long replicas,
                              double solar) {
    const DeviceCatalog& c = pb.cat;
    double tw = profile_workload(pb, load, replicas);
    long srv = lceil(tw / c.server_max_workload_pct);
    long rtr = lceil(load / c.access_router_bitrate_gbps);
    long sw = lceil(load / c.access_switch_bitrate_gbps);
    double base = c.access_pue * c.server_power_w * srv + c.access_router_power_w * rtr +
                  c.access_switch_power_w * sw;
    if (!pb.opt.solar_enabled || solar <= 0) return base;

    long gs_cap = std::min(srv, lfloor(tw / c.server_max_workload_pct));
    long gr_cap = std::min(rtr, lfloor(load / c.access_router_bitrate_gbps));
    long gw_cap = std::min(sw, lfloor(load / c.access_switch_bitrate_gbps));
    double best_offset = 0.0;
    for (long gs = 0; gs <= gs_cap; ++gs)
        for (long gw = 0; gw <= gw_cap; ++gw)
            for (long gr = 0; gr <= gr_cap; ++gr) {
                double draw = c.server_power_w * gs + c.access_switch_power_w * gw +
                              c.access_router_power_w * gr;
                if (draw > solar + kTieEps) continue;
                double offset = c.access_pue * c.server_power_w * gs +
                                c.access_switch_power_w * gw + c.access_router_power_w * gr;
                best_offset = std::max(best_offset, offset);
            }
    return base - best_offset;
}

// Evaluates one full demand split: loads[k] is the traffic served by site k,
// by_dest[k][d] its share arriving at node d.
double placement_cost(const PlacementProblem& pb, const std::vector<double>& loads,
                      const std::vector<std::vector<double>>& by_dest,
                      const std::vector<long>& replica_extra) {
    const DeviceCatalog& c = pb.cat;
    const NetworkTopology& t = pb.topo;
    double umd = vm_unit_capacity(*pb.vm);
    int N = t.node_count();

    double cost = 0.0;
    std::vector<double> metro_into(N, 0.0), cloud_into(N, 0.0);

    for (size_t k = 0; k < pb.sites.size(); ++k) {
        double load = loads[k];
        const CandidateSite& s = pb.sites[k];
        long reps = load > 0 ? lceil(load / umd) + replica_extra[k] : replica_extra[k];
        if (load <= 0 && reps == 0) continue;
        double tw = profile_workload(pb, load, reps);
        long srv = lceil(tw / c.server_max_workload_pct);
        switch (s.kind) {
            case SiteKind::Access: {
                double solar = pb.opt.solar_enabled ? pb.scen.solar_w[pb.slot][s.pon] : 0.0;
                cost += access_site_brown_cost(pb, load, reps, solar);
                break;
            }
            case SiteKind::Metro: {
                long rtr = lceil(load / c.metro_router_bitrate_gbps);
                long sw = lceil(load / c.metro_switch_bitrate_gbps);
                cost += c.metro_pue * c.server_power_w * srv + c.metro_router_power_w * rtr +
                        c.metro_switch_power_w * sw;
                metro_into[s.node] += load;
                break;
            }
            case SiteKind::Cloud: {
                long rtr = lceil(load / c.cloud_router_bitrate_gbps);
                long sw = lceil(load / c.cloud_switch_bitrate_gbps);
                cost += c.cloud_pue * c.server_power_w * srv + c.cloud_router_power_w * rtr +
                        c.cloud_switch_power_w * sw;
                for (int d = 0; d < N; ++d) cloud_into[d] += by_dest[k][d];
                break;
            }
        }
    }

    for (int n = 0; n < N; ++n) {
        double transit = metro_into[n] + cloud_into[n] + pb.node_t_up[n];
        if (pb.opt.layers.metro || pb.opt.layers.cloud) {
            long mnr = lceil(transit / c.metro_node_router_bitrate_gbps);
            long mnsw = lceil(transit / c.metro_node_switch_bitrate_gbps);
            cost += c.metro_node_router_power_w * c.metro_node_redundancy * mnr +
                    c.metro_node_switch_power_w * mnsw;
        }
        double boundary = pb.node_t_up[n] + cloud_into[n];
        if (boundary > 0)
            cost += c.core_router_port_power_w * lceil(boundary / c.wavelength_rate_gbps);
    }

    for (int p = 0; p < t.pon_count(); ++p) {
        double users = pb.scen.user_count(pb.slot, 0, p);
        long olts = std::max<long>(1, lceil(pb.pon_demand[p] / c.olt_capacity_gbps));
        cost += c.olt_power_w * olts + c.onu_power_w * users;
    }
    return cost;
}

double placement_optimum(const PlacementProblem& pb) {
    const NetworkTopology& t = pb.topo;
    int N = t.node_count();
    int P = t.pon_count();
    double umd = vm_unit_capacity(*pb.vm);
    const double eps = pb.opt.indicator_epsilon;
    const VmSpec& vm = *pb.vm;

    // One assignment option: shares of one PON's demand over sites.
    struct Option {
        std::vector<std::pair<int, double>> shares;  // (site index, load)
    };
    std::vector<std::vector<Option>> pon_options(P);

    std::vector<std::vector<int>> allowed(P);
    for (int p = 0; p < P; ++p)
        for (size_t k = 0; k < pb.sites.size(); ++k) {
            const CandidateSite& s = pb.sites[k];
            bool ok = (s.kind == SiteKind::Access && s.pon == p) ||
                      (s.kind == SiteKind::Metro && s.node == t.pons[p].node) ||
                      s.kind == SiteKind::Cloud;
            if (ok) allowed[p].push_back(static_cast<int>(k));
        }

    auto site_grid = [&](const CandidateSite& s, double demand) {
        std::set<double> g;
        auto add_multiples = [&](double step) {
            for (double v = step; v < demand - eps; v += step) g.insert(v);
        };
        add_multiples(umd);
        double rbr = s.kind == SiteKind::Access  ? pb.cat.access_router_bitrate_gbps
                     : s.kind == SiteKind::Metro ? pb.cat.metro_router_bitrate_gbps
                                                 : pb.cat.cloud_router_bitrate_gbps;
        double swb = s.kind == SiteKind::Access  ? pb.cat.access_switch_bitrate_gbps
                     : s.kind == SiteKind::Metro ? pb.cat.metro_switch_bitrate_gbps
                                                 : pb.cat.cloud_switch_bitrate_gbps;
        add_multiples(rbr);
        add_multiples(swb);
        if (s.kind != SiteKind::Access)
            add_multiples(pb.cat.metro_node_router_bitrate_gbps);
        if (s.kind == SiteKind::Cloud)
            add_multiples(pb.cat.wavelength_rate_gbps);
        // loads where the linear-profile workload crosses a server boundary
        if (pb.opt.workload_profile == WorkloadProfile::Linear) {
            double slope = (vm.max_workload_pct - vm.min_workload_pct) / umd;
            long rmax = lceil(demand / umd) + 1;
            for (long r = 1; r <= rmax; ++r)
                for (long srv = 1; srv <= rmax + 2; ++srv) {
                    double load = (pb.cat.server_max_workload_pct * srv -
                                   vm.min_workload_pct * r) / slope;
                    if (load > eps && load < demand - eps && lceil(load / umd) == r)
                        g.insert(load);
                }
        } else {
            // constant profile: server count changes only with replicas
        }
        return g;
    };

    for (int p = 0; p < P; ++p) {
        double demand = pb.pon_demand[p];
        if (demand <= 0) {
            pon_options[p].push_back(Option{});
            continue;
        }
        for (int k : allowed[p]) pon_options[p].push_back(Option{{{k, demand}}});
        for (int k1 : allowed[p])
            for (int k2 : allowed[p]) {
                if (k1 == k2) continue;
                for (double g : site_grid(pb.sites[k1], demand)) {
                    if (g < eps || demand - g < eps) continue;
                    pon_options[p].push_back(Option{{{k1, g}, {k2, demand - g}}});
                }
            }
        if (pon_options[p].empty())
            throw TooLarge("oracle: PON " + t.pons[p].id + " has demand but no candidate site");
    }

    double combos = 1.0;
    for (int p = 0; p < P; ++p) combos *= double(pon_options[p].size());
    if (combos > 2e6) throw TooLarge("oracle: placement enumeration too large");

    std::vector<double> loads(pb.sites.size(), 0.0);
    std::vector<std::vector<double>> by_dest(pb.sites.size(), std::vector<double>(N, 0.0));
    double best = std::numeric_limits<double>::infinity();

    // Replica inflation is only ever profitable at solar-lit access sites,
    // where extra idle workload can unlock another green server (cap c62).
    auto eval_with_inflation = [&]() {
        std::vector<int> solar_sites;
        if (pb.opt.solar_enabled)
            for (size_t k = 0; k < pb.sites.size(); ++k)
                if (pb.sites[k].kind == SiteKind::Access && loads[k] > 0 &&
                    pb.scen.solar_w[pb.slot][pb.sites[k].pon] > 0)
                    solar_sites.push_back(static_cast<int>(k));
        std::vector<long> extra(pb.sites.size(), 0);
        if (solar_sites.empty() || pb.vm->min_workload_pct <= 0) {
            best = std::min(best, placement_cost(pb, loads, by_dest, extra));
            return;
        }
        long max_extra = lceil(pb.cat.server_max_workload_pct / vm.min_workload_pct) + 1;
        std::function<void(size_t)> rec = [&](size_t i) {
            if (i == solar_sites.size()) {
                best = std::min(best, placement_cost(pb, loads, by_dest, extra));
                return;
            }
            long base = lceil(loads[solar_sites[i]] / umd);
            long cap = std::min(2 * base + 2, base + max_extra) - base;
            for (long e = 0; e <= cap; ++e) {
                extra[solar_sites[i]] = e;
                rec(i + 1);
            }
            extra[solar_sites[i]] = 0;
        };
        rec(0);
    };

    std::function<void(int)> walk = [&](int p) {
        if (p == P) {
            eval_with_inflation();
            return;
        }
        for (const Option& opt : pon_options[p]) {
            for (const auto& [k, share] : opt.shares) {
                loads[k] += share;
                by_dest[k][t.pons[p].node] += share;
            }
            walk(p + 1);
            for (const auto& [k, share] : opt.shares) {
                loads[k] -= share;
                by_dest[k][t.pons[p].node] -= share;
            }
        }
    };
    walk(0);
    return best;
}

} // namespace

double oracle_slot_optimum(const TinyInstance& inst, int slot) {
    const NetworkTopology& t = inst.topo;
    const DemandScenario& s = inst.scenario;
    if (t.node_count() > 3) throw TooLarge("oracle: more than 3 core nodes");
    if (t.pon_count() > 2) throw TooLarge("oracle: more than 2 PONs");
    if (s.slot_count() > 3) throw TooLarge("oracle: more than 3 slots");
    if (s.vm_count() != 1) throw TooLarge("oracle: exactly one VM supported");

    // Core transport block.
    CoreProblem core{t, inst.catalog, {}, {}, {}, {}};
    for (int l = 0; l < t.link_count(); ++l) {
        int amps = edfa_count(t.links[l].distance_km, inst.catalog.edfa_span_km);
        core.arcs.emplace_back(t.links[l].a, t.links[l].b);
        core.arc_amps.push_back(amps);
        core.arcs.emplace_back(t.links[l].b, t.links[l].a);
        core.arc_amps.push_back(amps);
    }
    for (int a = 0; a < t.node_count(); ++a)
        for (int b = 0; b < t.node_count(); ++b)
            if (a != b && s.traffic(slot, a, b) * inst.options.traffic_scale > 0) {
                core.commodities.emplace_back(a, b);
                core.demand.push_back(s.traffic(slot, a, b) * inst.options.traffic_scale);
            }
    double core_w = core_optimum(core);

    // Placement block (includes metro-node, aggregation-port and OLT/ONU
    // power, which couple to the background traffic through their ceilings).
    double placement_w = 0.0;
    std::vector<double> t_up(t.node_count(), 0.0);
    for (int n = 0; n < t.node_count(); ++n)
        for (int d = 0; d < t.node_count(); ++d)
            if (d != n) t_up[n] += s.traffic(slot, n, d) * inst.options.traffic_scale;

    bool placement = inst.options.layers.any() && t.pon_count() > 0;
    if (placement) {
        PlacementProblem pb{t, inst.catalog, s, inst.options, slot, &s.vms[0], {}, {}, t_up};
        for (int p = 0; p < t.pon_count(); ++p) {
            pb.pon_demand.push_back(demand_request_rate(s.vms[0], s.user_count(slot, 0, p)));
            if (inst.options.layers.access)
                pb.sites.push_back({SiteKind::Access, p, t.pons[p].node});
        }
        for (int n = 0; n < t.node_count(); ++n) {
            if (inst.options.layers.metro && t.metro_presence[n])
                pb.sites.push_back({SiteKind::Metro, -1, n});
            if (inst.options.layers.cloud) pb.sites.push_back({SiteKind::Cloud, -1, n});
        }
        placement_w = placement_optimum(pb);
    } else {
        // Aggregation ports still terminate the background traffic.
        for (int n = 0; n < t.node_count(); ++n)
            if (t_up[n] > 0)
                placement_w += inst.catalog.core_router_port_power_w *
                               lceil(t_up[n] / inst.catalog.wavelength_rate_gbps);
    }
    return core_w + placement_w;
}

OracleResult oracle_optimum(const TinyInstance& inst) {
    OracleResult out;
    for (int slot = 0; slot < inst.scenario.slot_count(); ++slot) {
        double v = oracle_slot_optimum(inst, slot);
        out.slots.push_back({v, 0.0, 0.0});
        out.objective += v;
    }
    return out;
}

} // namespace cfog
