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

#include "cfog/formulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace cfog {

std::string slot_tag(double hour) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "t%g", hour);
    return buf;
}

std::string var_name(const std::string& sym, const std::vector<std::string>& indices) {
    std::string out = sym;
    out += '[';
    for (size_t i = 0; i < indices.size(); ++i) {
        if (i) out += ',';
        out += indices[i];
    }
    out += ']';
    return out;
}

double big_m_value(const DemandScenario& scenario, const std::vector<VmSpec>& vms) {
    double total_users = 0.0;
    for (const auto& slot : scenario.users)
        for (double u : slot) total_users += u;
    double max_rate = 0.0;
    for (const auto& vm : vms) max_rate = std::max(max_rate, vm.user_download_rate_gbps);
    return std::max(10.0, 10.0 * total_users * max_rate);
}

namespace {

int iceil(double v) {
    double c = std::ceil(v - 1e-9);
    return static_cast<int>(std::max(0.0, c));
}

// Assembles one slot. The member functions map one-to-one onto the build
// operations of the module contract; `build_all` runs them in order.
class SlotBuilder {
public:
    SlotBuilder(const NetworkTopology& topo, const DeviceCatalog& cat,
                const DemandScenario& scen, int slot, const FormulationOptions& opt,
                MilpModel* shared_model)
        : topo_(topo), cat_(cat), scen_(scen), slot_(slot), opt_(opt),
          owned_(shared_model == nullptr), model_(shared_model ? *shared_model : local_model_) {
        f_.slot = slot;
        f_.hour = scen.time_slots[slot];
        f_.options = opt;
        tag_ = slot_tag(f_.hour);
        N_ = topo.node_count();
        P_ = topo.pon_count();
        X_ = scen.vm_count();
        big_m_ = opt.big_m_override ? *opt.big_m_override : big_m_value(scen, scen.vms);
        if (opt.big_m_override) {
            double needed = 0.0;
            for (int x = 0; x < X_; ++x)
                for (int p = 0; p < P_; ++p) needed += rt_value(x, p);
            if (*opt.big_m_override < needed)
                throw ValidationError("big_m_override " + std::to_string(*opt.big_m_override) +
                                      " does not exceed the demand bound " +
                                      std::to_string(needed));
        }
        f_.big_m = big_m_;
    }

    void build_all() {
        build_core_network();
        build_vm_placement();
        build_dimensioning();
        add_green_constraints();
        build_layer_power();
    }

    SlotFormulation finish() {
        if (owned_) {
            model_.name = "slot_" + tag_;
            model_.freeze();
            f_.model = std::move(local_model_);
        }
        return std::move(f_);
    }

    // ---- core IP-over-WDM transport: constraints (21)-(24) ----
    void build_core_network() {
        double scale = opt_.traffic_scale;
        double total_traffic = 0.0;
        for (int s = 0; s < N_; ++s)
            for (int d = 0; d < N_; ++d)
                if (s != d) total_traffic += scen_.traffic(slot_, s, d) * scale;
        if (total_traffic <= 0.0) return;  // demand-free slot: no transport block
        f_.core_built = true;

        for (int s = 0; s < N_; ++s)
            for (int d = 0; d < N_; ++d)
                if (s != d && scen_.traffic(slot_, s, d) * scale > 0.0)
                    f_.commodities.emplace_back(s, d);

        // Directed physical arcs, both directions of every bidirectional link.
        for (int l = 0; l < topo_.link_count(); ++l) {
            f_.arcs.emplace_back(topo_.links[l].a, topo_.links[l].b);
            f_.arc_link.push_back(l);
            f_.arcs.emplace_back(topo_.links[l].b, topo_.links[l].a);
            f_.arc_link.push_back(l);
        }

        const double rate = cat_.wavelength_rate_gbps;
        int wv_ub = iceil(total_traffic / rate);

        // Virtual links between every ordered node pair.
        wv_.assign(N_ * N_, -1);
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j)
                if (i != j)
                    wv_[i * N_ + j] = model_.add_variable(
                        var_name("WV", {node(i), node(j), tag_}), VarKind::Integer, 0, wv_ub);

        vt_.assign(f_.commodities.size(), {});
        for (size_t k = 0; k < f_.commodities.size(); ++k) {
            auto [s, d] = f_.commodities[k];
            double demand = scen_.traffic(slot_, s, d) * scale;
            vt_[k].assign(N_ * N_, -1);
            for (int i = 0; i < N_; ++i)
                for (int j = 0; j < N_; ++j)
                    if (i != j)
                        vt_[k][i * N_ + j] = model_.add_variable(
                            var_name("VT", {node(s), node(d), node(i), node(j), tag_}),
                            VarKind::Continuous, 0, demand);
        }

        // PT routes the lightpaths of virtual link (s,d) over physical arcs.
        pt_.assign(N_ * N_, {});
        for (int s = 0; s < N_; ++s)
            for (int d = 0; d < N_; ++d) {
                if (s == d) continue;
                auto& row = pt_[s * N_ + d];
                row.assign(f_.arcs.size(), -1);
                for (size_t a = 0; a < f_.arcs.size(); ++a)
                    row[a] = model_.add_variable(
                        var_name("PT", {node(s), node(d), node(f_.arcs[a].first),
                                        node(f_.arcs[a].second), tag_}),
                        VarKind::Integer, 0, wv_ub);
            }

        wp_.assign(f_.arcs.size(), -1);
        fp_.assign(f_.arcs.size(), -1);
        int wp_ub = wv_ub * N_ * (N_ - 1);  // every lightpath through one arc, worst case
        for (size_t a = 0; a < f_.arcs.size(); ++a) {
            std::string an = node(f_.arcs[a].first), bn = node(f_.arcs[a].second);
            wp_[a] = model_.add_variable(var_name("WP", {an, bn, tag_}), VarKind::Integer, 0,
                                         wp_ub);
            fp_[a] = model_.add_variable(var_name("FP", {an, bn, tag_}), VarKind::Integer, 0,
                                         iceil(double(wp_ub) / cat_.wavelengths_per_fiber));
        }

        // (22) virtual-link capacity: traffic on (i,j) fits the wavelengths.
        for (int i = 0; i < N_; ++i)
            for (int j = 0; j < N_; ++j) {
                if (i == j) continue;
                std::vector<std::pair<double, VarId>> terms;
                for (size_t k = 0; k < f_.commodities.size(); ++k)
                    terms.emplace_back(1.0, vt_[k][i * N_ + j]);
                terms.emplace_back(-rate, wv_[i * N_ + j]);
                model_.add_constraint(var_name("c22", {node(i), node(j), tag_}), terms,
                                      Sense::LessEqual, 0.0);
            }

        // (23) packet-flow conservation over the virtual topology.
        for (size_t k = 0; k < f_.commodities.size(); ++k) {
            auto [s, d] = f_.commodities[k];
            double demand = scen_.traffic(slot_, s, d) * scale;
            for (int j = 0; j < N_; ++j) {
                std::vector<std::pair<double, VarId>> terms;
                for (int i = 0; i < N_; ++i) {
                    if (i == j) continue;
                    terms.emplace_back(1.0, vt_[k][j * N_ + i]);
                    terms.emplace_back(-1.0, vt_[k][i * N_ + j]);
                }
                double rhs = j == s ? demand : (j == d ? -demand : 0.0);
                model_.add_constraint(var_name("c23", {node(s), node(d), node(j), tag_}), terms,
                                      Sense::Equal, rhs);
            }
        }

        // (24) lightpath conservation over the physical topology.
        for (int s = 0; s < N_; ++s)
            for (int d = 0; d < N_; ++d) {
                if (s == d) continue;
                for (int i = 0; i < N_; ++i) {
                    std::vector<std::pair<double, VarId>> terms;
                    for (size_t a = 0; a < f_.arcs.size(); ++a) {
                        if (f_.arcs[a].first == i) terms.emplace_back(1.0, pt_[s * N_ + d][a]);
                        if (f_.arcs[a].second == i) terms.emplace_back(-1.0, pt_[s * N_ + d][a]);
                    }
                    if (i == s) terms.emplace_back(-1.0, wv_[s * N_ + d]);
                    if (i == d) terms.emplace_back(1.0, wv_[s * N_ + d]);
                    model_.add_constraint(var_name("c24", {node(s), node(d), node(i), tag_}),
                                          terms, Sense::Equal, 0.0);
                }
            }

        // (21) used wavelengths per physical arc and the fiber capacity.
        for (size_t a = 0; a < f_.arcs.size(); ++a) {
            std::string an = node(f_.arcs[a].first), bn = node(f_.arcs[a].second);
            std::vector<std::pair<double, VarId>> def{{1.0, wp_[a]}};
            for (int s = 0; s < N_; ++s)
                for (int d = 0; d < N_; ++d)
                    if (s != d) def.emplace_back(-1.0, pt_[s * N_ + d][a]);
            model_.add_constraint(var_name("c21w", {an, bn, tag_}), def, Sense::Equal, 0.0);
            model_.add_constraint(
                var_name("c21", {an, bn, tag_}),
                {{1.0, wp_[a]}, {-double(cat_.wavelengths_per_fiber), fp_[a]}},
                Sense::LessEqual, 0.0);
        }
    }

    // ---- demand, placement indicators and workloads: (25)-(48) ----
    void build_vm_placement() {
        if (!opt_.layers.any()) return;
        bool any_users = false;
        for (int x = 0; x < X_; ++x)
            for (int p = 0; p < P_; ++p)
                if (scen_.user_count(slot_, x, p) > 0) any_users = true;
        if (P_ == 0 || X_ == 0) return;
        (void)any_users;  // zero-user slots still carry the OLT baseline
        f_.placement_built = true;

        const double eps = opt_.indicator_epsilon;

        rt_.assign(X_ * P_, -1);
        rvma_.assign(X_ * P_, -1);
        rvmm_.assign(X_ * N_, -1);
        rvmc_.assign(X_ * N_ * N_, -1);
        avm_.assign(X_ * P_, -1);
        mvm_.assign(X_ * N_, -1);
        cvm_.assign(X_ * N_, -1);
        repa_.assign(X_ * P_, -1);
        repm_.assign(X_ * N_, -1);
        repc_.assign(X_ * N_, -1);
        tvma_.assign(X_ * P_, -1);
        tvmm_.assign(X_ * N_, -1);
        tvmc_.assign(X_ * N_, -1);
        umd_.assign(X_, -1);

        // (26)/(39) demand parameters kept as pinned variables for audit.
        for (int x = 0; x < X_; ++x) {
            double umd = vm_unit_capacity(scen_.vms[x]);
            umd_[x] = model_.add_variable(var_name("UMD", {vm(x), tag_}), VarKind::Continuous,
                                          umd, umd);
            model_.add_constraint(var_name("c39", {vm(x), tag_}), {{1.0, umd_[x]}}, Sense::Equal,
                                  umd);
            for (int p = 0; p < P_; ++p) {
                double v = rt_value(x, p);
                rt_[x * P_ + p] = model_.add_variable(var_name("RT", {vm(x), pon(p), tag_}),
                                                      VarKind::Continuous, v, v);
                model_.add_constraint(var_name("c26", {vm(x), pon(p), tag_}),
                                      {{1.0, rt_[x * P_ + p]}}, Sense::Equal, v);
            }
        }

        for (int x = 0; x < X_; ++x) {
            double umd = vm_unit_capacity(scen_.vms[x]);
            for (int p = 0; p < P_; ++p) {
                if (!opt_.layers.access) continue;
                double cap = rt_value(x, p);
                rvma_[x * P_ + p] = model_.add_variable(
                    var_name("RVMA", {vm(x), pon(p), tag_}), VarKind::Continuous, 0, cap);
                avm_[x * P_ + p] = model_.add_variable(var_name("AVM", {vm(x), pon(p), tag_}),
                                                       VarKind::Binary, 0, 1);
                repa_[x * P_ + p] = model_.add_variable(var_name("REPA", {vm(x), pon(p), tag_}),
                                                        VarKind::Integer, 0,
                                                        2 * iceil(cap / umd) + 2);
                tvma_[x * P_ + p] = model_.add_variable(var_name("TVMA", {vm(x), pon(p), tag_}),
                                                        VarKind::Continuous, 0, kInfinity);
            }
            for (int n = 0; n < N_; ++n) {
                double node_cap = node_demand(x, n);
                if (opt_.layers.metro && topo_.metro_presence[n]) {
                    rvmm_[x * N_ + n] = model_.add_variable(
                        var_name("RVMM", {vm(x), node(n), tag_}), VarKind::Continuous, 0,
                        node_cap);
                    mvm_[x * N_ + n] = model_.add_variable(var_name("MVM", {vm(x), node(n), tag_}),
                                                           VarKind::Binary, 0, 1);
                    repm_[x * N_ + n] = model_.add_variable(
                        var_name("REPM", {vm(x), node(n), tag_}), VarKind::Integer, 0,
                        2 * iceil(node_cap / umd) + 2);
                    tvmm_[x * N_ + n] = model_.add_variable(
                        var_name("TVMM", {vm(x), node(n), tag_}), VarKind::Continuous, 0,
                        kInfinity);
                }
                if (opt_.layers.cloud) {
                    double total_cap = total_demand(x);
                    cvm_[x * N_ + n] = model_.add_variable(var_name("CVM", {vm(x), node(n), tag_}),
                                                           VarKind::Binary, 0, 1);
                    repc_[x * N_ + n] = model_.add_variable(
                        var_name("REPC", {vm(x), node(n), tag_}), VarKind::Integer, 0,
                        2 * iceil(total_cap / umd) + 2);
                    tvmc_[x * N_ + n] = model_.add_variable(
                        var_name("TVMC", {vm(x), node(n), tag_}), VarKind::Continuous, 0,
                        kInfinity);
                    for (int d = 0; d < N_; ++d) {
                        double dcap = node_demand(x, d);
                        if (dcap <= 0) continue;
                        rvmc_[(x * N_ + n) * N_ + d] = model_.add_variable(
                            var_name("RVMC", {vm(x), node(n), node(d), tag_}),
                            VarKind::Continuous, 0, dcap);
                    }
                }
            }
        }

        // (25) total demand equals the sum of all response traffic, plus the
        // per-node split and the own-PON access cap that make it physical.
        for (int x = 0; x < X_; ++x) {
            std::vector<std::pair<double, VarId>> total;
            for (int p = 0; p < P_; ++p) total.emplace_back(1.0, rt_[x * P_ + p]);
            for (int p = 0; p < P_; ++p)
                if (rvma_[x * P_ + p] >= 0) total.emplace_back(-1.0, rvma_[x * P_ + p]);
            for (int n = 0; n < N_; ++n)
                if (rvmm_[x * N_ + n] >= 0) total.emplace_back(-1.0, rvmm_[x * N_ + n]);
            for (int s = 0; s < N_; ++s)
                for (int d = 0; d < N_; ++d)
                    if (opt_.layers.cloud && rvmc_[(x * N_ + s) * N_ + d] >= 0)
                        total.emplace_back(-1.0, rvmc_[(x * N_ + s) * N_ + d]);
            model_.add_constraint(var_name("c25", {vm(x), tag_}), total, Sense::Equal, 0.0);

            for (int d = 0; d < N_; ++d) {
                std::vector<std::pair<double, VarId>> split;
                for (int p : topo_.node_pons[d]) split.emplace_back(1.0, rt_[x * P_ + p]);
                if (split.empty()) continue;
                for (int p : topo_.node_pons[d])
                    if (rvma_[x * P_ + p] >= 0) split.emplace_back(-1.0, rvma_[x * P_ + p]);
                if (rvmm_[x * N_ + d] >= 0) split.emplace_back(-1.0, rvmm_[x * N_ + d]);
                for (int s = 0; s < N_; ++s)
                    if (opt_.layers.cloud && rvmc_[(x * N_ + s) * N_ + d] >= 0)
                        split.emplace_back(-1.0, rvmc_[(x * N_ + s) * N_ + d]);
                model_.add_constraint(var_name("c25n", {vm(x), node(d), tag_}), split,
                                      Sense::Equal, 0.0);
            }
            for (int p = 0; p < P_; ++p)
                if (rvma_[x * P_ + p] >= 0)
                    model_.add_constraint(
                        var_name("c25a", {vm(x), pon(p), tag_}),
                        {{1.0, rvma_[x * P_ + p]}, {-1.0, rt_[x * P_ + p]}}, Sense::LessEqual,
                        0.0);
        }

        // (27)-(32) response traffic <-> placement indicator links.
        for (int x = 0; x < X_; ++x) {
            for (int p = 0; p < P_; ++p) {
                if (rvma_[x * P_ + p] < 0) continue;
                model_.add_constraint(var_name("c27", {vm(x), pon(p), tag_}),
                                      {{1.0, rvma_[x * P_ + p]}, {-eps, avm_[x * P_ + p]}},
                                      Sense::GreaterEqual, 0.0);
                model_.add_constraint(var_name("c28", {vm(x), pon(p), tag_}),
                                      {{1.0, rvma_[x * P_ + p]}, {-big_m_, avm_[x * P_ + p]}},
                                      Sense::LessEqual, 0.0);
            }
            for (int n = 0; n < N_; ++n) {
                if (rvmm_[x * N_ + n] >= 0) {
                    model_.add_constraint(var_name("c29", {vm(x), node(n), tag_}),
                                          {{1.0, rvmm_[x * N_ + n]}, {-eps, mvm_[x * N_ + n]}},
                                          Sense::GreaterEqual, 0.0);
                    model_.add_constraint(var_name("c30", {vm(x), node(n), tag_}),
                                          {{1.0, rvmm_[x * N_ + n]}, {-big_m_, mvm_[x * N_ + n]}},
                                          Sense::LessEqual, 0.0);
                }
                if (cvm_[x * N_ + n] >= 0) {
                    std::vector<std::pair<double, VarId>> lo{{-eps, cvm_[x * N_ + n]}};
                    std::vector<std::pair<double, VarId>> hi{{-big_m_, cvm_[x * N_ + n]}};
                    for (int d = 0; d < N_; ++d)
                        if (rvmc_[(x * N_ + n) * N_ + d] >= 0) {
                            lo.emplace_back(1.0, rvmc_[(x * N_ + n) * N_ + d]);
                            hi.emplace_back(1.0, rvmc_[(x * N_ + n) * N_ + d]);
                        }
                    model_.add_constraint(var_name("c31", {vm(x), node(n), tag_}), lo,
                                          Sense::GreaterEqual, 0.0);
                    model_.add_constraint(var_name("c32", {vm(x), node(n), tag_}), hi,
                                          Sense::LessEqual, 0.0);
                }
            }
        }

        // (33)-(38) data-center indicators over the VM indicators.
        adc_.assign(P_, -1);
        mdc_.assign(N_, -1);
        cdc_.assign(N_, -1);
        for (int p = 0; p < P_; ++p) {
            if (!opt_.layers.access) continue;
            adc_[p] = model_.add_variable(var_name("ADC", {pon(p), tag_}), VarKind::Binary, 0, 1);
            std::vector<std::pair<double, VarId>> lo{{-1.0, adc_[p]}}, hi{{-big_m_, adc_[p]}};
            for (int x = 0; x < X_; ++x) {
                lo.emplace_back(1.0, avm_[x * P_ + p]);
                hi.emplace_back(1.0, avm_[x * P_ + p]);
            }
            model_.add_constraint(var_name("c33", {pon(p), tag_}), lo, Sense::GreaterEqual, 0.0);
            model_.add_constraint(var_name("c34", {pon(p), tag_}), hi, Sense::LessEqual, 0.0);
        }
        for (int n = 0; n < N_; ++n) {
            if (opt_.layers.metro && topo_.metro_presence[n]) {
                mdc_[n] = model_.add_variable(var_name("MDC", {node(n), tag_}), VarKind::Binary,
                                              0, 1);
                std::vector<std::pair<double, VarId>> lo{{-1.0, mdc_[n]}}, hi{{-big_m_, mdc_[n]}};
                for (int x = 0; x < X_; ++x) {
                    lo.emplace_back(1.0, mvm_[x * N_ + n]);
                    hi.emplace_back(1.0, mvm_[x * N_ + n]);
                }
                model_.add_constraint(var_name("c35", {node(n), tag_}), lo, Sense::GreaterEqual,
                                      0.0);
                model_.add_constraint(var_name("c36", {node(n), tag_}), hi, Sense::LessEqual,
                                      0.0);
            }
            if (opt_.layers.cloud) {
                cdc_[n] = model_.add_variable(var_name("CDC", {node(n), tag_}), VarKind::Binary,
                                              0, 1);
                std::vector<std::pair<double, VarId>> lo{{-1.0, cdc_[n]}}, hi{{-big_m_, cdc_[n]}};
                for (int x = 0; x < X_; ++x) {
                    lo.emplace_back(1.0, cvm_[x * N_ + n]);
                    hi.emplace_back(1.0, cvm_[x * N_ + n]);
                }
                model_.add_constraint(var_name("c37", {node(n), tag_}), lo, Sense::GreaterEqual,
                                      0.0);
                model_.add_constraint(var_name("c38", {node(n), tag_}), hi, Sense::LessEqual,
                                      0.0);
            }
        }

        // (40)-(45) per-replica workloads under the selected CPU profile,
        // with the replica count bound shared by both profiles.
        for (int x = 0; x < X_; ++x) {
            const VmSpec& spec = scen_.vms[x];
            double umd = vm_unit_capacity(spec);
            double slope = (spec.max_workload_pct - spec.min_workload_pct) / umd;
            bool linear = opt_.workload_profile == WorkloadProfile::Linear;
            const char* fam_a = linear ? "c40" : "c43";
            const char* fam_m = linear ? "c41" : "c44";
            const char* fam_c = linear ? "c42" : "c45";

            for (int p = 0; p < P_; ++p) {
                if (rvma_[x * P_ + p] < 0) continue;
                std::vector<std::pair<double, VarId>> wl{{1.0, tvma_[x * P_ + p]}};
                if (linear) {
                    wl.emplace_back(-slope, rvma_[x * P_ + p]);
                    wl.emplace_back(-spec.min_workload_pct, repa_[x * P_ + p]);
                } else {
                    wl.emplace_back(-spec.max_workload_pct, repa_[x * P_ + p]);
                }
                model_.add_constraint(var_name(fam_a, {vm(x), pon(p), tag_}), wl, Sense::Equal,
                                      0.0);
                model_.add_constraint(var_name(std::string(fam_a) + "r", {vm(x), pon(p), tag_}),
                                      {{1.0, rvma_[x * P_ + p]}, {-umd, repa_[x * P_ + p]}},
                                      Sense::LessEqual, 0.0);
            }
            for (int n = 0; n < N_; ++n) {
                if (rvmm_[x * N_ + n] >= 0) {
                    std::vector<std::pair<double, VarId>> wl{{1.0, tvmm_[x * N_ + n]}};
                    if (linear) {
                        wl.emplace_back(-slope, rvmm_[x * N_ + n]);
                        wl.emplace_back(-spec.min_workload_pct, repm_[x * N_ + n]);
                    } else {
                        wl.emplace_back(-spec.max_workload_pct, repm_[x * N_ + n]);
                    }
                    model_.add_constraint(var_name(fam_m, {vm(x), node(n), tag_}), wl,
                                          Sense::Equal, 0.0);
                    model_.add_constraint(
                        var_name(std::string(fam_m) + "r", {vm(x), node(n), tag_}),
                        {{1.0, rvmm_[x * N_ + n]}, {-umd, repm_[x * N_ + n]}}, Sense::LessEqual,
                        0.0);
                }
                if (cvm_[x * N_ + n] >= 0) {
                    std::vector<std::pair<double, VarId>> wl{{1.0, tvmc_[x * N_ + n]}};
                    std::vector<std::pair<double, VarId>> rep{{-umd, repc_[x * N_ + n]}};
                    for (int d = 0; d < N_; ++d)
                        if (rvmc_[(x * N_ + n) * N_ + d] >= 0) {
                            if (linear)
                                wl.emplace_back(-slope, rvmc_[(x * N_ + n) * N_ + d]);
                            rep.emplace_back(1.0, rvmc_[(x * N_ + n) * N_ + d]);
                        }
                    if (linear) wl.emplace_back(-spec.min_workload_pct, repc_[x * N_ + n]);
                    else wl.emplace_back(-spec.max_workload_pct, repc_[x * N_ + n]);
                    model_.add_constraint(var_name(fam_c, {vm(x), node(n), tag_}), wl,
                                          Sense::Equal, 0.0);
                    model_.add_constraint(
                        var_name(std::string(fam_c) + "r", {vm(x), node(n), tag_}), rep,
                        Sense::LessEqual, 0.0);
                }
            }
        }

        // (46)-(48) workload aggregation per candidate site.
        twa_.assign(P_, -1);
        twm_.assign(N_, -1);
        twc_.assign(N_, -1);
        for (int p = 0; p < P_; ++p) {
            if (!opt_.layers.access) continue;
            twa_[p] = model_.add_variable(var_name("TWA", {pon(p), tag_}), VarKind::Continuous,
                                          0, kInfinity);
            std::vector<std::pair<double, VarId>> agg{{1.0, twa_[p]}};
            for (int x = 0; x < X_; ++x) agg.emplace_back(-1.0, tvma_[x * P_ + p]);
            model_.add_constraint(var_name("c46", {pon(p), tag_}), agg, Sense::Equal, 0.0);
        }
        for (int n = 0; n < N_; ++n) {
            if (opt_.layers.metro && topo_.metro_presence[n]) {
                twm_[n] = model_.add_variable(var_name("TWM", {node(n), tag_}),
                                              VarKind::Continuous, 0, kInfinity);
                std::vector<std::pair<double, VarId>> agg{{1.0, twm_[n]}};
                for (int x = 0; x < X_; ++x) agg.emplace_back(-1.0, tvmm_[x * N_ + n]);
                model_.add_constraint(var_name("c47", {node(n), tag_}), agg, Sense::Equal, 0.0);
            }
            if (opt_.layers.cloud) {
                twc_[n] = model_.add_variable(var_name("TWC", {node(n), tag_}),
                                              VarKind::Continuous, 0, kInfinity);
                std::vector<std::pair<double, VarId>> agg{{1.0, twc_[n]}};
                for (int x = 0; x < X_; ++x) agg.emplace_back(-1.0, tvmc_[x * N_ + n]);
                model_.add_constraint(var_name("c48", {node(n), tag_}), agg, Sense::Equal, 0.0);
            }
        }
    }

    // ---- server/router/switch, metro-node, OLT/ONU dimensioning: (49)-(57) ----
    void build_dimensioning() {
        if (!f_.placement_built && !f_.core_built) return;
        double smax = cat_.server_max_workload_pct;

        if (f_.placement_built) {
            aas_.assign(P_, -1);
            aar_.assign(P_, -1);
            aasw_.assign(P_, -1);
            mas_.assign(N_, -1);
            mar_.assign(N_, -1);
            masw_.assign(N_, -1);
            cas_.assign(N_, -1);
            car_.assign(N_, -1);
            casw_.assign(N_, -1);
            olt_.assign(P_, -1);
            onu_.assign(P_, -1);
            mnr_.assign(N_, -1);
            mnsw_.assign(N_, -1);

            for (int p = 0; p < P_; ++p) {
                if (twa_[p] >= 0) {
                    double cap = site_cap_access(p);
                    double twub = workload_ub_access(p);
                    aas_[p] = model_.add_variable(var_name("AAS", {pon(p), tag_}),
                                                  VarKind::Integer, 0, 2 * iceil(twub / smax) + 2);
                    aar_[p] = model_.add_variable(
                        var_name("AAR", {pon(p), tag_}), VarKind::Integer, 0,
                        2 * iceil(cap / cat_.access_router_bitrate_gbps) + 2);
                    aasw_[p] = model_.add_variable(
                        var_name("AASW", {pon(p), tag_}), VarKind::Integer, 0,
                        2 * iceil(cap / cat_.access_switch_bitrate_gbps) + 2);
                    model_.add_constraint(var_name("c49", {pon(p), tag_}),
                                          {{1.0, twa_[p]}, {-smax, aas_[p]}}, Sense::LessEqual,
                                          0.0);
                    std::vector<std::pair<double, VarId>> r{
                        {-cat_.access_router_bitrate_gbps, aar_[p]}};
                    std::vector<std::pair<double, VarId>> w{
                        {-cat_.access_switch_bitrate_gbps, aasw_[p]}};
                    for (int x = 0; x < X_; ++x) {
                        r.emplace_back(1.0, rvma_[x * P_ + p]);
                        w.emplace_back(1.0, rvma_[x * P_ + p]);
                    }
                    model_.add_constraint(var_name("c52", {pon(p), tag_}), r, Sense::LessEqual,
                                          0.0);
                    model_.add_constraint(var_name("c55", {pon(p), tag_}), w, Sense::LessEqual,
                                          0.0);
                }
            }
            for (int n = 0; n < N_; ++n) {
                if (twm_[n] >= 0) {
                    double cap = 0.0;
                    for (int x = 0; x < X_; ++x) cap += node_demand(x, n);
                    double twub = workload_ub_metro(n);
                    mas_[n] = model_.add_variable(var_name("MAS", {node(n), tag_}),
                                                  VarKind::Integer, 0, 2 * iceil(twub / smax) + 2);
                    mar_[n] = model_.add_variable(
                        var_name("MAR", {node(n), tag_}), VarKind::Integer, 0,
                        2 * iceil(cap / cat_.metro_router_bitrate_gbps) + 2);
                    masw_[n] = model_.add_variable(
                        var_name("MASW", {node(n), tag_}), VarKind::Integer, 0,
                        2 * iceil(cap / cat_.metro_switch_bitrate_gbps) + 2);
                    model_.add_constraint(var_name("c50", {node(n), tag_}),
                                          {{1.0, twm_[n]}, {-smax, mas_[n]}}, Sense::LessEqual,
                                          0.0);
                    std::vector<std::pair<double, VarId>> r{
                        {-cat_.metro_router_bitrate_gbps, mar_[n]}};
                    std::vector<std::pair<double, VarId>> w{
                        {-cat_.metro_switch_bitrate_gbps, masw_[n]}};
                    for (int x = 0; x < X_; ++x) {
                        r.emplace_back(1.0, rvmm_[x * N_ + n]);
                        w.emplace_back(1.0, rvmm_[x * N_ + n]);
                    }
                    model_.add_constraint(var_name("c54", {node(n), tag_}), r, Sense::LessEqual,
                                          0.0);
                    model_.add_constraint(var_name("c57", {node(n), tag_}), w, Sense::LessEqual,
                                          0.0);
                }
                if (twc_[n] >= 0) {
                    double cap = 0.0;
                    for (int x = 0; x < X_; ++x) cap += total_demand(x);
                    double twub = workload_ub_cloud(n);
                    cas_[n] = model_.add_variable(var_name("CAS", {node(n), tag_}),
                                                  VarKind::Integer, 0, 2 * iceil(twub / smax) + 2);
                    car_[n] = model_.add_variable(
                        var_name("CAR", {node(n), tag_}), VarKind::Integer, 0,
                        2 * iceil(cap / cat_.cloud_router_bitrate_gbps) + 2);
                    casw_[n] = model_.add_variable(
                        var_name("CASW", {node(n), tag_}), VarKind::Integer, 0,
                        2 * iceil(cap / cat_.cloud_switch_bitrate_gbps) + 2);
                    model_.add_constraint(var_name("c51", {node(n), tag_}),
                                          {{1.0, twc_[n]}, {-smax, cas_[n]}}, Sense::LessEqual,
                                          0.0);
                    std::vector<std::pair<double, VarId>> r{
                        {-cat_.cloud_router_bitrate_gbps, car_[n]}};
                    std::vector<std::pair<double, VarId>> w{
                        {-cat_.cloud_switch_bitrate_gbps, casw_[n]}};
                    for (int x = 0; x < X_; ++x)
                        for (int d = 0; d < N_; ++d)
                            if (rvmc_[(x * N_ + n) * N_ + d] >= 0) {
                                r.emplace_back(1.0, rvmc_[(x * N_ + n) * N_ + d]);
                                w.emplace_back(1.0, rvmc_[(x * N_ + n) * N_ + d]);
                            }
                    model_.add_constraint(var_name("c53", {node(n), tag_}), r, Sense::LessEqual,
                                          0.0);
                    model_.add_constraint(var_name("c56", {node(n), tag_}), w, Sense::LessEqual,
                                          0.0);
                }
            }

            // Metro-node aggregation devices carry everything that transits the
            // metro layer: metro- and cloud-served responses plus background
            // traffic entering the core at this node.
            for (int n = 0; n < N_; ++n) {
                if (!(opt_.layers.metro || opt_.layers.cloud)) break;
                double t_up = origin_traffic(n);
                std::vector<std::pair<double, VarId>> transit;
                if (rvmmAny(n)) {
                    for (int x = 0; x < X_; ++x)
                        if (rvmm_[x * N_ + n] >= 0) transit.emplace_back(1.0, rvmm_[x * N_ + n]);
                }
                for (int x = 0; x < X_; ++x)
                    for (int s = 0; s < N_; ++s)
                        if (rvmc_[(x * N_ + s) * N_ + n] >= 0)
                            transit.emplace_back(1.0, rvmc_[(x * N_ + s) * N_ + n]);
                double cap_ub = t_up;
                for (int x = 0; x < X_; ++x) cap_ub += node_demand(x, n);
                mnr_[n] = model_.add_variable(
                    var_name("MNR", {node(n), tag_}), VarKind::Integer, 0,
                    2 * iceil(cap_ub / cat_.metro_node_router_bitrate_gbps) + 2);
                mnsw_[n] = model_.add_variable(
                    var_name("MNSW", {node(n), tag_}), VarKind::Integer, 0,
                    2 * iceil(cap_ub / cat_.metro_node_switch_bitrate_gbps) + 2);
                auto r = transit;
                r.emplace_back(-cat_.metro_node_router_bitrate_gbps, mnr_[n]);
                model_.add_constraint(var_name("cmnr", {node(n), tag_}), r, Sense::LessEqual,
                                      -t_up);
                auto w = transit;
                w.emplace_back(-cat_.metro_node_switch_bitrate_gbps, mnsw_[n]);
                model_.add_constraint(var_name("cmnsw", {node(n), tag_}), w, Sense::LessEqual,
                                      -t_up);
            }

            // OLT/ONU: every PON carries one OLT (more if its demand exceeds
            // the OLT capacity); ONUs are the user population.
            for (int p = 0; p < P_; ++p) {
                double pon_demand = 0.0, pon_users = 0.0;
                for (int x = 0; x < X_; ++x) {
                    pon_demand += rt_value(x, p);
                    pon_users += scen_.user_count(slot_, x, p);
                }
                olt_[p] = model_.add_variable(
                    var_name("OLT", {pon(p), tag_}), VarKind::Integer, 1,
                    std::max(1, 2 * iceil(pon_demand / cat_.olt_capacity_gbps) + 1));
                model_.add_constraint(var_name("colt", {pon(p), tag_}), {{1.0, olt_[p]}},
                                      Sense::GreaterEqual, 1.0);
                model_.add_constraint(var_name("coltc", {pon(p), tag_}),
                                      {{cat_.olt_capacity_gbps, olt_[p]}}, Sense::GreaterEqual,
                                      pon_demand);
                onu_[p] = model_.add_variable(var_name("ONU", {pon(p), tag_}),
                                              VarKind::Continuous, pon_users, pon_users);
                model_.add_constraint(var_name("conu", {pon(p), tag_}), {{1.0, onu_[p]}},
                                      Sense::Equal, pon_users);
            }
        }

        // Core aggregation ports: background traffic entering the core here
        // plus cloud responses leaving it toward this node's users.
        if (f_.core_built || opt_.layers.cloud) {
            rpagg_.assign(N_, -1);
            for (int n = 0; n < N_; ++n) {
                double t_up = origin_traffic(n);
                std::vector<std::pair<double, VarId>> terms;
                for (int x = 0; x < X_; ++x)
                    for (int s = 0; s < N_; ++s)
                        if (!rvmc_.empty() && rvmc_[(x * N_ + s) * N_ + n] >= 0)
                            terms.emplace_back(1.0, rvmc_[(x * N_ + s) * N_ + n]);
                if (t_up <= 0.0 && terms.empty()) continue;
                double cap_ub = t_up;
                for (int x = 0; x < X_; ++x) cap_ub += node_demand(x, n);
                rpagg_[n] = model_.add_variable(
                    var_name("RPAGG", {node(n), tag_}), VarKind::Integer, 0,
                    2 * iceil(cap_ub / cat_.wavelength_rate_gbps) + 2);
                terms.emplace_back(-cat_.wavelength_rate_gbps, rpagg_[n]);
                model_.add_constraint(var_name("cagg", {node(n), tag_}), terms, Sense::LessEqual,
                                      -t_up);
            }
        }
    }

    // ---- green/brown split under the solar budget: (58)-(67) ----
    void add_green_constraints() {
        if (!opt_.solar_enabled || !f_.placement_built || !opt_.layers.access) return;
        ags_.assign(P_, -1);
        agsw_.assign(P_, -1);
        agr_.assign(P_, -1);
        bas_.assign(P_, -1);
        basw_.assign(P_, -1);
        bar_.assign(P_, -1);
        if (static_cast<int>(scen_.solar_w[slot_].size()) != P_)
            throw SolarDataMissing("solar series does not cover every PON at slot " + tag_);

        for (int p = 0; p < P_; ++p) {
            if (aas_[p] < 0) continue;
            double solar = scen_.solar_w[slot_][p];
            double sub = model_.variable(aas_[p]).upper;
            double rub = model_.variable(aar_[p]).upper;
            double wub = model_.variable(aasw_[p]).upper;
            ags_[p] = model_.add_variable(var_name("AGS", {pon(p), tag_}), VarKind::Integer, 0,
                                          sub);
            agsw_[p] = model_.add_variable(var_name("AGSW", {pon(p), tag_}), VarKind::Integer, 0,
                                           wub);
            agr_[p] = model_.add_variable(var_name("AGR", {pon(p), tag_}), VarKind::Integer, 0,
                                          rub);
            bas_[p] = model_.add_variable(var_name("BAS", {pon(p), tag_}), VarKind::Integer, 0,
                                          sub);
            basw_[p] = model_.add_variable(var_name("BASW", {pon(p), tag_}), VarKind::Integer, 0,
                                           wub);
            bar_[p] = model_.add_variable(var_name("BAR", {pon(p), tag_}), VarKind::Integer, 0,
                                          rub);

            model_.add_constraint(var_name("c58", {pon(p), tag_}),
                                  {{1.0, aas_[p]}, {-1.0, ags_[p]}, {-1.0, bas_[p]}},
                                  Sense::Equal, 0.0);
            model_.add_constraint(var_name("c59", {pon(p), tag_}),
                                  {{1.0, aasw_[p]}, {-1.0, agsw_[p]}, {-1.0, basw_[p]}},
                                  Sense::Equal, 0.0);
            model_.add_constraint(var_name("c60", {pon(p), tag_}),
                                  {{1.0, aar_[p]}, {-1.0, agr_[p]}, {-1.0, bar_[p]}},
                                  Sense::Equal, 0.0);
            // Budget form of the circular trio (61)/(63)/(65).
            model_.add_constraint(var_name("c61", {pon(p), tag_}),
                                  {{cat_.server_power_w, ags_[p]},
                                   {cat_.access_switch_power_w, agsw_[p]},
                                   {cat_.access_router_power_w, agr_[p]}},
                                  Sense::LessEqual, solar);
            model_.add_constraint(var_name("c62", {pon(p), tag_}),
                                  {{cat_.server_max_workload_pct, ags_[p]}, {-1.0, twa_[p]}},
                                  Sense::LessEqual, 0.0);
            std::vector<std::pair<double, VarId>> rcap{
                {cat_.access_router_bitrate_gbps, agr_[p]}};
            std::vector<std::pair<double, VarId>> wcap{
                {cat_.access_switch_bitrate_gbps, agsw_[p]}};
            for (int x = 0; x < X_; ++x) {
                rcap.emplace_back(-1.0, rvma_[x * P_ + p]);
                wcap.emplace_back(-1.0, rvma_[x * P_ + p]);
            }
            model_.add_constraint(var_name("c64", {pon(p), tag_}), rcap, Sense::LessEqual, 0.0);
            model_.add_constraint(var_name("c67", {pon(p), tag_}), wcap, Sense::LessEqual, 0.0);
        }
    }

    // ---- the minimize objective: equations (1)-(20) ----
    void build_layer_power() {
        if (f_.core_built) {
            for (size_t a = 0; a < f_.arcs.size(); ++a) {
                model_.add_objective_term(cat_.transponder_power_w, wp_[a]);
                int amps = edfa_count(topo_.links[f_.arc_link[a]].distance_km, cat_.edfa_span_km);
                model_.add_objective_term(cat_.edfa_power_w * amps, fp_[a]);
            }
            for (int i = 0; i < N_; ++i)
                for (int j = 0; j < N_; ++j)
                    if (i != j)
                        model_.add_objective_term(cat_.core_router_port_power_w, wv_[i * N_ + j]);
        }
        if (!rpagg_.empty())
            for (int n = 0; n < N_; ++n)
                if (rpagg_[n] >= 0)
                    model_.add_objective_term(cat_.core_router_port_power_w, rpagg_[n]);

        if (!f_.placement_built) return;

        for (int n = 0; n < N_; ++n) {
            if (cas_[n] >= 0) {
                model_.add_objective_term(cat_.cloud_pue * cat_.server_power_w, cas_[n]);
                model_.add_objective_term(cat_.cloud_router_power_w, car_[n]);
                model_.add_objective_term(cat_.cloud_switch_power_w, casw_[n]);
            }
            if (mas_[n] >= 0) {
                model_.add_objective_term(cat_.metro_pue * cat_.server_power_w, mas_[n]);
                model_.add_objective_term(cat_.metro_router_power_w, mar_[n]);
                model_.add_objective_term(cat_.metro_switch_power_w, masw_[n]);
            }
            if (mnr_.size() && mnr_[n] >= 0) {
                model_.add_objective_term(
                    cat_.metro_node_router_power_w * cat_.metro_node_redundancy, mnr_[n]);
                model_.add_objective_term(cat_.metro_node_switch_power_w, mnsw_[n]);
            }
        }
        for (int p = 0; p < P_; ++p) {
            if (aas_[p] >= 0) {
                if (opt_.solar_enabled) {
                    model_.add_objective_term(cat_.access_pue * cat_.server_power_w, bas_[p]);
                    model_.add_objective_term(cat_.access_router_power_w, bar_[p]);
                    model_.add_objective_term(cat_.access_switch_power_w, basw_[p]);
                } else {
                    model_.add_objective_term(cat_.access_pue * cat_.server_power_w, aas_[p]);
                    model_.add_objective_term(cat_.access_router_power_w, aar_[p]);
                    model_.add_objective_term(cat_.access_switch_power_w, aasw_[p]);
                }
            }
            if (olt_[p] >= 0) model_.add_objective_term(cat_.olt_power_w, olt_[p]);
            if (onu_[p] >= 0) model_.add_objective_term(cat_.onu_power_w, onu_[p]);
        }
    }

private:
    std::string node(int n) const { return topo_.node_names[n]; }
    std::string pon(int p) const { return topo_.pons[p].id; }
    std::string vm(int x) const { return scen_.vms[x].id; }

    double rt_value(int x, int p) const {
        return demand_request_rate(scen_.vms[x], scen_.user_count(slot_, x, p));
    }
    double node_demand(int x, int n) const {
        double v = 0.0;
        for (int p : topo_.node_pons[n]) v += rt_value(x, p);
        return v;
    }
    double total_demand(int x) const {
        double v = 0.0;
        for (int p = 0; p < P_; ++p) v += rt_value(x, p);
        return v;
    }
    double origin_traffic(int n) const {
        if (!f_.core_built) return 0.0;
        double v = 0.0;
        for (int d = 0; d < N_; ++d)
            if (d != n) v += scen_.traffic(slot_, n, d) * opt_.traffic_scale;
        return v;
    }
    bool rvmmAny(int n) const {
        for (int x = 0; x < X_; ++x)
            if (rvmm_[x * N_ + n] >= 0) return true;
        return false;
    }
    double workload_ub_access(int p) const {
        double ub = 0.0;
        for (int x = 0; x < X_; ++x) {
            if (repa_[x * P_ + p] < 0) continue;
            ub += scen_.vms[x].max_workload_pct * model_.variable(repa_[x * P_ + p]).upper;
        }
        return ub;
    }
    double workload_ub_metro(int n) const {
        double ub = 0.0;
        for (int x = 0; x < X_; ++x)
            if (repm_[x * N_ + n] >= 0)
                ub += scen_.vms[x].max_workload_pct * model_.variable(repm_[x * N_ + n]).upper;
        return ub;
    }
    double workload_ub_cloud(int n) const {
        double ub = 0.0;
        for (int x = 0; x < X_; ++x)
            if (repc_[x * N_ + n] >= 0)
                ub += scen_.vms[x].max_workload_pct * model_.variable(repc_[x * N_ + n]).upper;
        return ub;
    }

    const NetworkTopology& topo_;
    const DeviceCatalog& cat_;
    const DemandScenario& scen_;
    int slot_;
    FormulationOptions opt_;
    bool owned_;
    MilpModel local_model_;
    MilpModel& model_;
    SlotFormulation f_;
    std::string tag_;
    int N_ = 0, P_ = 0, X_ = 0;
    double big_m_ = 0.0;

    // Variable handle tables; -1 marks an absent candidate.
    std::vector<VarId> wv_, wp_, fp_, rpagg_;
    std::vector<std::vector<VarId>> vt_, pt_;
    std::vector<VarId> rt_, rvma_, rvmm_, rvmc_;
    std::vector<VarId> avm_, mvm_, cvm_, adc_, mdc_, cdc_;
    std::vector<VarId> repa_, repm_, repc_, tvma_, tvmm_, tvmc_, umd_;
    std::vector<VarId> twa_, twm_, twc_;
    std::vector<VarId> aas_, aar_, aasw_, mas_, mar_, masw_, cas_, car_, casw_;
    std::vector<VarId> olt_, onu_, mnr_, mnsw_;
    std::vector<VarId> ags_, agsw_, agr_, bas_, basw_, bar_;
};

} // namespace

SlotFormulation build_slot_model(const NetworkTopology& topo, const DeviceCatalog& catalog,
                                 const DemandScenario& scenario, int slot,
                                 const FormulationOptions& options) {
    if (slot < 0 || slot >= scenario.slot_count())
        throw MissingDemand("build_slot_model: slot " + std::to_string(slot) + " out of range");
    SlotBuilder b(topo, catalog, scenario, slot, options, nullptr);
    b.build_all();
    return b.finish();
}

MilpModel build_multi_slot_model(const NetworkTopology& topo, const DeviceCatalog& catalog,
                                 const DemandScenario& scenario,
                                 const FormulationOptions& options,
                                 const std::vector<int>& slots) {
    MilpModel model;
    std::vector<int> chosen = slots;
    if (chosen.empty())
        for (int t = 0; t < scenario.slot_count(); ++t) chosen.push_back(t);
    for (int t : chosen) {
        if (t < 0 || t >= scenario.slot_count())
            throw MissingDemand("build_multi_slot_model: slot " + std::to_string(t) +
                                " out of range");
        SlotBuilder b(topo, catalog, scenario, t, options, &model);
        b.build_all();
        (void)b.finish();
    }
    model.name = "multislot";
    model.freeze();
    return model;
}

std::set<int> constraint_families(const MilpModel& model) {
    std::set<int> out;
    for (const auto& c : model.constraints()) {
        if (c.name.size() < 2 || c.name[0] != 'c') continue;
        size_t k = 1;
        int value = 0;
        bool digits = false;
        while (k < c.name.size() && std::isdigit(static_cast<unsigned char>(c.name[k]))) {
            value = value * 10 + (c.name[k] - '0');
            digits = true;
            ++k;
        }
        if (digits) out.insert(value);
    }
    return out;
}

std::set<int> expected_families(const FormulationOptions& options, bool has_traffic,
                                bool has_metro_candidates) {
    std::set<int> out;
    bool linear = options.workload_profile == WorkloadProfile::Linear;
    if (has_traffic) for (int f : {21, 22, 23, 24}) out.insert(f);
    if (options.layers.any()) {
        for (int f : {25, 26, 39}) out.insert(f);
        if (options.layers.access) {
            for (int f : {27, 28, 33, 34, 46, 49, 52, 55}) out.insert(f);
            out.insert(linear ? 40 : 43);
            if (options.solar_enabled)
                for (int f : {58, 59, 60, 61, 62, 64, 67}) out.insert(f);
        }
        if (options.layers.metro && has_metro_candidates) {
            for (int f : {29, 30, 35, 36, 47, 50, 54, 57}) out.insert(f);
            out.insert(linear ? 41 : 44);
        }
        if (options.layers.cloud) {
            for (int f : {31, 32, 37, 38, 48, 51, 53, 56}) out.insert(f);
            out.insert(linear ? 42 : 45);
        }
    }
    return out;
}

} // namespace cfog
