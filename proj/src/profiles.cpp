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

#include "cfog/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace cfog {

int DemandScenario::vm_index(const std::string& id) const {
    for (int x = 0; x < vm_count(); ++x)
        if (vms[x].id == id) return x;
    return -1;
}

double DemandScenario::solar_at(int pon, double hour) const {
    if (pon < 0 || pon >= pon_count)
        throw UnknownSite("solar_at: unknown PON index " + std::to_string(pon));
    if (time_slots.empty() || hour < time_slots.front() || hour >= 24.0)
        throw OutOfHorizon("solar_at: hour " + std::to_string(hour) + " outside horizon");
    int slot = 0;
    for (int t = 0; t < slot_count(); ++t)
        if (time_slots[t] <= hour) slot = t;
    return solar_w[slot][pon];
}

double demand_request_rate(const VmSpec& spec, double users) {
    if (users < 0) throw DomainError("demand_request_rate: negative user count");
    return users * spec.user_download_rate_gbps;
}

double vm_unit_capacity(const VmSpec& spec) {
    return spec.user_download_rate_gbps * static_cast<double>(spec.max_users);
}

std::vector<VmSpec> load_vm_specs(const std::string& path) {
    return parse_vm_specs(read_text_document(path));
}

std::vector<VmSpec> parse_vm_specs(const TextDocument& doc) {
    std::vector<VmSpec> out;
    for (const auto& sec : doc.sections) {
        if (sec.name.empty()) {
            if (!sec.kv.empty())
                throw ValidationError(doc.path + ": unknown key '" + sec.kv.front().key + "'");
            continue;
        }
        if (sec.name != "vm")
            throw ValidationError(doc.path + ": unknown section [" + sec.name + "]");
        VmSpec vm;
        std::string where = doc.path + ":" + std::to_string(sec.line);
        for (const auto& e : sec.kv) {
            std::string kw = doc.path + ":" + std::to_string(e.line);
            if (e.key == "id") {
                vm.id = e.value;
            } else if (e.key == "user_download_rate_gbps") {
                vm.user_download_rate_gbps = parse_number(e.value, kw);
            } else if (e.key == "max_users") {
                vm.max_users = static_cast<int>(parse_integer(e.value, kw));
            } else if (e.key == "max_workload_pct") {
                vm.max_workload_pct = parse_number(e.value, kw);
            } else if (e.key == "min_workload_pct") {
                vm.min_workload_pct = parse_number(e.value, kw);
            } else if (e.key == "profile") {
                if (e.value == "linear") vm.profile_kind = WorkloadProfile::Linear;
                else if (e.value == "constant") vm.profile_kind = WorkloadProfile::Constant;
                else throw ValidationError(kw + ": profile must be linear|constant");
            } else {
                throw ValidationError(kw + ": unknown key '" + e.key + "'");
            }
        }
        if (vm.id.empty()) throw ValidationError(where + ": [vm] record without id");
        if (!(vm.user_download_rate_gbps > 0))
            throw ValidationError(where + ": vm '" + vm.id + "': user_download_rate_gbps must be > 0");
        if (vm.max_users <= 0)
            throw ValidationError(where + ": vm '" + vm.id + "': max_users must be a positive integer");
        if (!(vm.min_workload_pct > 0 && vm.min_workload_pct < vm.max_workload_pct &&
              vm.max_workload_pct <= 100.0))
            throw ValidationError(where + ": vm '" + vm.id +
                                  "': need 0 < min_workload_pct < max_workload_pct <= 100");
        for (const auto& other : out)
            if (other.id == vm.id)
                throw ValidationError(where + ": duplicate vm id '" + vm.id + "'");
        out.push_back(vm);
    }
    if (out.empty()) throw ValidationError(doc.path + ": no [vm] records");
    return out;
}

DemandScenario load_scenario(const std::string& path, const std::string& vms_path,
                             const NetworkTopology& topo) {
    return parse_scenario(read_text_document(path), load_vm_specs(vms_path), topo);
}

namespace {

int slot_of(const DemandScenario& s, double hour, const std::string& where) {
    for (int t = 0; t < s.slot_count(); ++t)
        if (s.time_slots[t] == hour) return t;
    throw ValidationError(where + ": hour " + std::to_string(hour) +
                          " is not a declared time slot");
}

} // namespace

DemandScenario parse_scenario(const TextDocument& doc, std::vector<VmSpec> vms,
                              const NetworkTopology& topo) {
    static const std::set<std::string> known = {"", "time", "traffic", "users", "solar"};
    for (const auto& sec : doc.sections) {
        if (!known.count(sec.name))
            throw ValidationError(doc.path + ": unknown section [" + sec.name + "]");
        if (!sec.kv.empty())
            throw ValidationError(doc.path + ": unknown key '" + sec.kv.front().key + "'");
    }

    DemandScenario s;
    s.vms = std::move(vms);
    s.node_count = topo.node_count();
    s.pon_count = topo.pon_count();

    const TextSection* time = doc.find("time");
    if (!time) throw ValidationError(doc.path + ": missing [time] section");
    for (size_t r = 0; r < time->rows.size(); ++r) {
        std::string where = doc.path + ":" + std::to_string(time->row_lines[r]);
        for (const auto& tok : time->rows[r]) {
            double h = parse_number(tok, where);
            if (h < 0.0 || h >= 24.0)
                throw ValidationError(where + ": time slot " + tok + " outside [0, 24)");
            if (!s.time_slots.empty() && h <= s.time_slots.back())
                throw ValidationError(where + ": time slots must be strictly increasing");
            s.time_slots.push_back(h);
        }
    }
    if (s.time_slots.empty()) throw ValidationError(doc.path + ": empty [time] section");

    int T = s.slot_count(), N = s.node_count, P = s.pon_count, X = s.vm_count();
    s.core_traffic.assign(T, std::vector<double>(static_cast<size_t>(N) * N, 0.0));
    s.users.assign(T, std::vector<double>(static_cast<size_t>(X) * P, 0.0));
    s.solar_w.assign(T, std::vector<double>(P, 0.0));

    // Wildcard '*' expands over all nodes / PONs / slots; later rows override.
    if (const TextSection* traffic = doc.find("traffic")) {
        for (size_t r = 0; r < traffic->rows.size(); ++r) {
            const auto& row = traffic->rows[r];
            std::string where = doc.path + ":" + std::to_string(traffic->row_lines[r]);
            if (row.size() != 4) throw ParseError(where + ": traffic row needs 's d t gbps'");
            double gbps = parse_number(row[3], where);
            if (gbps < 0) throw ValidationError(where + ": negative traffic demand");
            std::vector<int> ss, ds, ts;
            if (row[0] == "*") for (int n = 0; n < N; ++n) ss.push_back(n);
            else {
                int n = topo.node_index(row[0]);
                if (n < 0) throw ValidationError(where + ": unknown node '" + row[0] + "'");
                ss.push_back(n);
            }
            if (row[1] == "*") for (int n = 0; n < N; ++n) ds.push_back(n);
            else {
                int n = topo.node_index(row[1]);
                if (n < 0) throw ValidationError(where + ": unknown node '" + row[1] + "'");
                ds.push_back(n);
            }
            if (row[2] == "*") for (int t = 0; t < T; ++t) ts.push_back(t);
            else ts.push_back(slot_of(s, parse_number(row[2], where), where));
            for (int t : ts)
                for (int a : ss)
                    for (int b : ds)
                        if (a != b) s.core_traffic[t][a * N + b] = gbps;
        }
    }

    if (const TextSection* users = doc.find("users")) {
        for (size_t r = 0; r < users->rows.size(); ++r) {
            const auto& row = users->rows[r];
            std::string where = doc.path + ":" + std::to_string(users->row_lines[r]);
            if (row.size() != 5) throw ParseError(where + ": users row needs 'vm pon node t count'");
            double count = parse_number(row[4], where);
            if (count < 0) throw ValidationError(where + ": negative user count");
            std::vector<int> xs, ps, ts;
            if (row[0] == "*") for (int x = 0; x < X; ++x) xs.push_back(x);
            else {
                int x = s.vm_index(row[0]);
                if (x < 0) throw ValidationError(where + ": unknown VM '" + row[0] + "'");
                xs.push_back(x);
            }
            if (row[1] == "*") for (int p = 0; p < P; ++p) ps.push_back(p);
            else {
                int p = topo.pon_index(row[1]);
                if (p < 0) throw ValidationError(where + ": unknown PON '" + row[1] + "'");
                ps.push_back(p);
            }
            if (row[2] != "*") {
                int n = topo.node_index(row[2]);
                if (n < 0) throw ValidationError(where + ": unknown node '" + row[2] + "'");
                for (int p : ps)
                    if (topo.pons[p].node != n)
                        throw ValidationError(where + ": PON '" + topo.pons[p].id +
                                              "' is attached to node '" +
                                              topo.node_names[topo.pons[p].node] + "', not '" +
                                              row[2] + "'");
            }
            if (row[3] == "*") for (int t = 0; t < T; ++t) ts.push_back(t);
            else ts.push_back(slot_of(s, parse_number(row[3], where), where));
            for (int t : ts)
                for (int x : xs)
                    for (int p : ps) s.users[t][x * P + p] = count;
        }
    }

    if (const TextSection* solar = doc.find("solar")) {
        for (size_t r = 0; r < solar->rows.size(); ++r) {
            const auto& row = solar->rows[r];
            std::string where = doc.path + ":" + std::to_string(solar->row_lines[r]);
            if (row.size() != 4) throw ParseError(where + ": solar row needs 'pon node t watts'");
            double watts = parse_number(row[3], where);
            if (watts < 0) throw ValidationError(where + ": negative solar power");
            std::vector<int> ps, ts;
            if (row[0] == "*") for (int p = 0; p < P; ++p) ps.push_back(p);
            else {
                int p = topo.pon_index(row[0]);
                if (p < 0) throw ValidationError(where + ": unknown PON '" + row[0] + "'");
                ps.push_back(p);
            }
            if (row[1] != "*") {
                int n = topo.node_index(row[1]);
                if (n < 0) throw ValidationError(where + ": unknown node '" + row[1] + "'");
                for (int p : ps)
                    if (topo.pons[p].node != n)
                        throw ValidationError(where + ": PON '" + topo.pons[p].id +
                                              "' is not attached to node '" + row[1] + "'");
            }
            if (row[2] == "*") for (int t = 0; t < T; ++t) ts.push_back(t);
            else ts.push_back(slot_of(s, parse_number(row[2], where), where));
            for (int t : ts)
                for (int p : ps) s.solar_w[t][p] = watts;
        }
    }

    return s;
}

std::string serialize_scenario(const DemandScenario& s, const NetworkTopology& topo) {
    std::ostringstream out;
    out.precision(15);
    out << "[time]\n";
    for (double h : s.time_slots) out << h << '\n';
    out << "\n[traffic]\n";
    for (int t = 0; t < s.slot_count(); ++t)
        for (int a = 0; a < s.node_count; ++a)
            for (int b = 0; b < s.node_count; ++b)
                if (a != b && s.traffic(t, a, b) != 0.0)
                    out << topo.node_names[a] << ' ' << topo.node_names[b] << ' '
                        << s.time_slots[t] << ' ' << s.traffic(t, a, b) << '\n';
    out << "\n[users]\n";
    for (int t = 0; t < s.slot_count(); ++t)
        for (int x = 0; x < s.vm_count(); ++x)
            for (int p = 0; p < s.pon_count; ++p)
                if (s.user_count(t, x, p) != 0.0)
                    out << s.vms[x].id << ' ' << topo.pons[p].id << ' '
                        << topo.node_names[topo.pons[p].node] << ' ' << s.time_slots[t] << ' '
                        << s.user_count(t, x, p) << '\n';
    out << "\n[solar]\n";
    for (int t = 0; t < s.slot_count(); ++t)
        for (int p = 0; p < s.pon_count; ++p)
            if (s.solar_w[t][p] != 0.0)
                out << topo.pons[p].id << ' ' << topo.node_names[topo.pons[p].node] << ' '
                    << s.time_slots[t] << ' ' << s.solar_w[t][p] << '\n';
    return out.str();
}

} // namespace cfog
