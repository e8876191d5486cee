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

#include "cfog/topology.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace cfog {

int NetworkTopology::node_index(const std::string& id) const {
    for (int i = 0; i < node_count(); ++i)
        if (node_names[i] == id) return i;
    return -1;
}

int NetworkTopology::pon_index(const std::string& id) const {
    for (int i = 0; i < pon_count(); ++i)
        if (pons[i].id == id) return i;
    return -1;
}

int edfa_count(double distance_km, double span_km) {
    if (!(distance_km > 0.0)) throw DomainError("edfa_count: distance_km must be positive");
    if (!(span_km > 0.0)) throw DomainError("edfa_count: span_km must be positive");
    // Guard against ratios like 1.0 + 2e-16 produced by the division.
    double inline_stages = std::ceil(distance_km / span_km - 1.0 - 1e-9);
    if (inline_stages < 0.0) inline_stages = 0.0;
    return static_cast<int>(inline_stages) + 2;
}

NetworkTopology load_topology(const std::string& path) {
    return parse_topology(read_text_document(path));
}

NetworkTopology parse_topology(const TextDocument& doc) {
    static const std::set<std::string> known_sections = {"", "nodes", "links", "pons", "metro"};
    for (const auto& sec : doc.sections) {
        if (!known_sections.count(sec.name))
            throw ValidationError(doc.path + ": unknown section [" + sec.name + "]");
        if (!sec.name.empty() && !sec.kv.empty())
            throw ValidationError(doc.path + ": unexpected key '" + sec.kv.front().key +
                                  "' in section [" + sec.name + "]");
    }
    for (const auto& e : doc.top().kv)
        throw ValidationError(doc.path + ": unknown key '" + e.key + "'");

    NetworkTopology t;

    const TextSection* nodes = doc.find("nodes");
    if (!nodes) throw ValidationError(doc.path + ": missing [nodes] section");
    for (size_t r = 0; r < nodes->rows.size(); ++r) {
        const auto& row = nodes->rows[r];
        std::string where = doc.path + ":" + std::to_string(nodes->row_lines[r]);
        if (row.empty()) continue;
        const std::string& id = row[0];
        if (t.node_index(id) >= 0)
            throw ValidationError(where + ": duplicate node id '" + id + "'");
        t.node_names.push_back(id);
        std::string display;
        for (size_t k = 1; k < row.size(); ++k) {
            if (k > 1) display += ' ';
            display += row[k];
        }
        t.node_display.push_back(display.empty() ? id : display);
    }
    if (t.node_count() == 0) throw ValidationError(doc.path + ": no nodes defined");

    if (const TextSection* links = doc.find("links")) {
        for (size_t r = 0; r < links->rows.size(); ++r) {
            const auto& row = links->rows[r];
            std::string where = doc.path + ":" + std::to_string(links->row_lines[r]);
            if (row.size() != 3)
                throw ParseError(where + ": link row needs 'a b distance_km'");
            PhysicalLink l;
            l.a = t.node_index(row[0]);
            l.b = t.node_index(row[1]);
            if (l.a < 0) throw ValidationError(where + ": unknown node '" + row[0] + "'");
            if (l.b < 0) throw ValidationError(where + ": unknown node '" + row[1] + "'");
            l.distance_km = parse_number(row[2], where);
            t.links.push_back(l);
        }
    }

    if (const TextSection* pons = doc.find("pons")) {
        for (size_t r = 0; r < pons->rows.size(); ++r) {
            const auto& row = pons->rows[r];
            std::string where = doc.path + ":" + std::to_string(pons->row_lines[r]);
            if (row.size() < 2 || row.size() > 3)
                throw ParseError(where + ": pon row needs 'id node [profile_ref]'");
            PonGroup p;
            p.id = row[0];
            if (t.pon_index(p.id) >= 0)
                throw ValidationError(where + ": duplicate PON id '" + p.id + "'");
            p.node = t.node_index(row[1]);
            if (p.node < 0)
                throw ValidationError(where + ": PON '" + p.id + "' references unknown node '" +
                                      row[1] + "'");
            if (row.size() == 3) p.profile_ref = row[2];
            t.pons.push_back(p);
        }
    }

    t.metro_presence.assign(t.node_count(), 1);
    if (const TextSection* metro = doc.find("metro")) {
        t.metro_presence.assign(t.node_count(), 0);
        for (size_t r = 0; r < metro->rows.size(); ++r) {
            const auto& row = metro->rows[r];
            std::string where = doc.path + ":" + std::to_string(metro->row_lines[r]);
            for (const auto& id : row) {
                int n = t.node_index(id);
                if (n < 0) throw ValidationError(where + ": unknown node '" + id + "'");
                t.metro_presence[n] = 1;
            }
        }
    }

    t.neighbors.assign(t.node_count(), {});
    for (const auto& l : t.links) {
        if (l.a == l.b) continue;  // reported by validate_topology
        t.neighbors[l.a].push_back(l.b);
        t.neighbors[l.b].push_back(l.a);
    }
    for (auto& nb : t.neighbors) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    t.node_pons.assign(t.node_count(), {});
    for (int p = 0; p < t.pon_count(); ++p) t.node_pons[t.pons[p].node].push_back(p);

    auto violations = validate_topology(t);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw ValidationError(doc.path + ": " + v.kind + "(" + v.element + "): " + v.detail);
    }
    return t;
}

std::vector<TopologyViolation> validate_topology(const NetworkTopology& t) {
    std::vector<TopologyViolation> out;

    std::set<std::pair<int, int>> seen;
    for (const auto& l : t.links) {
        std::string name = (l.a >= 0 ? t.node_names[l.a] : "?") + "-" +
                           (l.b >= 0 ? t.node_names[l.b] : "?");
        if (l.a == l.b)
            out.push_back({"SelfLoop", name, "link connects a node to itself"});
        if (!(l.distance_km > 0.0))
            out.push_back({"NonPositiveDistance", name,
                           "distance_km = " + std::to_string(l.distance_km)});
        auto key = std::minmax(l.a, l.b);
        if (!seen.insert(key).second)
            out.push_back({"DuplicateLink", name, "link listed more than once"});
    }

    for (const auto& p : t.pons) {
        if (p.node < 0 || p.node >= t.node_count())
            out.push_back({"DanglingPon", p.id, "PON maps to no core node"});
    }

    // Connectivity over physical links.
    if (t.node_count() > 1) {
        std::vector<char> reached(t.node_count(), 0);
        std::vector<int> stack = {0};
        reached[0] = 1;
        while (!stack.empty()) {
            int n = stack.back();
            stack.pop_back();
            for (int m : t.neighbors[n])
                if (!reached[m]) {
                    reached[m] = 1;
                    stack.push_back(m);
                }
        }
        for (int n = 0; n < t.node_count(); ++n)
            if (!reached[n])
                out.push_back({"Disconnected", t.node_names[n],
                               "node unreachable from " + t.node_names[0]});
    }
    return out;
}

std::string serialize_topology(const NetworkTopology& t) {
    std::ostringstream out;
    out << "[nodes]\n";
    for (int n = 0; n < t.node_count(); ++n)
        out << t.node_names[n] << ' ' << t.node_display[n] << '\n';
    out << "\n[links]\n";
    out.precision(15);
    for (const auto& l : t.links)
        out << t.node_names[l.a] << ' ' << t.node_names[l.b] << ' ' << l.distance_km << '\n';
    out << "\n[pons]\n";
    for (const auto& p : t.pons) {
        out << p.id << ' ' << t.node_names[p.node];
        if (!p.profile_ref.empty()) out << ' ' << p.profile_ref;
        out << '\n';
    }
    out << "\n[metro]\n";
    for (int n = 0; n < t.node_count(); ++n)
        if (t.metro_presence[n]) out << t.node_names[n] << '\n';
    return out.str();
}

} // namespace cfog
