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

#include "cfog/catalog.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <set>

namespace cfog {

namespace {

struct Field {
    const char* section;
    const char* key;
    std::function<void(DeviceCatalog&, double)> set;
    std::function<double(const DeviceCatalog&)> get;
};

// One table of every catalog key; drives parsing, validation and the
// defaults = paper golden test.
const std::vector<Field>& fields() {
    static const std::vector<Field> f = {
#define CFOG_FIELD(sec, name) \
    {sec, #name, [](DeviceCatalog& c, double v) { c.name = v; }, \
     [](const DeviceCatalog& c) { return static_cast<double>(c.name); }}
        CFOG_FIELD("core", wavelengths_per_fiber),
        CFOG_FIELD("core", wavelength_rate_gbps),
        CFOG_FIELD("core", edfa_span_km),
        CFOG_FIELD("core", edfa_power_w),
        CFOG_FIELD("core", transponder_power_w),
        CFOG_FIELD("core", core_router_port_power_w),
        CFOG_FIELD("core", cloud_pue),
        CFOG_FIELD("core", cloud_switch_power_w),
        CFOG_FIELD("core", cloud_switch_bitrate_gbps),
        CFOG_FIELD("core", cloud_router_power_w),
        CFOG_FIELD("core", cloud_router_bitrate_gbps),
        CFOG_FIELD("metro", metro_pue),
        CFOG_FIELD("metro", metro_switch_power_w),
        CFOG_FIELD("metro", metro_switch_bitrate_gbps),
        CFOG_FIELD("metro", metro_router_power_w),
        CFOG_FIELD("metro", metro_router_bitrate_gbps),
        CFOG_FIELD("metro", metro_node_router_power_w),
        CFOG_FIELD("metro", metro_node_router_bitrate_gbps),
        CFOG_FIELD("metro", metro_node_switch_power_w),
        CFOG_FIELD("metro", metro_node_switch_bitrate_gbps),
        CFOG_FIELD("metro", metro_node_redundancy),
        CFOG_FIELD("access", access_pue),
        CFOG_FIELD("access", access_switch_power_w),
        CFOG_FIELD("access", access_switch_bitrate_gbps),
        CFOG_FIELD("access", access_router_power_w),
        CFOG_FIELD("access", access_router_bitrate_gbps),
        CFOG_FIELD("access", olt_power_w),
        CFOG_FIELD("access", olt_capacity_gbps),
        CFOG_FIELD("access", onu_power_w),
        CFOG_FIELD("server", server_power_w),
        CFOG_FIELD("server", server_max_workload_pct),
#undef CFOG_FIELD
    };
    return f;
}

void set_field(DeviceCatalog& c, const std::string& section, const std::string& key,
               double value, const std::string& where) {
    for (const auto& f : fields()) {
        if (key == f.key) {
            if (section != f.section)
                throw ValidationError(where + ": key '" + key + "' belongs to section [" +
                                      f.section + "]");
            if (key == std::string("wavelengths_per_fiber") && std::floor(value) != value)
                throw ValidationError(where + ": wavelengths_per_fiber must be an integer");
            f.set(c, value);
            return;
        }
    }
    throw ValidationError(where + ": unknown key '" + key + "'");
}

} // namespace

DeviceCatalog load_catalog(const std::string& path) {
    return parse_catalog(read_text_document(path));
}

DeviceCatalog parse_catalog(const TextDocument& doc) {
    static const std::set<std::string> known_sections = {"", "core", "metro", "access", "server"};
    std::string defaults = doc.top().get("defaults", "");
    for (const auto& e : doc.top().kv)
        if (e.key != "defaults")
            throw ValidationError(doc.path + ": unknown key '" + e.key + "'");
    if (!defaults.empty() && defaults != "paper")
        throw ValidationError(doc.path + ": defaults must be 'paper', got '" + defaults + "'");

    DeviceCatalog c;  // constructed with the paper's Table 1-7 values
    std::set<std::string> overridden;
    for (const auto& sec : doc.sections) {
        if (!known_sections.count(sec.name))
            throw ValidationError(doc.path + ": unknown section [" + sec.name + "]");
        if (!sec.rows.empty())
            throw ValidationError(doc.path + ": stray table row in section [" + sec.name + "]");
        if (sec.name.empty()) continue;
        for (const auto& e : sec.kv) {
            std::string where = doc.path + ":" + std::to_string(e.line);
            set_field(c, sec.name, e.key, parse_number(e.value, where), where);
            overridden.insert(e.key);
        }
    }

    if (defaults != "paper") {
        for (const auto& f : fields())
            if (!overridden.count(f.key))
                throw ValidationError(doc.path + ": missing key '" + std::string(f.key) +
                                      "' (no 'defaults = paper' fallback declared)");
    }

    auto violations = validate_catalog(c);
    if (!violations.empty()) {
        const auto& v = violations.front();
        throw ValidationError(doc.path + ": " + v.kind + "(" + v.key + ") value " +
                              std::to_string(v.value));
    }
    return c;
}

std::vector<CatalogViolation> validate_catalog(const DeviceCatalog& c) {
    std::vector<CatalogViolation> out;
    for (const auto& f : fields()) {
        double v = f.get(c);
        std::string key = f.key;
        bool is_pue = key.find("pue") != std::string::npos;
        if (is_pue) {
            if (v < 1.0) out.push_back({"PueBelowOne", key, v});
        } else if (!(v > 0.0)) {
            out.push_back({"NonPositive", key, v});
        }
    }
    if (std::floor(static_cast<double>(c.wavelengths_per_fiber)) !=
            static_cast<double>(c.wavelengths_per_fiber) ||
        c.wavelengths_per_fiber <= 0)
        out.push_back({"NonIntegral", "wavelengths_per_fiber",
                       static_cast<double>(c.wavelengths_per_fiber)});
    return out;
}

} // namespace cfog
