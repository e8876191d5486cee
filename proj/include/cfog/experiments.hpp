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

#ifndef CFOG_EXPERIMENTS_HPP
#define CFOG_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "cfog/report.hpp"
#include "cfog/solver.hpp"

namespace cfog {

enum class ExperimentKind { CoreTrafficSweep, VmPlacement, SolarComparison, ExportInstance };

struct ExperimentConfig {
    ExperimentKind kind = ExperimentKind::CoreTrafficSweep;
    std::string topology_path;
    std::string catalog_path;
    std::string scenario_path;
    std::string vms_path;
    std::string out_dir = "out";
    FormulationOptions options;
    SolveLimits limits;
    std::vector<double> scales = {1.0};
    std::vector<double> maxw_list;               // empty: keep the VM file values
    std::vector<WorkloadProfile> profiles = {WorkloadProfile::Linear};
    std::string solar_mode = "off";              // on | off | both
    std::vector<double> export_hours;            // empty: all slots
    int workers = 0;                             // 0: hardware concurrency
};

/// Parses the shared structured-text config dialect; relative input paths are
/// resolved against the config file's directory.
ExperimentConfig load_experiment_config(const std::string& path);

struct ExperimentOutcome {
    int failed_solves = 0;
    std::vector<std::string> csv_files;
    std::vector<std::string> notes;
};

ExperimentOutcome run_core_traffic_sweep(const ExperimentConfig& config);
ExperimentOutcome run_vm_placement(const ExperimentConfig& config);
ExperimentOutcome run_solar_comparison(const ExperimentConfig& config);
ExperimentOutcome export_instance(const ExperimentConfig& config);

/// Dispatch on config.kind. Returns the process exit code contract:
/// 0 success, 1 at least one solve failed, 2 configuration error.
int run_experiment(const ExperimentConfig& config);

} // namespace cfog

#endif // CFOG_EXPERIMENTS_HPP
