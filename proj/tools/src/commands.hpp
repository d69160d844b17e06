/*
 * Copyright 2026 The elastovem authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#pragma once

#include "config.hpp"

#include <elastovem/postprocess.hpp>

#include <ostream>

namespace elastovem::cli {

/// Scenario problem with the configured material and source variant.
ElasticProblem build_problem(const ScenarioConfig& config);

/// Meshes of one level; identical specifications share one mesh object.
MeshPair build_level_meshes(const ScenarioConfig& config, const LevelSpec& level);

/// Throws ConfigError naming the field of the first mesh file that does not exist.
void check_mesh_files(const ScenarioConfig& config);

AssemblyOptions assembly_options(const ScenarioConfig& config);

/// Solves the finest level; writes phi_p.csv, phi_s.csv, displacement_grid.csv and
/// diagnostics.json into the output directory.
int cmd_solve(const ScenarioConfig& config, std::ostream& out);

/// Writes convergence.csv and convergence.json; the CSV is echoed to `out`.
int cmd_convergence(const ScenarioConfig& config, std::ostream& out);

/// Returns 0 when every level reproduces the exact displacement to 1e-9 in L2, 1 otherwise.
int cmd_patch_test(const ScenarioConfig& config, std::ostream& out);

inline constexpr double kPatchTolerance = 1e-9;

} // namespace elastovem::cli
