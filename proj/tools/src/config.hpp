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

#include <elastovem/assembly.hpp>
#include <elastovem/mesh.hpp>
#include <elastovem/problem.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace elastovem::cli {

/// Invalid configuration; `path` is the dotted location of the offending field.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string path, const std::string& message)
        : std::runtime_error(path.empty() ? message : path + ": " + message), m_path(std::move(path)) {}
    const std::string& path() const { return m_path; }

private:
    std::string m_path;
};

enum class DomainKind { Rectangle, LShape, Mesh };

/// Which source data drives the potentials: the scalar sources f_P, f_S of the scenario, or
/// its vector field decomposed numerically. `Scenario` picks whichever the scenario defines.
enum class SourceKind { Scenario, Potentials, Vector };

/// One refinement level: cells per side for each potential, or mesh files.
struct LevelSpec {
    int n_p = 0;
    int n_s = 0;
    std::string mesh_p;
    std::string mesh_s;

    bool operator==(const LevelSpec&) const = default;
};

struct ScenarioConfig {
    std::string scenario;
    SourceKind source = SourceKind::Scenario;
    std::optional<MaterialParams> material;
    int k_p = 1;
    int k_s = 1;
    DomainKind domain = DomainKind::Rectangle;
    Rectangle rectangle;
    std::vector<LevelSpec> levels;
    std::optional<LevelSpec> reference;
    LoadProjection load_projection = LoadProjection::Full;
    BoundaryLoadMode boundary_load = BoundaryLoadMode::Quadrature;
    std::string output_directory = "elastovem-out";
    int grid_samples = 51;
    bool export_matrices = false;
};

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

ScenarioConfig parse_config(const nlohmann::json& j);
nlohmann::json to_json(const ScenarioConfig& config);

/// Reads a JSON config; relative mesh paths are resolved against the directory of the file.
ScenarioConfig load_config(const std::filesystem::path& path);

} // namespace elastovem::cli
