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

#include "elastovem/mesh.hpp"
#include "elastovem/problem.hpp"

#include <optional>
#include <string>
#include <vector>

namespace elastovem {

enum class DomainShape { UnitSquare, LShape };

/// Built-in scenario: identifier, default material and domain, and a problem factory.
struct ScenarioInfo {
    std::string id;
    std::string description;
    MaterialParams material;
    DomainShape domain;
    bool has_exact_solution;
};

const std::vector<ScenarioInfo>& builtin_scenarios();
const ScenarioInfo& find_scenario(const std::string& id);

/// Problem of a built-in scenario; `material` overrides the scenario default.
ElasticProblem make_scenario_problem(const std::string& id, const std::optional<MaterialParams>& material = {});

/// phi_P = x1 + x2, phi_S = x2^3, u = (1 + 3 x2^2, 1).
ElasticProblem patch_test_problem(const MaterialParams& material = {});

/// Sandstone layer on the unit square: f_P = 2 cos(x1) / (lambda + 2 mu), f_S = 0,
/// g = (-sin x1 + cos x2, 0). No closed-form solution.
MaterialParams sandstone_material();
ElasticProblem sandstone_problem(const MaterialParams& material = sandstone_material());

/// Vector source of the elastic operator for two Gaussian bumps on the L-shaped domain; the
/// decomposition of f is computed numerically.
MaterialParams gaussian_source_material();
ElasticProblem gaussian_source_problem(const MaterialParams& material = gaussian_source_material());

/// phi_P = x1^2 e^x2 cos x2, phi_S = x2^2 e^x1 sin x1.
MaterialParams smooth_potentials_material();
ElasticProblem smooth_potentials_problem(const MaterialParams& material = smooth_potentials_material());

/// Square cells of side 0.5 / n on the L-shaped domain, or n x n on the unit square.
PolygonalMesh scenario_mesh(DomainShape domain, int n);

} // namespace elastovem
