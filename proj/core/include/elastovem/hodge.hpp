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

#include "elastovem/discrete_space.hpp"
#include "elastovem/problem.hpp"

#include <Eigen/Dense>

namespace elastovem {

/**
 * Gradient part of f: a_P(f_h, v) + <1, f_h><1, v> = -(div f, Pi0 v) + <f.n, v> on the
 * boundary. The rank-one term fixes the additive constant.
 */
Eigen::VectorXd solve_neumann_potential(const ScalarVemSpace& space, const VectorSource& source,
                                        LoadProjection projection = LoadProjection::Full);

/// Rotational part of f: a_S(f_h, v) = (curl f, Pi0 v) with f_h = 0 on the boundary.
Eigen::VectorXd solve_dirichlet_potential(const ScalarVemSpace& space, const VectorSource& source,
                                          LoadProjection projection = LoadProjection::Full);

/// Discrete potentials of a vector source on the P and S spaces.
struct HodgeDecomposition {
    Eigen::VectorXd f_p;
    Eigen::VectorXd f_s;
};

HodgeDecomposition decompose_source(const ScalarVemSpace& space_p, const ScalarVemSpace& space_s,
                                    const VectorSource& source, LoadProjection projection = LoadProjection::Full);

} // namespace elastovem
