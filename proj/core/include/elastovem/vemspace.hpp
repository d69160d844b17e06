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

#include "elastovem/common.hpp"
#include "elastovem/mesh.hpp"
#include "elastovem/polybasis.hpp"

#include <Eigen/Dense>

#include <vector>

namespace elastovem {

/**
 * Local DOF order of the enhanced space of order k on an element with n_E edges:
 * vertex values (counterclockwise), then the k-1 interior Gauss-Lobatto points of each
 * edge i (from vertex i towards vertex i+1), then the moments (1/|E|) (w, m_beta) for
 * |beta| <= k-2.
 */
struct DofLayout {
    int k = 1;
    int num_edges = 0;

    int num_vertex_dofs() const { return num_edges; }
    int num_edge_dofs() const { return (k - 1) * num_edges; }
    int num_point_dofs() const { return k * num_edges; }
    int num_moments() const { return k * (k - 1) / 2; }
    int size() const { return k * num_edges + num_moments(); }

    int vertex_dof(int i) const { return i; }
    int edge_dof(int edge, int j) const { return num_edges + edge * (k - 1) + j; }
    int moment_dof(int beta) const { return num_point_dofs() + beta; }
};

/// Interior Gauss-Lobatto abscissae on [0, 1] used for edge DOFs of order k (k-1 of them).
std::vector<double> edge_dof_parameters(int k);

/// Coordinates of the point DOFs (vertices, then edge points) of an element.
std::vector<Point2> dof_points(const ElementGeometry& element, int k);

struct ElementOperators {
    int k = 1;
    ElementGeometry geometry;
    DofLayout layout;
    Eigen::MatrixXd D;              ///< D(i, alpha) = dof_i(m_alpha)
    Eigen::MatrixXd H;              ///< monomial mass matrix, degree k
    Eigen::MatrixXd G_tilde;        ///< monomial stiffness matrix, degree k
    Eigen::MatrixXd pi_nabla_star;  ///< DOFs -> coefficients of the H1 projection
    Eigen::MatrixXd pi_nabla_dof;   ///< DOFs -> DOFs of the H1 projection
    Eigen::MatrixXd pi_zero_star;   ///< DOFs -> coefficients of the L2 projection
    Eigen::MatrixXd pi_zero_dof;
    Eigen::MatrixXd K;              ///< stabilized stiffness
    Eigen::MatrixXd M;              ///< stabilized mass

    ScaledMonomialBasis basis() const { return {k, geometry}; }

    /// Coefficients (degree kp <= k) of the L2 projection onto P_kp.
    Eigen::MatrixXd pi_zero_star_reduced(int kp) const;
};

/// Builds every local operator. `cell` only labels diagnostics.
ElementOperators build_element_operators(const ElementGeometry& element, int k, int cell = -1);

Eigen::MatrixXd compute_pi_nabla(const ElementGeometry& element, int k);
Eigen::MatrixXd compute_pi_zero(const ElementGeometry& element, int k);
Eigen::MatrixXd local_stiffness(const ElementGeometry& element, int k);
Eigen::MatrixXd local_mass(const ElementGeometry& element, int k);

/// Local DOFs of the interpolant: point values sampled, moments integrated with a rule of
/// degree 2k + 2 + extra_degree.
Eigen::VectorXd interpolate_into_space(const ElementGeometry& element, int k, const ScalarFunction& f,
                                       int extra_degree = 4);

} // namespace elastovem
