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
#include "elastovem/dofmap.hpp"
#include "elastovem/mesh.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <functional>
#include <utility>
#include <vector>

namespace elastovem {

/// Scalar datum on the boundary; receives the point and the unit normal and tangent of the
/// boundary edge it is evaluated on.
using BoundaryFunction = std::function<double(const Point2& x, const Vector2& normal, const Vector2& tangent)>;

BoundaryFunction normal_component(VectorFunction g);
BoundaryFunction tangential_component(VectorFunction g);

/**
 * Traces of an order-k space on the boundary chain. Boundary edge i runs from arclength
 * s_i to s_{i+1} (counterclockwise from the chain start); on it a trace is the degree-k
 * Lagrange interpolant of its k+1 boundary DOFs at the Gauss-Lobatto nodes.
 */
class BoundaryTraceSpace {
public:
    BoundaryTraceSpace(const PolygonalMesh& mesh, const DofMap& dofs);

    int order() const { return m_k; }
    int num_edges() const { return static_cast<int>(m_edges.size()); }
    int num_dofs() const { return m_num_dofs; }
    int num_boundary_dofs() const { return m_num_boundary; }
    double perimeter() const { return m_breaks.back(); }

    /// Arclength breakpoints s_0 = 0 < ... < s_n = perimeter.
    const std::vector<double>& breakpoints() const { return m_breaks; }
    /// Geometry of edge i in chain direction (a = start, b = end).
    const EdgeGeometry& edge(int i) const { return m_edges[i]; }
    const std::vector<int>& edge_dofs(int i) const { return m_edge_dofs[i]; }
    /// Lagrange nodes on [0, 1].
    const std::vector<double>& nodes() const { return m_nodes; }

    /// Boundary edge containing arclength s (the later edge at a breakpoint).
    int edge_at(double s) const;
    Point2 point_at(double s) const;

    /// Lagrange basis values and t-derivatives at a local parameter t in [0, 1].
    Eigen::VectorXd basis_values(double t) const;
    Eigen::VectorXd basis_derivatives(double t) const;

private:
    int m_k;
    int m_num_dofs;
    int m_num_boundary;
    std::vector<EdgeGeometry> m_edges;
    std::vector<std::vector<int>> m_edge_dofs;
    std::vector<double> m_breaks;
    std::vector<double> m_nodes;
};

/// Q_ij = <Phi_j, Phi_i> on the boundary, a num_dofs x num_dofs matrix supported on the
/// boundary block.
Eigen::SparseMatrix<double> assemble_boundary_mass(const BoundaryTraceSpace& space);

/**
 * Coupling matrices on possibly non-matching boundary partitions:
 * B_PS(i, j) = <d_tau Phi^S_j, Phi^P_i> (P rows, S columns) and
 * B_SP(i, j) = <d_tau Phi^P_j, Phi^S_i> (S rows, P columns),
 * integrated exactly on the merged partition. Throws BoundaryMismatchError when the two
 * chains do not describe the same oriented curve.
 */
std::pair<Eigen::SparseMatrix<double>, Eigen::SparseMatrix<double>>
assemble_coupling(const BoundaryTraceSpace& space_p, const BoundaryTraceSpace& space_s);

/// <g, Phi_i> on the boundary by Gauss quadrature of the datum on each edge.
Eigen::VectorXd boundary_load(const BoundaryTraceSpace& space, const BoundaryFunction& g, int extra_degree = 4);

/// Edge-wise interpolated datum: each edge's mass block applied to g sampled at its nodes.
Eigen::VectorXd boundary_load_interpolated(const BoundaryTraceSpace& space, const BoundaryFunction& g);

/// Tangential derivative of a trace on one edge, given by its k+1 nodal values, as power
/// coefficients in the arclength sigma measured from the edge start along the chain.
Eigen::VectorXd tangential_derivative_trace(const BoundaryTraceSpace& space, int edge,
                                            const Eigen::VectorXd& nodal_values);

} // namespace elastovem
