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

#include "elastovem/dofmap.hpp"
#include "elastovem/mesh.hpp"
#include "elastovem/trace.hpp"
#include "elastovem/vemspace.hpp"

#include <Eigen/SparseCore>

#include <memory>
#include <vector>

namespace elastovem {

/// Polynomial degree of the L2 projection applied to test functions in source terms:
/// Full uses k, Reduced uses max(1, k - 2).
enum class LoadProjection { Full, Reduced };

int load_projection_degree(int k, LoadProjection projection);

/// Global order-k VEM space on a mesh with cached element operators and assembled
/// stiffness, mass and boundary mass matrices.
class ScalarVemSpace {
public:
    ScalarVemSpace(std::shared_ptr<const PolygonalMesh> mesh, int k);

    const PolygonalMesh& mesh() const { return *m_mesh; }
    const std::shared_ptr<const PolygonalMesh>& mesh_ptr() const { return m_mesh; }
    int order() const { return m_dofs.order(); }
    int num_dofs() const { return m_dofs.num_dofs(); }
    const DofMap& dofs() const { return m_dofs; }
    const BoundaryTraceSpace& trace() const { return m_trace; }
    const ElementOperators& element(int cell) const { return m_elements[cell]; }

    const Eigen::SparseMatrix<double>& stiffness() const { return m_stiffness; }
    const Eigen::SparseMatrix<double>& mass() const { return m_mass; }
    const Eigen::SparseMatrix<double>& boundary_mass() const { return m_boundary_mass; }

    /// Global DOFs of the interpolant of f.
    Eigen::VectorXd interpolate(const ScalarFunction& f, int extra_degree = 4) const;

    /// (f, Pi0 v) for every basis function v.
    Eigen::VectorXd source_load(const ScalarFunction& f, LoadProjection projection, int extra_degree = 4) const;

    /// (Pi0 w_h, Pi0 v) for a discrete function w_h of this space.
    Eigen::VectorXd discrete_source_load(const Eigen::VectorXd& w, LoadProjection projection) const;

    Eigen::VectorXd local_dofs(int cell, const Eigen::VectorXd& global) const;
    /// Coefficients of the H1 projection of a discrete function on one cell.
    Eigen::VectorXd projection_coefficients(int cell, const Eigen::VectorXd& global) const;

private:
    std::shared_ptr<const PolygonalMesh> m_mesh;
    DofMap m_dofs;
    BoundaryTraceSpace m_trace;
    std::vector<ElementOperators> m_elements;
    Eigen::SparseMatrix<double> m_stiffness;
    Eigen::SparseMatrix<double> m_mass;
    Eigen::SparseMatrix<double> m_boundary_mass;
};

} // namespace elastovem
