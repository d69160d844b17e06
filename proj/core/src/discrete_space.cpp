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
#include "elastovem/discrete_space.hpp"

#include "elastovem/parallel.hpp"
#include "elastovem/quadrature.hpp"

#include <algorithm>

namespace elastovem {

namespace {

Eigen::SparseMatrix<double> assemble(const DofMap& dofs, const std::vector<ElementOperators>& elements,
                                     Eigen::MatrixXd ElementOperators::*local) {
    std::vector<Eigen::Triplet<double>> t;
    std::size_t nnz = 0;
    for (const auto& op : elements) {
        nnz += static_cast<std::size_t>((op.*local).size());
    }
    t.reserve(nnz);
    for (std::size_t c = 0; c < elements.size(); ++c) {
        const auto& m = elements[c].*local;
        const auto cd = dofs.cell_dofs(static_cast<int>(c));
        for (int j = 0; j < m.cols(); ++j) {
            for (int i = 0; i < m.rows(); ++i) {
                t.emplace_back(cd[i], cd[j], m(i, j));
            }
        }
    }
    Eigen::SparseMatrix<double> A(dofs.num_dofs(), dofs.num_dofs());
    A.setFromTriplets(t.begin(), t.end());
    return A;
}

} // namespace

int load_projection_degree(int k, LoadProjection projection) {
    return projection == LoadProjection::Full ? k : std::max(1, k - 2);
}

ScalarVemSpace::ScalarVemSpace(std::shared_ptr<const PolygonalMesh> mesh, int k)
    : m_mesh(std::move(mesh)), m_dofs(*m_mesh, k), m_trace(*m_mesh, m_dofs) {
    m_elements.resize(m_mesh->num_cells());
    parallel_for(m_mesh->num_cells(),
                 [&](int c) { m_elements[c] = build_element_operators(element_geometry(*m_mesh, c), k, c); });
    m_stiffness = assemble(m_dofs, m_elements, &ElementOperators::K);
    m_mass = assemble(m_dofs, m_elements, &ElementOperators::M);
    m_boundary_mass = assemble_boundary_mass(m_trace);
}

Eigen::VectorXd ScalarVemSpace::interpolate(const ScalarFunction& f, int extra_degree) const {
    Eigen::VectorXd v(num_dofs());
    for (int i = 0; i < num_dofs(); ++i) {
        if (m_dofs.kind(i) != DofKind::Moment) {
            v[i] = f(m_dofs.location(i));
        }
    }
    if (order() >= 2) {
        parallel_for(m_mesh->num_cells(), [&](int c) {
            const auto& g = m_elements[c].geometry;
            const ScaledMonomialBasis low(order() - 2, g);
            Eigen::VectorXd m = Eigen::VectorXd::Zero(low.size());
            for (const auto& q : polygon_rule(g.vertices, g.centroid, 2 * order() + 2 + extra_degree)) {
                m += q.w * f(q.x) * low.evaluate(q.x);
            }
            m /= g.area;
            const auto md = m_dofs.moment_dofs(c);
            for (int b = 0; b < low.size(); ++b) {
                v[md[b]] = m[b];
            }
        });
    }
    return v;
}

Eigen::VectorXd ScalarVemSpace::source_load(const ScalarFunction& f, LoadProjection projection,
                                            int extra_degree) const {
    const int kp = load_projection_degree(order(), projection);
    std::vector<Eigen::VectorXd> local(m_mesh->num_cells());
    parallel_for(m_mesh->num_cells(), [&](int c) {
        const auto& op = m_elements[c];
        const auto& g = op.geometry;
        const ScaledMonomialBasis basis(kp, g);
        Eigen::VectorXd moments = Eigen::VectorXd::Zero(basis.size());
        for (const auto& q : polygon_rule(g.vertices, g.centroid, 2 * order() + 2 + extra_degree)) {
            moments += q.w * f(q.x) * basis.evaluate(q.x);
        }
        local[c] = op.pi_zero_star_reduced(kp).transpose() * moments;
    });
    Eigen::VectorXd F = Eigen::VectorXd::Zero(num_dofs());
    for (int c = 0; c < m_mesh->num_cells(); ++c) {
        const auto cd = m_dofs.cell_dofs(c);
        for (int i = 0; i < local[c].size(); ++i) {
            F[cd[i]] += local[c][i];
        }
    }
    return F;
}

Eigen::VectorXd ScalarVemSpace::discrete_source_load(const Eigen::VectorXd& w, LoadProjection projection) const {
    const int kp = load_projection_degree(order(), projection);
    const int n = monomial_count(kp);
    Eigen::VectorXd F = Eigen::VectorXd::Zero(num_dofs());
    for (int c = 0; c < m_mesh->num_cells(); ++c) {
        const auto& op = m_elements[c];
        const Eigen::MatrixXd P = op.pi_zero_star_reduced(kp);
        const Eigen::VectorXd local = P.transpose() * (op.H.topLeftCorner(n, n) * (P * local_dofs(c, w)));
        const auto cd = m_dofs.cell_dofs(c);
        for (int i = 0; i < local.size(); ++i) {
            F[cd[i]] += local[i];
        }
    }
    return F;
}

Eigen::VectorXd ScalarVemSpace::local_dofs(int cell, const Eigen::VectorXd& global) const {
    const auto cd = m_dofs.cell_dofs(cell);
    Eigen::VectorXd v(cd.size());
    for (std::size_t i = 0; i < cd.size(); ++i) {
        v[i] = global[cd[i]];
    }
    return v;
}

Eigen::VectorXd ScalarVemSpace::projection_coefficients(int cell, const Eigen::VectorXd& global) const {
    return m_elements[cell].pi_nabla_star * local_dofs(cell, global);
}

} // namespace elastovem
