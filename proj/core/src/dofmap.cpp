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
#include "elastovem/dofmap.hpp"

#include "elastovem/vemspace.hpp"

namespace elastovem {

DofMap::DofMap(const PolygonalMesh& mesh, int k) : m_k(k) {
    const int ne_pts = k - 1;
    const int nmom = k * (k - 1) / 2;
    m_vertex_dof.assign(mesh.num_vertices(), -1);
    m_edge_dofs.assign(static_cast<std::size_t>(mesh.num_edges()) * ne_pts, -1);
    m_moment_dofs.assign(static_cast<std::size_t>(mesh.num_cells()) * nmom, -1);
    const auto t = edge_dof_parameters(k);

    auto add = [this](DofKind kind, const Point2& x) {
        m_kind.push_back(kind);
        m_location.push_back(x);
        return m_num_dofs++;
    };
    auto number_edge = [&](int e, bool forward) {
        const MeshEdge& edge = mesh.edges()[e];
        const Point2& a = mesh.vertices()[edge.v0];
        const Point2& b = mesh.vertices()[edge.v1];
        for (int j = 0; j < ne_pts; ++j) {
            const int slot = forward ? j : ne_pts - 1 - j;
            m_edge_dofs[e * ne_pts + slot] = add(DofKind::EdgePoint, a + t[slot] * (b - a));
        }
    };

    for (const auto& be : mesh.boundary_edges()) {
        const bool forward = mesh.edges()[be.edge].v0 == be.from;
        m_boundary_edges.emplace_back(be.edge, forward);
        m_vertex_dof[be.from] = add(DofKind::Vertex, mesh.vertices()[be.from]);
        number_edge(be.edge, forward);
    }
    m_num_boundary = m_num_dofs;

    m_cell_dofs.resize(mesh.num_cells());
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const auto& cell = mesh.cells()[c];
        const int n = static_cast<int>(cell.size());
        for (int v : cell) {
            if (m_vertex_dof[v] < 0) {
                m_vertex_dof[v] = add(DofKind::Vertex, mesh.vertices()[v]);
            }
        }
        for (int i = 0; i < n; ++i) {
            const int e = mesh.cell_edge(c, i);
            if (ne_pts > 0 && m_edge_dofs[e * ne_pts] < 0) {
                number_edge(e, true);
            }
        }
        if (nmom > 0) {
            const auto g = element_geometry(mesh, c);
            for (int b = 0; b < nmom; ++b) {
                m_moment_dofs[c * nmom + b] = add(DofKind::Moment, g.centroid);
            }
        }

        auto& dofs = m_cell_dofs[c];
        dofs.reserve(k * n + nmom);
        for (int v : cell) {
            dofs.push_back(m_vertex_dof[v]);
        }
        for (int i = 0; i < n; ++i) {
            const int e = mesh.cell_edge(c, i);
            const bool forward = mesh.edges()[e].v0 == cell[i];
            for (int j = 0; j < ne_pts; ++j) {
                dofs.push_back(m_edge_dofs[e * ne_pts + (forward ? j : ne_pts - 1 - j)]);
            }
        }
        for (int b = 0; b < nmom; ++b) {
            dofs.push_back(m_moment_dofs[c * nmom + b]);
        }
    }
}

std::span<const int> DofMap::edge_dofs(int edge) const {
    return std::span<const int>(m_edge_dofs).subspan(static_cast<std::size_t>(edge) * (m_k - 1), m_k - 1);
}

std::span<const int> DofMap::moment_dofs(int cell) const {
    const int nmom = m_k * (m_k - 1) / 2;
    return std::span<const int>(m_moment_dofs).subspan(static_cast<std::size_t>(cell) * nmom, nmom);
}

std::vector<int> DofMap::boundary_edge_dofs(int i) const {
    const auto [e, forward] = m_boundary_edges[i];
    const int next = (i + 1) % static_cast<int>(m_boundary_edges.size());
    std::vector<int> dofs;
    dofs.reserve(m_k + 1);
    // the chain's start vertices are numbered in chain order: DOF of edge i's start vertex
    dofs.push_back(i * m_k);
    const auto pts = edge_dofs(e);
    for (int j = 0; j < m_k - 1; ++j) {
        dofs.push_back(pts[forward ? j : m_k - 2 - j]);
    }
    dofs.push_back(next * m_k);
    return dofs;
}

} // namespace elastovem
