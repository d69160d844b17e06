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

#include <span>
#include <vector>

namespace elastovem {

enum class DofKind { Vertex, EdgePoint, Moment };

/**
 * Global numbering of the order-k space on a mesh. Boundary DOFs come first, in boundary
 * chain order (each boundary edge contributes its start vertex, then its interior points in
 * chain direction); interior DOFs follow cell by cell (vertices, edge points, moments).
 * Edge points are stored in the canonical direction v0 -> v1 of the edge.
 */
class DofMap {
public:
    DofMap(const PolygonalMesh& mesh, int k);

    int order() const { return m_k; }
    int num_dofs() const { return m_num_dofs; }
    int num_boundary_dofs() const { return m_num_boundary; }
    int num_interior_dofs() const { return m_num_dofs - m_num_boundary; }
    bool is_boundary(int dof) const { return dof < m_num_boundary; }

    int vertex_dof(int v) const { return m_vertex_dof[v]; }
    /// Interior points of a global edge from v0 towards v1.
    std::span<const int> edge_dofs(int edge) const;
    std::span<const int> moment_dofs(int cell) const;

    /// Global DOFs of a cell in local layout order.
    std::span<const int> cell_dofs(int cell) const { return m_cell_dofs[cell]; }

    /// The k+1 DOFs of boundary chain edge i from its start to its end vertex.
    std::vector<int> boundary_edge_dofs(int i) const;

    DofKind kind(int dof) const { return m_kind[dof]; }
    /// Location of a point DOF; the owning cell's centroid for moments.
    const Point2& location(int dof) const { return m_location[dof]; }

private:
    int m_k;
    int m_num_dofs = 0;
    int m_num_boundary = 0;
    std::vector<int> m_vertex_dof;
    std::vector<int> m_edge_dofs;   // (k-1) per edge
    std::vector<int> m_moment_dofs; // k(k-1)/2 per cell
    std::vector<std::vector<int>> m_cell_dofs;
    std::vector<std::pair<int, bool>> m_boundary_edges; // (edge, chain runs v0 -> v1)
    std::vector<DofKind> m_kind;
    std::vector<Point2> m_location;
};

} // namespace elastovem
