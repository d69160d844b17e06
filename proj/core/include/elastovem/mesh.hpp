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

#include <array>
#include <filesystem>
#include <functional>
#include <span>
#include <vector>

namespace elastovem {

/// One segment of the domain boundary, traversed with the domain on the left.
struct BoundaryEdge {
    int from;
    int to;
    int cell;
    int edge; ///< global edge index
};

/// Undirected mesh edge; `v0 < v1`.
struct MeshEdge {
    int v0;
    int v1;
    std::array<int, 2> cells{-1, -1};
    bool on_boundary() const { return cells[1] < 0; }
};

/**
 * Conforming polygonal tessellation of a simply connected polygonal domain.
 *
 * Immutable after construction. The constructor orients every cell counterclockwise
 * (reversed cells are corrected with a logged warning), builds the edge table, checks
 * conformity and extracts the boundary chain, which starts at the lexicographically
 * smallest boundary vertex so that two meshes of one domain share the same arclength origin.
 */
class PolygonalMesh {
public:
    PolygonalMesh(std::vector<Point2> vertices, std::vector<std::vector<int>> cells);

    const std::vector<Point2>& vertices() const { return m_vertices; }
    const std::vector<std::vector<int>>& cells() const { return m_cells; }
    const std::vector<MeshEdge>& edges() const { return m_edges; }
    const std::vector<BoundaryEdge>& boundary_edges() const { return m_boundary; }

    int num_vertices() const { return static_cast<int>(m_vertices.size()); }
    int num_cells() const { return static_cast<int>(m_cells.size()); }
    int num_edges() const { return static_cast<int>(m_edges.size()); }

    /// Global edge index of local edge i (vertex i -> vertex i+1) of a cell.
    int cell_edge(int cell, int local) const { return m_cell_edges[cell][local]; }
    std::span<const int> cell_edges(int cell) const { return m_cell_edges[cell]; }

    bool is_boundary_vertex(int v) const { return m_boundary_vertex[v]; }

    /// Maximum cell diameter.
    double mesh_size() const { return m_h; }
    /// Sum of cell areas.
    double area() const { return m_area; }
    /// Length of the boundary chain.
    double perimeter() const { return m_perimeter; }

    /// Vertex coordinates of one cell in counterclockwise order.
    std::vector<Point2> cell_vertices(int cell) const;

    bool same_as(const PolygonalMesh& other) const;

private:
    std::vector<Point2> m_vertices;
    std::vector<std::vector<int>> m_cells;
    std::vector<std::vector<int>> m_cell_edges;
    std::vector<MeshEdge> m_edges;
    std::vector<BoundaryEdge> m_boundary;
    std::vector<bool> m_boundary_vertex;
    double m_h = 0.0;
    double m_area = 0.0;
    double m_perimeter = 0.0;
};

struct EdgeGeometry {
    Point2 a;
    Point2 b;
    double length;
    Vector2 normal;  ///< unit, outward
    Vector2 tangent; ///< (n2, -n1): opposite to the counterclockwise direction
};

struct ElementGeometry {
    std::vector<Point2> vertices;
    std::vector<EdgeGeometry> edges;
    Point2 centroid;
    double diameter;
    double area;
};

ElementGeometry polygon_geometry(std::span<const Point2> vertices);
ElementGeometry element_geometry(const PolygonalMesh& mesh, int cell);

struct Rectangle {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 1.0;
    double y1 = 1.0;
};

/// nx-by-ny grid of rectangular cells; `keep` (cell center -> bool) masks cells out,
/// which is how L-shaped domains are produced.
PolygonalMesh build_structured_quad_mesh(const Rectangle& domain, int nx, int ny,
                                         const std::function<bool(const Point2&)>& keep = {});

/// L-shaped domain (0,2)^2 minus [0.5,2)^2 covered by square cells of side 0.5/n.
PolygonalMesh build_lshape_quad_mesh(int n);

enum class MeshFormat { Json, Off };

MeshFormat mesh_format_from_path(const std::filesystem::path& path);
PolygonalMesh load_mesh(const std::filesystem::path& path, MeshFormat format);
PolygonalMesh parse_mesh_json(const std::string& text);
PolygonalMesh parse_mesh_off(const std::string& text);
void save_mesh_json(const PolygonalMesh& mesh, const std::filesystem::path& path);

struct CellQuality {
    int cell;
    double edge_ratio; ///< shortest edge / h_E
    double ball_ratio; ///< radius of the largest centroid-centered ball in the kernel / h_E
    bool flagged_a1;
    bool flagged_a2;
};

struct MeshQualityReport {
    std::vector<CellQuality> cells;
    double rho;
    int num_flagged() const;
    double min_edge_ratio() const;
    double min_ball_ratio() const;
};

/// Advisory check of the star-shapedness and edge-length assumptions.
MeshQualityReport validate_mesh_assumptions(const PolygonalMesh& mesh, double rho_threshold);

} // namespace elastovem
