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
#include "elastovem/mesh.hpp"

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace elastovem {

namespace {

double cross(const Vector2& u, const Vector2& v) { return u.x() * v.y() - u.y() * v.x(); }

double signed_area(std::span<const Point2> p) {
    double a = 0.0;
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        a += cross(p[i], p[(i + 1) % n]);
    }
    return 0.5 * a;
}

bool segments_intersect(const Point2& p1, const Point2& p2, const Point2& q1, const Point2& q2) {
    const double d1 = cross(p2 - p1, q1 - p1);
    const double d2 = cross(p2 - p1, q2 - p1);
    const double d3 = cross(q2 - q1, p1 - q1);
    const double d4 = cross(q2 - q1, p2 - q1);
    return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

std::string cell_name(int c) { return "cell " + std::to_string(c); }

} // namespace

PolygonalMesh::PolygonalMesh(std::vector<Point2> vertices, std::vector<std::vector<int>> cells)
    : m_vertices(std::move(vertices)), m_cells(std::move(cells)) {
    const int nv = num_vertices();
    if (m_cells.empty()) {
        throw MeshError("mesh has no cells");
    }

    // Drop vertices no cell refers to.
    std::vector<int> used(nv, 0);
    for (std::size_t c = 0; c < m_cells.size(); ++c) {
        auto& cell = m_cells[c];
        if (cell.size() < 3) {
            throw MeshError(cell_name(static_cast<int>(c)) + " has fewer than 3 vertices");
        }
        for (int v : cell) {
            if (v < 0 || v >= nv) {
                throw MeshError(cell_name(static_cast<int>(c)) + " refers to vertex " + std::to_string(v) +
                                " out of range");
            }
            used[v] = 1;
        }
    }
    if (std::count(used.begin(), used.end(), 0) > 0) {
        spdlog::warn("mesh: removing {} unreferenced vertices", std::count(used.begin(), used.end(), 0));
        std::vector<int> renumber(nv, -1);
        std::vector<Point2> kept;
        for (int v = 0; v < nv; ++v) {
            if (used[v]) {
                renumber[v] = static_cast<int>(kept.size());
                kept.push_back(m_vertices[v]);
            }
        }
        m_vertices = std::move(kept);
        for (auto& cell : m_cells) {
            for (int& v : cell) {
                v = renumber[v];
            }
        }
    }

    double bbox_diag = 0.0;
    {
        Point2 lo = m_vertices.front(), hi = m_vertices.front();
        for (const auto& p : m_vertices) {
            lo = lo.cwiseMin(p);
            hi = hi.cwiseMax(p);
        }
        bbox_diag = (hi - lo).norm();
    }

    // Orientation, degeneracy and simplicity of each cell.
    for (int c = 0; c < num_cells(); ++c) {
        auto& cell = m_cells[c];
        const std::size_t n = cell.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (cell[i] == cell[(i + 1) % n]) {
                throw MeshError(cell_name(c) + " repeats a vertex");
            }
        }
        const auto pts = cell_vertices(c);
        const double a = signed_area(pts);
        if (std::abs(a) <= 1e-14 * bbox_diag * bbox_diag) {
            throw MeshError(cell_name(c) + " is degenerate (zero area)");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) {
                    continue;
                }
                if (segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) {
                    throw MeshError(cell_name(c) + " is self-intersecting");
                }
            }
        }
        if (a < 0.0) {
            spdlog::warn("mesh: {} listed clockwise, reversing", cell_name(c));
            std::reverse(cell.begin(), cell.end());
        }
    }

    // Edge table.
    std::map<std::pair<int, int>, int> edge_index;
    std::vector<std::array<int, 2>> edge_dir_owner; // first owner's orientation sign
    m_cell_edges.resize(m_cells.size());
    for (int c = 0; c < num_cells(); ++c) {
        const auto& cell = m_cells[c];
        const int n = static_cast<int>(cell.size());
        m_cell_edges[c].resize(n);
        for (int i = 0; i < n; ++i) {
            const int a = cell[i];
            const int b = cell[(i + 1) % n];
            const auto key = std::minmax(a, b);
            auto [it, inserted] = edge_index.try_emplace({key.first, key.second}, num_edges());
            if (inserted) {
                m_edges.push_back({key.first, key.second, {c, -1}});
                edge_dir_owner.push_back({a, b});
            } else {
                MeshEdge& e = m_edges[it->second];
                if (e.cells[1] >= 0) {
                    throw MeshError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") shared by more than two cells");
                }
                if (edge_dir_owner[it->second][0] == a) {
                    throw MeshError("cells " + std::to_string(e.cells[0]) + " and " + std::to_string(c) +
                                    " overlap along edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
                }
                e.cells[1] = c;
            }
            m_cell_edges[c][i] = it->second;
        }
    }

    // Boundary chain.
    std::map<int, BoundaryEdge> outgoing;
    for (int c = 0; c < num_cells(); ++c) {
        const auto& cell = m_cells[c];
        const int n = static_cast<int>(cell.size());
        for (int i = 0; i < n; ++i) {
            const int e = m_cell_edges[c][i];
            if (!m_edges[e].on_boundary()) {
                continue;
            }
            const BoundaryEdge be{cell[i], cell[(i + 1) % n], c, e};
            if (!outgoing.emplace(be.from, be).second) {
                throw MeshError("non-conforming mesh: boundary vertex " + std::to_string(be.from) +
                                " starts two boundary edges");
            }
        }
    }
    if (outgoing.empty()) {
        throw MeshError("mesh has no boundary");
    }
    int start = outgoing.begin()->first;
    for (const auto& [v, be] : outgoing) {
        const Point2& p = m_vertices[v];
        const Point2& q = m_vertices[start];
        if (p.x() < q.x() || (p.x() == q.x() && p.y() < q.y())) {
            start = v;
        }
    }
    int current = start;
    do {
        auto it = outgoing.find(current);
        if (it == outgoing.end()) {
            throw MeshError("non-conforming mesh: boundary chain is open at vertex " + std::to_string(current));
        }
        m_boundary.push_back(it->second);
        current = it->second.to;
        if (m_boundary.size() > outgoing.size()) {
            throw MeshError("non-conforming mesh: boundary chain does not close");
        }
    } while (current != start);
    if (m_boundary.size() != outgoing.size()) {
        throw MeshError("non-conforming mesh: boundary splits into several loops (hanging vertex or hole)");
    }

    m_boundary_vertex.assign(m_vertices.size(), false);
    std::vector<Point2> chain;
    for (const auto& be : m_boundary) {
        m_boundary_vertex[be.from] = true;
        chain.push_back(m_vertices[be.from]);
        m_perimeter += (m_vertices[be.to] - m_vertices[be.from]).norm();
    }

    for (int c = 0; c < num_cells(); ++c) {
        const auto geo = element_geometry(*this, c);
        m_area += geo.area;
        m_h = std::max(m_h, geo.diameter);
    }
    const double enclosed = signed_area(chain);
    if (std::abs(enclosed - m_area) > 1e-10 * m_area) {
        throw MeshError("cells do not tile the region bounded by the boundary chain");
    }
}

std::vector<Point2> PolygonalMesh::cell_vertices(int cell) const {
    std::vector<Point2> pts;
    pts.reserve(m_cells[cell].size());
    for (int v : m_cells[cell]) {
        pts.push_back(m_vertices[v]);
    }
    return pts;
}

bool PolygonalMesh::same_as(const PolygonalMesh& other) const {
    if (other.num_vertices() != num_vertices() || other.m_cells != m_cells) {
        return false;
    }
    for (int v = 0; v < num_vertices(); ++v) {
        if ((m_vertices[v] - other.m_vertices[v]).norm() > 1e-14 * (1.0 + m_h)) {
            return false;
        }
    }
    return true;
}

ElementGeometry polygon_geometry(std::span<const Point2> vertices) {
    ElementGeometry g;
    g.vertices.assign(vertices.begin(), vertices.end());
    const std::size_t n = vertices.size();
    double a = 0.0;
    Point2 c = Point2::Zero();
    const Point2 ref = vertices[0];
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 p = vertices[i] - ref;
        const Point2 q = vertices[(i + 1) % n] - ref;
        const double w = cross(p, q);
        a += w;
        c += w * (p + q);
    }
    g.area = 0.5 * a;
    g.centroid = ref + c / (3.0 * a);
    g.diameter = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            g.diameter = std::max(g.diameter, (vertices[i] - vertices[j]).norm());
        }
    }
    g.edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        EdgeGeometry e;
        e.a = vertices[i];
        e.b = vertices[(i + 1) % n];
        const Vector2 d = e.b - e.a;
        e.length = d.norm();
        e.normal = Vector2(d.y(), -d.x()) / e.length;
        e.tangent = Vector2(e.normal.y(), -e.normal.x());
        g.edges.push_back(e);
    }
    return g;
}

ElementGeometry element_geometry(const PolygonalMesh& mesh, int cell) {
    const auto pts = mesh.cell_vertices(cell);
    return polygon_geometry(pts);
}

PolygonalMesh build_structured_quad_mesh(const Rectangle& domain, int nx, int ny,
                                         const std::function<bool(const Point2&)>& keep) {
    if (nx < 1 || ny < 1) {
        throw MeshError("structured mesh needs nx, ny >= 1");
    }
    const double dx = (domain.x1 - domain.x0) / nx;
    const double dy = (domain.y1 - domain.y0) / ny;
    std::vector<Point2> vertices;
    vertices.reserve((nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            // exact endpoints so that nested meshes share coordinates bit-for-bit
            const double x = (i == nx) ? domain.x1 : domain.x0 + i * dx;
            const double y = (j == ny) ? domain.y1 : domain.y0 + j * dy;
            vertices.emplace_back(x, y);
        }
    }
    auto id = [nx](int i, int j) { return j * (nx + 1) + i; };
    std::vector<std::vector<int>> cells;
    cells.reserve(nx * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            const Point2 center(domain.x0 + (i + 0.5) * dx, domain.y0 + (j + 0.5) * dy);
            if (keep && !keep(center)) {
                continue;
            }
            cells.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
        }
    }
    if (keep) {
        // compact silently: masked grids always leave unused vertices
        std::vector<int> renumber(vertices.size(), -1);
        std::vector<Point2> kept;
        for (auto& cell : cells) {
            for (int& v : cell) {
                if (renumber[v] < 0) {
                    renumber[v] = static_cast<int>(kept.size());
                    kept.push_back(vertices[v]);
                }
                v = renumber[v];
            }
        }
        return PolygonalMesh(std::move(kept), std::move(cells));
    }
    return PolygonalMesh(std::move(vertices), std::move(cells));
}

PolygonalMesh build_lshape_quad_mesh(int n) {
    return build_structured_quad_mesh(Rectangle{0.0, 0.0, 2.0, 2.0}, 4 * n, 4 * n,
                                      [](const Point2& c) { return !(c.x() > 0.5 && c.y() > 0.5); });
}

MeshFormat mesh_format_from_path(const std::filesystem::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".off" || ext == ".OFF" || ext == ".txt") {
        return MeshFormat::Off;
    }
    return MeshFormat::Json;
}

PolygonalMesh parse_mesh_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw MeshError(std::string("mesh JSON parse error: ") + e.what());
    }
    if (!j.contains("vertices") || !j.contains("cells")) {
        throw MeshError("mesh JSON needs \"vertices\" and \"cells\"");
    }
    std::vector<Point2> vertices;
    std::vector<std::vector<int>> cells;
    try {
        for (const auto& v : j.at("vertices")) {
            if (v.size() < 2) {
                throw MeshError("vertex entry needs two coordinates");
            }
            vertices.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        }
        for (const auto& c : j.at("cells")) {
            cells.push_back(c.get<std::vector<int>>());
        }
    } catch (const nlohmann::json::exception& e) {
        throw MeshError(std::string("mesh JSON has wrong types: ") + e.what());
    }
    return PolygonalMesh(std::move(vertices), std::move(cells));
}

PolygonalMesh parse_mesh_off(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos) {
            lines.push_back(line);
        }
    }
    std::size_t pos = 0;
    if (!lines.empty() && lines[0].find("OFF") != std::string::npos) {
        ++pos;
    }
    if (pos >= lines.size()) {
        throw MeshError("OFF mesh: missing counts line");
    }
    int nv = -1, nc = -1;
    {
        std::istringstream counts(lines[pos++]);
        if (!(counts >> nv >> nc) || nv < 3 || nc < 1) {
            throw MeshError("OFF mesh: malformed counts line");
        }
    }
    if (lines.size() < pos + nv + nc) {
        throw MeshError("OFF mesh: file truncated");
    }
    std::vector<Point2> vertices;
    for (int i = 0; i < nv; ++i) {
        std::istringstream ls(lines[pos++]);
        double x, y;
        if (!(ls >> x >> y)) {
            throw MeshError("OFF mesh: malformed vertex line " + std::to_string(i));
        }
        vertices.emplace_back(x, y);
    }
    std::vector<std::vector<int>> cells;
    for (int i = 0; i < nc; ++i) {
        std::istringstream ls(lines[pos++]);
        int m;
        if (!(ls >> m) || m < 3) {
            throw MeshError("OFF mesh: malformed cell line " + std::to_string(i));
        }
        std::vector<int> cell(m);
        for (int& v : cell) {
            if (!(ls >> v)) {
                throw MeshError("OFF mesh: cell line " + std::to_string(i) + " has too few indices");
            }
        }
        cells.push_back(std::move(cell));
    }
    return PolygonalMesh(std::move(vertices), std::move(cells));
}

PolygonalMesh load_mesh(const std::filesystem::path& path, MeshFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw MeshError("cannot open mesh file '" + path.string() + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return format == MeshFormat::Json ? parse_mesh_json(buffer.str()) : parse_mesh_off(buffer.str());
}

void save_mesh_json(const PolygonalMesh& mesh, const std::filesystem::path& path) {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& p : mesh.vertices()) {
        j["vertices"].push_back({p.x(), p.y()});
    }
    j["cells"] = mesh.cells();
    std::ofstream out(path);
    if (!out) {
        throw MeshError("cannot write mesh file '" + path.string() + "'");
    }
    out << j.dump() << '\n';
}

int MeshQualityReport::num_flagged() const {
    return static_cast<int>(
        std::count_if(cells.begin(), cells.end(), [](const CellQuality& q) { return q.flagged_a1 || q.flagged_a2; }));
}

double MeshQualityReport::min_edge_ratio() const {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& q : cells) {
        r = std::min(r, q.edge_ratio);
    }
    return r;
}

double MeshQualityReport::min_ball_ratio() const {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& q : cells) {
        r = std::min(r, q.ball_ratio);
    }
    return r;
}

MeshQualityReport validate_mesh_assumptions(const PolygonalMesh& mesh, double rho_threshold) {
    MeshQualityReport report;
    report.rho = rho_threshold;
    report.cells.reserve(mesh.num_cells());
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const auto g = element_geometry(mesh, c);
        double shortest = std::numeric_limits<double>::infinity();
        double radius = std::numeric_limits<double>::infinity();
        for (const auto& e : g.edges) {
            shortest = std::min(shortest, e.length);
            // signed distance of the centroid to the edge line, positive inside
            const double d = (e.a - g.centroid).dot(e.normal);
            radius = std::min(radius, d);
        }
        radius = std::max(radius, 0.0);
        CellQuality q{c, shortest / g.diameter, radius / g.diameter, false, false};
        q.flagged_a1 = q.ball_ratio <= rho_threshold;
        q.flagged_a2 = q.edge_ratio <= rho_threshold;
        report.cells.push_back(q);
    }
    return report;
}

} // namespace elastovem
