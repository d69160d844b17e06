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
#include "unit/shapes.hpp"

#include <doctest.h>
#include <elastovem/mesh.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>

using namespace elastovem;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << text;
    return path;
}

double shoelace(const std::vector<Point2>& p) {
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& a = p[i];
        const auto& b = p[(i + 1) % p.size()];
        s += a.x() * b.y() - b.x() * a.y();
    }
    return 0.5 * s;
}

void check_mesh_invariants(const PolygonalMesh& mesh) {
    double area = 0.0;
    for (int c = 0; c < mesh.num_cells(); ++c) {
        const auto g = element_geometry(mesh, c);
        CHECK(g.area > 0.0);
        area += g.area;
        Vector2 closure = Vector2::Zero();
        for (const auto& e : g.edges) {
            CHECK(e.length > 0.0);
            CHECK(e.normal.norm() == doctest::Approx(1.0));
            CHECK(e.tangent.x() == doctest::Approx(e.normal.y()));
            CHECK(e.tangent.y() == doctest::Approx(-e.normal.x()));
            closure += e.length * e.normal;
        }
        CHECK(closure.norm() < 1e-13);
    }
    CHECK(area == doctest::Approx(mesh.area()).epsilon(1e-12));
    const auto& chain = mesh.boundary_edges();
    REQUIRE(!chain.empty());
    for (std::size_t i = 0; i < chain.size(); ++i) {
        CHECK(chain[i].to == chain[(i + 1) % chain.size()].from);
        const auto g = element_geometry(mesh, chain[i].cell);
        const Point2& a = mesh.vertices()[chain[i].from];
        const Point2& b = mesh.vertices()[chain[i].to];
        const Vector2 n = Vector2(b.y() - a.y(), a.x() - b.x()).normalized();
        CHECK(n.dot(0.5 * (a + b) - g.centroid) > 0.0);
    }
}

} // namespace

TEST_SUITE("mesh") {

TEST_CASE("single square cell from a JSON file") {
    const auto path = write_temp("elastovem_square.json", R"({"vertices": [[0,0],[1,0],[1,1],[0,1]], "cells": [[0,1,2,3]]})");
    const auto mesh = load_mesh(path, MeshFormat::Json);
    CHECK(mesh.num_cells() == 1);
    CHECK(mesh.boundary_edges().size() == 4);
    CHECK(mesh.mesh_size() == doctest::Approx(std::sqrt(2.0)));
    check_mesh_invariants(mesh);
}

TEST_CASE("2x2 quad mesh from a file") {
    const auto path = write_temp("elastovem_quad2.off", R"(OFF
# 2x2 quads
9 4
0 0
0.5 0
1 0
0 0.5
0.5 0.5
1 0.5
0 1
0.5 1
1 1
4 0 1 4 3
4 1 2 5 4
4 3 4 7 6
4 4 5 8 7
)");
    const auto mesh = load_mesh(path, mesh_format_from_path(path));
    CHECK(mesh.num_vertices() == 9);
    CHECK(mesh.num_cells() == 4);
    CHECK(mesh.boundary_edges().size() == 8);
    CHECK(mesh.mesh_size() == doctest::Approx(0.7071).epsilon(1e-4));
    check_mesh_invariants(mesh);
}

TEST_CASE("uncovered edge is a non-conforming mesh") {
    const std::string text = R"({"vertices": [[0,0],[1,0],[1,1],[0,1],[2,0],[2,0.5],[1,0.5],[2,1]],
        "cells": [[0,1,2,3],[1,4,5,6],[6,5,7,2]]})";
    CHECK_THROWS_AS(parse_mesh_json(text), MeshError);
    // two squares touching at a corner only
    const std::string bowtie = R"({"vertices": [[0,0],[1,0],[1,1],[0,1],[2,1],[2,2],[1,2]],
        "cells": [[0,1,2,3],[2,4,5,6]]})";
    CHECK_THROWS_AS(parse_mesh_json(bowtie), MeshError);
}

TEST_CASE("malformed and degenerate inputs are rejected") {
    CHECK_THROWS_AS(parse_mesh_json("{not json"), MeshError);
    CHECK_THROWS_AS(parse_mesh_json(R"({"vertices": [[0,0]]})"), MeshError);
    CHECK_THROWS_AS(parse_mesh_json(R"({"vertices": [[0,0],[1,0],[2,0]], "cells": [[0,1,2]]})"), MeshError);
    CHECK_THROWS_AS(parse_mesh_json(R"({"vertices": [[0,0],[1,0],[1,1],[0,1]], "cells": [[0,2,1,3]]})"),
                    MeshError);
    CHECK_THROWS_AS(parse_mesh_off("3 1\n0 0\n1 0\n"), MeshError);
    CHECK_THROWS_AS(load_mesh("/nonexistent/mesh.json", MeshFormat::Json), MeshError);
}

TEST_CASE("clockwise cells are reoriented") {
    const auto mesh = parse_mesh_json(R"({"vertices": [[0,0],[1,0],[1,1],[0,1]], "cells": [[0,3,2,1]]})");
    CHECK(element_geometry(mesh, 0).area == doctest::Approx(1.0));
    check_mesh_invariants(mesh);
}

TEST_CASE("structured builder") {
    const auto m1 = build_structured_quad_mesh({}, 1, 1);
    CHECK(m1.num_cells() == 1);
    CHECK(m1.mesh_size() == doctest::Approx(std::sqrt(2.0)));
    const auto m2 = build_structured_quad_mesh({}, 2, 2);
    CHECK(m2.num_vertices() == 9);
    CHECK(m2.mesh_size() == doctest::Approx(0.7071).epsilon(1e-4));
    const auto m4 = build_structured_quad_mesh({}, 4, 4);
    CHECK(m4.num_vertices() == 25);
    CHECK(m4.mesh_size() == doctest::Approx(0.3536).epsilon(1e-4));
    const auto r = build_structured_quad_mesh({-1.0, 0.0, 2.0, 0.5}, 6, 2);
    CHECK(r.num_vertices() == 21);
    CHECK(r.num_cells() == 12);
    CHECK(r.area() == doctest::Approx(1.5));
    check_mesh_invariants(r);
    // chain starts at the lexicographically smallest corner
    CHECK(r.vertices()[r.boundary_edges().front().from] == Point2(-1.0, 0.0));
}

TEST_CASE("L-shaped builder") {
    const auto mesh = build_lshape_quad_mesh(2);
    CHECK(mesh.num_cells() == 64 - 36 + 0);
    CHECK(mesh.area() == doctest::Approx(4.0 - 1.5 * 1.5));
    CHECK(mesh.perimeter() == doctest::Approx(8.0));
    check_mesh_invariants(mesh);
}

TEST_CASE("element geometry") {
    const auto sq = polygon_geometry(testing::unit_square());
    CHECK(sq.centroid.isApprox(Point2(0.5, 0.5)));
    CHECK(sq.diameter == doctest::Approx(std::sqrt(2.0)));
    CHECK(sq.area == doctest::Approx(1.0));
    const std::vector<Point2> tri = {{0, 0}, {1, 0}, {0, 1}};
    const auto t = polygon_geometry(tri);
    CHECK(t.area == doctest::Approx(0.5));
    CHECK(t.diameter == doctest::Approx(std::sqrt(2.0)));
    CHECK(t.centroid.isApprox(Point2(1.0 / 3.0, 1.0 / 3.0)));
    const auto hex_pts = testing::regular_polygon(6);
    const auto hex = polygon_geometry(hex_pts);
    CHECK(hex.area == doctest::Approx(shoelace(hex_pts)).epsilon(1e-14));
    CHECK(hex.area == doctest::Approx(3.0 * std::sqrt(3.0) / 2.0));
    CHECK(hex.diameter == doctest::Approx(2.0));
    CHECK(hex.centroid.norm() < 1e-14);
}

TEST_CASE("imported Voronoi meshes satisfy the invariants") {
    for (const char* name : {"voronoi_16.json", "voronoi_64.json", "voronoi_256.json"}) {
        const auto mesh = load_mesh(testing::data_path(name), MeshFormat::Json);
        CHECK(mesh.area() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mesh.perimeter() == doctest::Approx(4.0).epsilon(1e-12));
        check_mesh_invariants(mesh);
    }
}

TEST_CASE("JSON save and reload") {
    const auto mesh = build_structured_quad_mesh({}, 3, 2);
    const auto path = std::filesystem::temp_directory_path() / "elastovem_roundtrip.json";
    save_mesh_json(mesh, path);
    CHECK(load_mesh(path, MeshFormat::Json).same_as(mesh));
}

TEST_CASE("mesh quality report") {
    const auto square = build_structured_quad_mesh({}, 1, 1);
    const auto q = validate_mesh_assumptions(square, 0.1);
    CHECK(q.cells[0].edge_ratio == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(q.num_flagged() == 0);

    const auto sliver = parse_mesh_json(R"({"vertices": [[0,0],[1,0],[1,0.01],[0,1]], "cells": [[0,1,2,3]]})");
    const auto s = validate_mesh_assumptions(sliver, 0.1);
    CHECK(s.cells[0].flagged_a2);

    // 2x2 quads: the edge criterion passes at 0.5; the inscribed ball ratio of a square is
    // (s/2)/(s*sqrt(2)) = 0.354
    const auto quad = validate_mesh_assumptions(build_structured_quad_mesh({}, 2, 2), 0.5);
    for (const auto& c : quad.cells) {
        CHECK_FALSE(c.flagged_a2);
        CHECK(c.ball_ratio == doctest::Approx(0.5 / std::sqrt(2.0)));
    }
    CHECK(validate_mesh_assumptions(build_structured_quad_mesh({}, 2, 2), 0.3).num_flagged() == 0);
}

}
