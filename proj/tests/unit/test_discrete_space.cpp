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
#include <elastovem/discrete_space.hpp>

#include <cmath>

using namespace elastovem;

namespace {

std::shared_ptr<const PolygonalMesh> voronoi() {
    return std::make_shared<const PolygonalMesh>(load_mesh(testing::data_path("voronoi_16.json"), MeshFormat::Json));
}

/// Integral of x^a y^b over the whole mesh by the boundary-form oracle, cell by cell.
double mesh_monomial_integral(const PolygonalMesh& mesh, int a, int b) {
    double s = 0.0;
    for (int c = 0; c < mesh.num_cells(); ++c) {
        s += testing::green_monomial_integral(mesh.cell_vertices(c), a, b);
    }
    return s;
}

} // namespace

TEST_SUITE("discrete_space") {

TEST_CASE("global matrices on polynomials") {
    const auto mesh = voronoi();
    for (int k = 1; k <= 3; ++k) {
        const ScalarVemSpace V(mesh, k);
        const Eigen::VectorXd one = V.interpolate([](const Point2&) { return 1.0; });
        CHECK((V.stiffness() * one).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(one.dot(V.mass() * one) == doctest::Approx(mesh->area()).epsilon(1e-12));
        CHECK(one.dot(V.boundary_mass() * one) == doctest::Approx(mesh->perimeter()).epsilon(1e-12));

        // p = x^k: |grad p|^2 = k^2 x^(2k-2), p^2 = x^(2k)
        const Eigen::VectorXd p = V.interpolate([k](const Point2& x) { return std::pow(x.x(), k); });
        CHECK(p.dot(V.stiffness() * p) ==
              doctest::Approx(k * k * mesh_monomial_integral(*mesh, 2 * k - 2, 0)).epsilon(1e-10));
        CHECK(p.dot(V.mass() * p) == doctest::Approx(mesh_monomial_integral(*mesh, 2 * k, 0)).epsilon(1e-10));
    }
}

TEST_CASE("source loads") {
    const auto mesh = voronoi();
    for (int k = 1; k <= 4; ++k) {
        const ScalarVemSpace V(mesh, k);
        const ScalarFunction f = [](const Point2& x) { return x.x() * x.y(); };
        const ScalarFunction q = [k](const Point2& x) { return std::pow(x.y(), k - 1) + x.x(); };
        const Eigen::VectorXd qh = V.interpolate(q);
        // (x y, y^(k-1) + x)
        const double exact = mesh_monomial_integral(*mesh, 1, k) + mesh_monomial_integral(*mesh, 2, 1);
        CHECK(V.source_load(f, LoadProjection::Full).dot(qh) == doctest::Approx(exact).epsilon(1e-10));
        if (k <= 2) {
            CHECK(V.source_load(f, LoadProjection::Reduced).dot(qh) == doctest::Approx(exact).epsilon(1e-10));
        }
        CHECK(load_projection_degree(k, LoadProjection::Full) == k);
        CHECK(load_projection_degree(k, LoadProjection::Reduced) == std::max(1, k - 2));

        const Eigen::VectorXd fh = V.interpolate(f);
        if (k >= 2) {
            CHECK((V.discrete_source_load(fh, LoadProjection::Full) - V.source_load(f, LoadProjection::Full)).norm() <
                  1e-12);
        }
        CHECK(V.source_load([](const Point2&) { return 1.0; }, LoadProjection::Full).sum() ==
              doctest::Approx(mesh->area()).epsilon(1e-12));
    }
}

TEST_CASE("projection coefficients reproduce the interpolated polynomial") {
    const auto mesh = voronoi();
    const ScalarVemSpace V(mesh, 3);
    const ScalarFunction f = [](const Point2& x) { return 1.0 - x.x() * x.x() * x.y() + 2.0 * x.y() * x.y(); };
    const Eigen::VectorXd fh = V.interpolate(f);
    for (int c = 0; c < mesh->num_cells(); ++c) {
        const auto basis = V.element(c).basis();
        const Eigen::VectorXd coeffs = V.projection_coefficients(c, fh);
        const Point2 x = V.element(c).geometry.centroid;
        CHECK(basis.evaluate(x).dot(coeffs) == doctest::Approx(f(x)).epsilon(1e-11));
        CHECK((V.local_dofs(c, fh) - interpolate_into_space(V.element(c).geometry, 3, f)).norm() < 1e-12);
    }
}

}
