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
#include <elastovem/quadrature.hpp>

#include <cmath>

using namespace elastovem;

TEST_SUITE("quadrature") {

TEST_CASE("gauss-legendre integrates polynomials up to degree 2n-1") {
    for (int n = 1; n <= 12; ++n) {
        const auto rule = gauss_legendre(n);
        CHECK(rule.size() == static_cast<std::size_t>(n));
        for (int d = 0; d <= 2 * n - 1; ++d) {
            double s = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i) {
                s += rule.weights[i] * std::pow(rule.points[i], d);
            }
            CHECK(s == doctest::Approx(1.0 / (d + 1)).epsilon(1e-14));
        }
    }
}

TEST_CASE("gauss-lobatto includes endpoints and integrates up to degree 2n-3") {
    for (int n = 2; n <= 10; ++n) {
        const auto rule = gauss_lobatto(n);
        CHECK(rule.points.front() == 0.0);
        CHECK(rule.points.back() == 1.0);
        for (int d = 0; d <= 2 * n - 3; ++d) {
            double s = 0.0;
            for (std::size_t i = 0; i < rule.size(); ++i) {
                s += rule.weights[i] * std::pow(rule.points[i], d);
            }
            CHECK(s == doctest::Approx(1.0 / (d + 1)).epsilon(1e-14));
        }
    }
    // three points: Simpson
    const auto simpson = gauss_lobatto(3);
    CHECK(simpson.points[1] == doctest::Approx(0.5));
    CHECK(simpson.weights[1] == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("triangle rule is exact against the boundary-integral oracle") {
    const auto tri = testing::triangle();
    for (int deg = 0; deg <= 12; ++deg) {
        const auto rule = triangle_rule(tri[0], tri[1], tri[2], deg);
        for (int a = 0; a <= deg; ++a) {
            const int b = deg - a;
            double s = 0.0;
            for (const auto& q : rule) {
                s += q.w * std::pow(q.x.x(), a) * std::pow(q.x.y(), b);
            }
            CHECK(s == doctest::Approx(testing::green_monomial_integral(tri, a, b)).epsilon(1e-12));
        }
    }
}

TEST_CASE("polygon rule is exact on convex and non-convex polygons") {
    std::vector<std::vector<Point2>> polys = {testing::unit_square(), testing::regular_polygon(6),
                                              testing::irregular_pentagon(), testing::l_shape()};
    // a comb whose centroid fan is not positive
    polys.push_back({{0, 0}, {3, 0}, {3, 1}, {2.5, 1}, {2.5, 0.2}, {0.5, 0.2}, {0.5, 1}, {0, 1}});
    for (const auto& poly : polys) {
        const auto g = polygon_geometry(poly);
        for (int deg = 0; deg <= 10; ++deg) {
            const auto rule = polygon_rule(poly, g.centroid, deg);
            for (int a = 0; a <= deg; ++a) {
                const int b = deg - a;
                double s = 0.0;
                for (const auto& q : rule) {
                    s += q.w * std::pow(q.x.x(), a) * std::pow(q.x.y(), b);
                }
                const double exact = testing::green_monomial_integral(poly, a, b);
                CHECK(s == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
            }
        }
    }
}

TEST_CASE("ear clipping produces n-2 positive triangles covering the polygon") {
    const std::vector<Point2> comb = {{0, 0}, {3, 0}, {3, 1}, {2.5, 1}, {2.5, 0.2}, {0.5, 0.2}, {0.5, 1}, {0, 1}};
    const auto tris = triangulate_polygon(comb);
    REQUIRE(tris.size() == comb.size() - 2);
    double area = 0.0;
    for (const auto& t : tris) {
        const Point2 u = comb[t[1]] - comb[t[0]];
        const Point2 v = comb[t[2]] - comb[t[0]];
        const double a = 0.5 * (u.x() * v.y() - u.y() * v.x());
        CHECK(a > 0.0);
        area += a;
    }
    CHECK(area == doctest::Approx(testing::green_monomial_integral(comb, 0, 0)));
}

}
