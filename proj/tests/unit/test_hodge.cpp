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
#include <elastovem/hodge.hpp>
#include <elastovem/postprocess.hpp>

#include <Eigen/SparseCholesky>

#include <cmath>
#include <numbers>

using namespace elastovem;

namespace {

constexpr double pi = std::numbers::pi;

std::shared_ptr<const ScalarVemSpace> square_space(int n, int k) {
    return std::make_shared<const ScalarVemSpace>(std::make_shared<const PolygonalMesh>(build_structured_quad_mesh({}, n, n)), k);
}

VectorSource gradient_source() {
    // f = grad(sin x cos y)
    return {[](const Point2& x) { return Vector2(std::cos(x.x()) * std::cos(x.y()), -std::sin(x.x()) * std::sin(x.y())); },
            [](const Point2& x) { return -2.0 * std::sin(x.x()) * std::cos(x.y()); },
            [](const Point2&) { return 0.0; }};
}

VectorSource rotational_source() {
    // f = curl(sin(pi x) sin(pi y)), zero normal component on the unit square
    return {[](const Point2& x) {
                return Vector2(pi * std::sin(pi * x.x()) * std::cos(pi * x.y()),
                               -pi * std::cos(pi * x.x()) * std::sin(pi * x.y()));
            },
            [](const Point2&) { return 0.0; },
            [](const Point2& x) { return 2.0 * pi * pi * std::sin(pi * x.x()) * std::sin(pi * x.y()); }};
}

/// L2 error of grad(Pi_nabla w_h) against an exact gradient.
double gradient_error(const ScalarVemSpace& V, const Eigen::VectorXd& w, const VectorFunction& grad) {
    const DisplacementField field(V, w, V, Eigen::VectorXd::Zero(V.num_dofs()));
    return l2_error_displacement(field, grad);
}

/// L2 error of curl(Pi_nabla w_h) against an exact curl.
double curl_error(const ScalarVemSpace& V, const Eigen::VectorXd& w, const VectorFunction& curl) {
    const DisplacementField field(V, Eigen::VectorXd::Zero(V.num_dofs()), V, w);
    return l2_error_displacement(field, curl);
}

/// Five-point finite differences for -lap u = 1 on the unit square with zero boundary
/// values; returns u(1/2, 1/2). N must be even.
double poisson_center_fd(int N) {
    const int m = N - 1;
    const double h = 1.0 / N;
    std::vector<Eigen::Triplet<double>> t;
    auto id = [m](int i, int j) { return i * m + j; };
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            t.emplace_back(id(i, j), id(i, j), 4.0);
            if (i > 0) t.emplace_back(id(i, j), id(i - 1, j), -1.0);
            if (i + 1 < m) t.emplace_back(id(i, j), id(i + 1, j), -1.0);
            if (j > 0) t.emplace_back(id(i, j), id(i, j - 1), -1.0);
            if (j + 1 < m) t.emplace_back(id(i, j), id(i, j + 1), -1.0);
        }
    }
    Eigen::SparseMatrix<double> A(m * m, m * m);
    A.setFromTriplets(t.begin(), t.end());
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
    const Eigen::VectorXd u = ldlt.solve(Eigen::VectorXd::Constant(m * m, h * h));
    return u(id(N / 2 - 1, N / 2 - 1));
}

} // namespace

TEST_SUITE("hodge") {

TEST_CASE("gradient field is recovered by the Neumann potential") {
    const auto src = gradient_source();
    for (int k = 1; k <= 3; ++k) {
        std::vector<double> err;
        for (int n : {8, 16}) {
            const auto V = square_space(n, k);
            const auto d = decompose_source(*V, *V, src);
            CHECK(d.f_s.norm() == 0.0);
            err.push_back(gradient_error(*V, d.f_p, src.f));
        }
        const double rate = std::log2(err[0] / err[1]);
        CHECK(rate > k - 0.2);
        CHECK(err[1] < 0.05);
    }
}

TEST_CASE("rotational field is recovered by the Dirichlet potential") {
    const auto src = rotational_source();
    for (int k = 1; k <= 3; ++k) {
        std::vector<double> err_s, norm_p;
        for (int n : {8, 16}) {
            const auto V = square_space(n, k);
            const auto d = decompose_source(*V, *V, src);
            err_s.push_back(curl_error(*V, d.f_s, src.f));
            norm_p.push_back(gradient_error(*V, d.f_p, [](const Point2&) { return Vector2::Zero(); }));
        }
        CHECK(std::log2(err_s[0] / err_s[1]) > k - 0.2);
        // f.n vanishes on the boundary and div f = 0, so the gradient part is zero
        CHECK(norm_p[0] < 1e-12);
        CHECK(norm_p[1] < 1e-12);
    }
}

TEST_CASE("constant curl against finite differences") {
    const VectorSource src{[](const Point2& x) { return Vector2(-0.5 * x.y(), 0.5 * x.x()); },
                           [](const Point2&) { return 0.0; }, [](const Point2&) { return 1.0; }};
    const auto V = square_space(8, 3);
    const Eigen::VectorXd fs = solve_dirichlet_potential(*V, src);
    int center = -1;
    for (int d = 0; d < V->num_dofs(); ++d) {
        if (V->dofs().kind(d) == DofKind::Vertex && (V->dofs().location(d) - Point2(0.5, 0.5)).norm() < 1e-14) {
            center = d;
        }
    }
    REQUIRE(center >= 0);
    const double fd = poisson_center_fd(128);
    CHECK(fs(center) == doctest::Approx(fd).epsilon(1e-4));
    CHECK(fs(center) == doctest::Approx(0.0736713532).epsilon(1e-4));
}

TEST_CASE("zero source gives zero potentials") {
    const VectorSource zero{[](const Point2&) { return Vector2::Zero(); }, [](const Point2&) { return 0.0; },
                            [](const Point2&) { return 0.0; }};
    const auto V = square_space(4, 2);
    const auto d = decompose_source(*V, *V, zero);
    CHECK(d.f_p.norm() == 0.0);
    CHECK(d.f_s.norm() == 0.0);
}

TEST_CASE("Neumann potential has zero boundary mean") {
    const auto src = gradient_source();
    const auto V = square_space(8, 2);
    const Eigen::VectorXd fp = solve_neumann_potential(*V, src);
    const Eigen::VectorXd c = V->boundary_mass() * Eigen::VectorXd::Ones(V->num_dofs());
    CHECK(std::abs(c.dot(fp)) < 1e-8);
    // shifting the potential by a constant does not change the source, so the representative
    // is the one with zero boundary mean
    const ScalarFunction psi = [](const Point2& x) { return std::sin(x.x()) * std::cos(x.y()); };
    Eigen::VectorXd ip = V->interpolate(psi);
    ip.array() -= c.dot(ip) / c.sum();
    CHECK((fp - ip).cwiseAbs().maxCoeff() < 5e-3);
}

}
