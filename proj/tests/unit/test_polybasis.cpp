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
#include <elastovem/polybasis.hpp>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <random>

using namespace elastovem;

namespace {

/// Integral of ((x - c)/h)^(a, b) expanded binomially into raw monomials.
double scaled_monomial_oracle(const std::vector<Point2>& poly, const Point2& c, double h, int a, int b) {
    auto binom = [](int n, int k) {
        double r = 1.0;
        for (int i = 1; i <= k; ++i) {
            r = r * (n - k + i) / i;
        }
        return r;
    };
    double s = 0.0;
    for (int i = 0; i <= a; ++i) {
        for (int j = 0; j <= b; ++j) {
            s += binom(a, i) * binom(b, j) * std::pow(-c.x(), a - i) * std::pow(-c.y(), b - j) *
                 testing::green_monomial_integral(poly, i, j);
        }
    }
    return s / std::pow(h, a + b);
}

} // namespace

TEST_SUITE("polybasis") {

TEST_CASE("basis enumeration and scaling") {
    for (int k = 0; k <= 5; ++k) {
        const ScaledMonomialBasis basis(k, Point2(0.3, -0.2), 0.7);
        CHECK(basis.size() == (k + 1) * (k + 2) / 2);
        for (int i = 0; i < basis.size(); ++i) {
            const auto [a, b] = basis.exponent(i);
            CHECK(monomial_index(a, b) == i);
        }
        const Eigen::VectorXd at_center = basis.evaluate(basis.center());
        CHECK(at_center[0] == 1.0);
        CHECK(at_center.tail(basis.size() - 1).norm() == 0.0);
    }
    const ScaledMonomialBasis b1(1, Point2(1.0, 2.0), 0.5);
    CHECK(b1.evaluate(Point2(1.5, 2.0))[1] == doctest::Approx(1.0));
    CHECK(b1.exponent(1) == std::array<int, 2>{1, 0});
    CHECK(b1.exponent(2) == std::array<int, 2>{0, 1});
}

TEST_CASE("scaled monomials are bounded on the element") {
    for (const auto& shape : testing::property_shapes()) {
        const auto g = polygon_geometry(shape.vertices);
        const ScaledMonomialBasis basis(5, g);
        for (const auto& e : g.edges) {
            CHECK(basis.evaluate(e.a).cwiseAbs().maxCoeff() <= 2.0);
            CHECK(basis.evaluate(0.5 * (e.a + e.b)).cwiseAbs().maxCoeff() <= 2.0);
        }
    }
}

TEST_CASE("monomial integrals on the unit square") {
    const auto g = polygon_geometry(testing::unit_square());
    const auto m = integrate_monomials(g, 2);
    CHECK(m[0] == doctest::Approx(1.0));
    CHECK(std::abs(m[1]) < 1e-15);
    CHECK(m[monomial_index(2, 0)] == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("monomial integrals match the boundary-integral oracle") {
    for (const auto& shape : testing::property_shapes()) {
        const auto g = polygon_geometry(shape.vertices);
        for (int k = 1; k <= 5; ++k) {
            const auto m = integrate_monomials(g, 2 * k);
            const ScaledMonomialBasis basis(2 * k, g);
            for (int i = 0; i < basis.size(); ++i) {
                const auto [a, b] = basis.exponent(i);
                const double exact = scaled_monomial_oracle(shape.vertices, g.centroid, g.diameter, a, b);
                CHECK(m[i] == doctest::Approx(exact).epsilon(1e-12).scale(g.area));
            }
        }
    }
}

TEST_CASE("mass matrix") {
    const auto sq = polygon_geometry(testing::unit_square());
    const auto H0 = monomial_mass_matrix(sq, 0);
    CHECK(H0.rows() == 1);
    CHECK(H0(0, 0) == doctest::Approx(1.0));
    const auto H1 = monomial_mass_matrix(sq, 1);
    CHECK(std::abs(H1(1, 2)) < 1e-15);
    CHECK(H1.isApprox(H1.transpose()));
    for (const auto& shape : testing::property_shapes()) {
        const auto g = polygon_geometry(shape.vertices);
        for (int k = 0; k <= 5; ++k) {
            const auto H = monomial_mass_matrix(g, k);
            CHECK(Eigen::LLT<Eigen::MatrixXd>(H).info() == Eigen::Success);
        }
    }
}

TEST_CASE("k=2 hexagon mass matrix against Monte-Carlo integration") {
    const auto pts = testing::regular_polygon(6, 1.0);
    const auto g = polygon_geometry(pts);
    const auto H = monomial_mass_matrix(g, 2);
    const ScaledMonomialBasis basis(2, g);
    std::mt19937_64 rng(20261016);
    std::uniform_real_distribution<double> ux(-1.0, 1.0), uy(-std::sqrt(3.0) / 2, std::sqrt(3.0) / 2);
    const double box = 2.0 * std::sqrt(3.0);
    const int samples = 10'000'000;
    Eigen::MatrixXd mc = Eigen::MatrixXd::Zero(6, 6);
    for (int s = 0; s < samples; ++s) {
        const Point2 x(ux(rng), uy(rng));
        // inside the hexagon iff |y| <= sqrt(3) (1 - |x|) / 1 beyond x = 1/2
        if (std::abs(x.y()) > std::sqrt(3.0) * (1.0 - std::abs(x.x()))) {
            continue;
        }
        const Eigen::VectorXd v = basis.evaluate(x);
        mc.noalias() += v * v.transpose();
    }
    mc *= box / samples;
    for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < 6; ++j) {
            if (std::abs(H(i, j)) > 1e-2 * H(0, 0)) {
                CHECK(mc(i, j) == doctest::Approx(H(i, j)).epsilon(1e-3));
            } else {
                CHECK(std::abs(mc(i, j) - H(i, j)) < 1e-3 * H(0, 0));
            }
        }
    }
}

TEST_CASE("stiffness matrix") {
    const auto sq = polygon_geometry(testing::unit_square());
    const auto G1 = monomial_stiffness_matrix(sq, 1);
    CHECK(G1.row(0).norm() == 0.0);
    CHECK(G1.col(0).norm() == 0.0);
    CHECK(G1(1, 1) == doctest::Approx(sq.area / (sq.diameter * sq.diameter)));
    CHECK(G1(2, 2) == doctest::Approx(0.5));
    CHECK(std::abs(G1(1, 2)) < 1e-15);
    for (const auto& shape : testing::property_shapes()) {
        const auto g = polygon_geometry(shape.vertices);
        for (int k = 1; k <= 5; ++k) {
            const auto G = monomial_stiffness_matrix(g, k);
            CHECK(G.col(0).norm() == 0.0);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
            const auto ev = es.eigenvalues();
            CHECK(std::abs(ev[0]) < 1e-12 * ev.maxCoeff());
            CHECK(ev[1] > 1e-10 * ev.maxCoeff());
        }
    }
}

TEST_CASE("gradients against central differences") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const auto g = polygon_geometry(testing::irregular_pentagon());
    const ScaledMonomialBasis basis(3, g);
    Eigen::VectorXd c(basis.size());
    for (int i = 0; i < c.size(); ++i) {
        c[i] = u(rng);
    }
    const PolynomialCoeffs p{basis, c};
    const std::vector<Point2> pts = {g.centroid, Point2(0.4, 0.7), Point2(1.1, 0.5)};
    const auto grads = gradient_poly(p, pts);
    const double eps = 1e-5;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int d = 0; d < 2; ++d) {
            Point2 xp = pts[i], xm = pts[i];
            xp[d] += eps;
            xm[d] -= eps;
            const double fd = (evaluate_poly(basis, c, xp) - evaluate_poly(basis, c, xm)) / (2 * eps);
            CHECK(grads(i, d) == doctest::Approx(fd).epsilon(1e-6));
        }
        CHECK(gradient_poly(basis, c, pts[i]).isApprox(grads.row(i).transpose()));
    }
    CHECK(evaluate_poly(PolynomialCoeffs{basis, Eigen::VectorXd::Unit(basis.size(), 0)}, pts).isOnes());
}

TEST_CASE("laplacian matrix against finite differences") {
    const auto g = polygon_geometry(testing::l_shape());
    const ScaledMonomialBasis basis(4, g);
    const ScaledMonomialBasis low(2, g);
    const Eigen::MatrixXd L = basis.laplacian_matrix();
    const Point2 x(0.3, 0.2);
    const double eps = 1e-4;
    for (int i = 0; i < basis.size(); ++i) {
        auto f = [&](const Point2& y) { return basis.evaluate(y)[i]; };
        const double fd = (f(x + Point2(eps, 0)) + f(x - Point2(eps, 0)) + f(x + Point2(0, eps)) +
                           f(x - Point2(0, eps)) - 4 * f(x)) /
                          (eps * eps);
        CHECK(low.evaluate(x).dot(L.col(i)) == doctest::Approx(fd).epsilon(1e-5).scale(1.0));
    }
}

}
