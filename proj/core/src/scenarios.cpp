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
#include "elastovem/scenarios.hpp"

#include <cmath>

namespace elastovem {

namespace {

/// d^n/dX^n of exp(-a X^2) divided by exp(-a X^2).
double gaussian_factor(int n, double a, double X) {
    switch (n) {
    case 0:
        return 1.0;
    case 1:
        return -2.0 * a * X;
    case 2:
        return 4.0 * a * a * X * X - 2.0 * a;
    case 3:
        return -8.0 * a * a * a * X * X * X + 12.0 * a * a * X;
    default:
        throw Error("gaussian derivative order out of range");
    }
}

struct Gaussian {
    double a;
    Point2 c;
    /// d^i/dx^i d^j/dy^j
    double d(int i, int j, const Point2& x) const {
        const double X = x.x() - c.x();
        const double Y = x.y() - c.y();
        return gaussian_factor(i, a, X) * gaussian_factor(j, a, Y) * std::exp(-a * (X * X + Y * Y));
    }
};

} // namespace

const std::vector<ScenarioInfo>& builtin_scenarios() {
    static const std::vector<ScenarioInfo> list = {
        {"patch-test", "polynomial potentials reproduced exactly for k_p >= 1, k_s >= 3", MaterialParams{},
         DomainShape::UnitSquare, true},
        {"sandstone", "sandstone layer, boundary-driven waves, no closed-form solution", sandstone_material(),
         DomainShape::UnitSquare, false},
        {"gaussian-source", "Gaussian displacement on the L-shaped domain, numerically decomposed source",
         gaussian_source_material(), DomainShape::LShape, true},
        {"smooth-potentials", "smooth exponential-trigonometric potentials on the unit square",
         smooth_potentials_material(), DomainShape::UnitSquare, true},
    };
    return list;
}

const ScenarioInfo& find_scenario(const std::string& id) {
    for (const auto& s : builtin_scenarios()) {
        if (s.id == id) {
            return s;
        }
    }
    throw UnsupportedConfigurationError("unknown scenario '" + id + "'");
}

ElasticProblem make_scenario_problem(const std::string& id, const std::optional<MaterialParams>& material) {
    const auto& info = find_scenario(id);
    const MaterialParams m = material.value_or(info.material);
    if (id == "patch-test") {
        return patch_test_problem(m);
    }
    if (id == "sandstone") {
        return sandstone_problem(m);
    }
    if (id == "gaussian-source") {
        return gaussian_source_problem(m);
    }
    return smooth_potentials_problem(m);
}

ElasticProblem patch_test_problem(const MaterialParams& material) {
    const ScalarField phi_p{[](const Point2& x) { return x.x() + x.y(); },
                            [](const Point2&) { return Vector2(1.0, 1.0); }, [](const Point2&) { return 0.0; }};
    const ScalarField phi_s{[](const Point2& x) { return x.y() * x.y() * x.y(); },
                            [](const Point2& x) { return Vector2(0.0, 3.0 * x.y() * x.y()); },
                            [](const Point2& x) { return 6.0 * x.y(); }};
    return problem_from_potentials(material, phi_p, phi_s);
}

MaterialParams sandstone_material() { return {1.715e10, 5.168e8, 2.320e3, 2.0e4}; }

ElasticProblem sandstone_problem(const MaterialParams& material) {
    ElasticProblem p;
    p.material = material;
    const double c = material.lambda + 2.0 * material.mu;
    p.f_p = [c](const Point2& x) { return 2.0 * std::cos(x.x()) / c; };
    p.f_s = [](const Point2&) { return 0.0; };
    p.g = [](const Point2& x) { return Vector2(-std::sin(x.x()) + std::cos(x.y()), 0.0); };
    return p;
}

MaterialParams gaussian_source_material() { return {1.0, 5.0, 10.0, 1.0}; }

ElasticProblem gaussian_source_problem(const MaterialParams& material) {
    const Gaussian g1{100.0, Point2(0.25, 1.75)};
    const Gaussian g2{100.0, Point2(1.75, 0.25)};
    const double lam = material.lambda;
    const double mu = material.mu;
    const double rk2 = material.rho * material.kappa * material.kappa;

    ElasticProblem p;
    p.material = material;
    p.exact_u = [=](const Point2& x) { return Vector2(g1.d(0, 0, x), g2.d(0, 0, x)); };
    p.g = p.exact_u;
    VectorSource src;
    // f = -(lambda + mu) grad div u - mu lap u - rho kappa^2 u
    src.f = [=](const Point2& x) {
        const Vector2 grad_div(g1.d(2, 0, x) + g2.d(1, 1, x), g1.d(1, 1, x) + g2.d(0, 2, x));
        const Vector2 lap(g1.d(2, 0, x) + g1.d(0, 2, x), g2.d(2, 0, x) + g2.d(0, 2, x));
        const Vector2 u(g1.d(0, 0, x), g2.d(0, 0, x));
        return Vector2(-(lam + mu) * grad_div - mu * lap - rk2 * u);
    };
    src.div = [=](const Point2& x) {
        const double div_u = g1.d(1, 0, x) + g2.d(0, 1, x);
        const double lap_div = g1.d(3, 0, x) + g1.d(1, 2, x) + g2.d(2, 1, x) + g2.d(0, 3, x);
        return -(lam + 2.0 * mu) * lap_div - rk2 * div_u;
    };
    src.curl = [=](const Point2& x) {
        const double curl_u = g2.d(1, 0, x) - g1.d(0, 1, x);
        const double lap_curl = g2.d(3, 0, x) + g2.d(1, 2, x) - g1.d(2, 1, x) - g1.d(0, 3, x);
        return -mu * lap_curl - rk2 * curl_u;
    };
    p.vector_source = src;
    return p;
}

MaterialParams smooth_potentials_material() { return {10.0, 1.0, 1.0, 1.0}; }

ElasticProblem smooth_potentials_problem(const MaterialParams& material) {
    const ScalarField phi_p{
        [](const Point2& x) { return x.x() * x.x() * std::exp(x.y()) * std::cos(x.y()); },
        [](const Point2& x) {
            const double e = std::exp(x.y());
            return Vector2(2.0 * x.x() * e * std::cos(x.y()), x.x() * x.x() * e * (std::cos(x.y()) - std::sin(x.y())));
        },
        [](const Point2& x) {
            const double e = std::exp(x.y());
            return 2.0 * e * std::cos(x.y()) - 2.0 * x.x() * x.x() * e * std::sin(x.y());
        }};
    const ScalarField phi_s{
        [](const Point2& x) { return x.y() * x.y() * std::exp(x.x()) * std::sin(x.x()); },
        [](const Point2& x) {
            const double e = std::exp(x.x());
            return Vector2(x.y() * x.y() * e * (std::sin(x.x()) + std::cos(x.x())), 2.0 * x.y() * e * std::sin(x.x()));
        },
        [](const Point2& x) {
            const double e = std::exp(x.x());
            return 2.0 * x.y() * x.y() * e * std::cos(x.x()) + 2.0 * e * std::sin(x.x());
        }};
    return problem_from_potentials(material, phi_p, phi_s);
}

PolygonalMesh scenario_mesh(DomainShape domain, int n) {
    if (domain == DomainShape::LShape) {
        return build_lshape_quad_mesh(n);
    }
    return build_structured_quad_mesh({}, n, n);
}

} // namespace elastovem
