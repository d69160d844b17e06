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
#include "elastovem/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace elastovem {

namespace {

// Legendre polynomial P_n and its derivative on [-1, 1].
std::pair<double, double> legendre(int n, double x) {
    double p0 = 1.0, p1 = x;
    if (n == 0) {
        return {1.0, 0.0};
    }
    for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    const double dp = n * (x * p1 - p0) / (x * x - 1.0);
    return {p1, dp};
}

double cross(const Vector2& u, const Vector2& v) { return u.x() * v.y() - u.y() * v.x(); }

} // namespace

Rule1D gauss_legendre(int n) {
    if (n < 1) {
        throw Error("gauss_legendre: need at least one point");
    }
    Rule1D rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            const auto [p, dp] = legendre(n, x);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const auto [p, dp] = legendre(n, x);
        (void)p;
        // map [-1,1] -> [0,1], ascending order
        rule.points[n - 1 - i] = 0.5 * (x + 1.0);
        rule.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

Rule1D gauss_lobatto(int n) {
    if (n < 2) {
        throw Error("gauss_lobatto: need at least two points");
    }
    const int m = n - 1; // interior nodes are roots of P'_m
    Rule1D rule;
    rule.points.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x;
        if (i == 0) {
            x = -1.0;
        } else if (i == n - 1) {
            x = 1.0;
        } else {
            // Chebyshev-Gauss-Lobatto initial guess, refined by Newton on P'_m.
            x = -std::cos(std::numbers::pi * i / m);
            for (int it = 0; it < 100; ++it) {
                const auto [p, dp] = legendre(m, x);
                // P''_m from the Legendre ODE: (1-x^2) P'' = 2x P' - m(m+1) P
                const double d2p = (2.0 * x * dp - m * (m + 1.0) * p) / (1.0 - x * x);
                const double dx = dp / d2p;
                x -= dx;
                if (std::abs(dx) < 1e-16) {
                    break;
                }
            }
        }
        const double p = legendre(m, x).first;
        rule.points[i] = 0.5 * (x + 1.0);
        rule.weights[i] = 1.0 / (m * (m + 1.0) * p * p);
    }
    return rule;
}

Rule1D gauss_legendre_for_degree(int degree) {
    return gauss_legendre(std::max(1, (degree + 2) / 2));
}

Rule2D triangle_rule(const Point2& a, const Point2& b, const Point2& c, int degree) {
    const Rule1D ru = gauss_legendre_for_degree(degree + 1);
    const Rule1D rv = gauss_legendre_for_degree(degree);
    const double jac = cross(b - a, c - a);
    Rule2D rule;
    rule.reserve(ru.size() * rv.size());
    for (std::size_t i = 0; i < ru.size(); ++i) {
        const double u = ru.points[i];
        for (std::size_t j = 0; j < rv.size(); ++j) {
            const double v = rv.points[j];
            const double s = u * (1.0 - v);
            const double t = u * v;
            rule.push_back({a + s * (b - a) + t * (c - a), ru.weights[i] * rv.weights[j] * u * jac});
        }
    }
    return rule;
}

std::vector<std::array<int, 3>> triangulate_polygon(std::span<const Point2> vertices) {
    const int n = static_cast<int>(vertices.size());
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) {
        remaining[i] = i;
    }
    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(n > 2 ? n - 2 : 0);

    auto inside = [&](const Point2& p, const Point2& a, const Point2& b, const Point2& c) {
        return cross(b - a, p - a) >= 0.0 && cross(c - b, p - b) >= 0.0 && cross(a - c, p - c) >= 0.0;
    };

    int guard = 0;
    while (remaining.size() > 3 && guard < n * n) {
        ++guard;
        const int m = static_cast<int>(remaining.size());
        bool clipped = false;
        for (int i = 0; i < m; ++i) {
            const int ip = remaining[(i + m - 1) % m];
            const int ic = remaining[i];
            const int in = remaining[(i + 1) % m];
            const Point2& a = vertices[ip];
            const Point2& b = vertices[ic];
            const Point2& c = vertices[in];
            if (cross(b - a, c - b) <= 0.0) {
                continue; // reflex or degenerate corner
            }
            bool ear = true;
            for (int j = 0; j < m && ear; ++j) {
                const int q = remaining[j];
                if (q == ip || q == ic || q == in) {
                    continue;
                }
                if (inside(vertices[q], a, b, c)) {
                    ear = false;
                }
            }
            if (ear) {
                triangles.push_back({ip, ic, in});
                remaining.erase(remaining.begin() + i);
                clipped = true;
                break;
            }
        }
        if (!clipped) {
            break;
        }
    }
    if (remaining.size() == 3) {
        triangles.push_back({remaining[0], remaining[1], remaining[2]});
    } else {
        // Not simple (or numerically degenerate): fall back to a fan from vertex 0,
        // which still integrates polynomials exactly through signed weights.
        triangles.clear();
        for (int i = 1; i + 1 < n; ++i) {
            triangles.push_back({0, i, i + 1});
        }
    }
    return triangles;
}

Rule2D polygon_rule(std::span<const Point2> vertices, const Point2& centroid, int degree) {
    const int n = static_cast<int>(vertices.size());
    bool star = true;
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        scale = std::max(scale, (vertices[i] - centroid).squaredNorm());
    }
    for (int i = 0; i < n && star; ++i) {
        const Point2& a = vertices[i];
        const Point2& b = vertices[(i + 1) % n];
        if (cross(a - centroid, b - centroid) <= 1e-14 * scale) {
            star = false;
        }
    }
    Rule2D rule;
    if (star) {
        for (int i = 0; i < n; ++i) {
            const Rule2D tri = triangle_rule(centroid, vertices[i], vertices[(i + 1) % n], degree);
            rule.insert(rule.end(), tri.begin(), tri.end());
        }
        return rule;
    }
    for (const auto& t : triangulate_polygon(vertices)) {
        const Rule2D tri = triangle_rule(vertices[t[0]], vertices[t[1]], vertices[t[2]], degree);
        rule.insert(rule.end(), tri.begin(), tri.end());
    }
    return rule;
}

} // namespace elastovem
