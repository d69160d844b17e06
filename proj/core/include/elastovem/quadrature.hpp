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
#include <span>
#include <vector>

namespace elastovem {

/// 1D rule on the reference interval [0, 1]; weights sum to 1.
struct Rule1D {
    std::vector<double> points;
    std::vector<double> weights;
    std::size_t size() const { return points.size(); }
};

/// Gauss-Legendre rule with n points on [0, 1], exact for degree 2n - 1.
Rule1D gauss_legendre(int n);

/// Gauss-Lobatto rule with n >= 2 points on [0, 1] (endpoints included), exact for degree 2n - 3.
Rule1D gauss_lobatto(int n);

/// Smallest Gauss-Legendre rule exact for polynomials of the given degree.
Rule1D gauss_legendre_for_degree(int degree);

struct QuadPoint {
    Point2 x;
    double w;
};
using Rule2D = std::vector<QuadPoint>;

/// Triangle rule exact for the given total degree (collapsed Gauss product).
/// The weights carry the sign of the triangle orientation.
Rule2D triangle_rule(const Point2& a, const Point2& b, const Point2& c, int degree);

/// Rule over a simple polygon exact for the given degree. Uses the centroid fan when every
/// fan triangle is positively oriented and an ear-clipping triangulation otherwise.
Rule2D polygon_rule(std::span<const Point2> vertices, const Point2& centroid, int degree);

/// Ear-clipping triangulation of a simple counterclockwise polygon (vertex index triples).
std::vector<std::array<int, 3>> triangulate_polygon(std::span<const Point2> vertices);

} // namespace elastovem
