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
#include "elastovem/mesh.hpp"

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace elastovem {

/// Number of monomials of total degree <= k.
constexpr int monomial_count(int k) { return k < 0 ? 0 : (k + 1) * (k + 2) / 2; }

/// Position of x^a y^b: by total degree, then decreasing power of x.
constexpr int monomial_index(int a, int b) { return monomial_count(a + b - 1) + b; }

/// m_alpha(x) = ((x - x_E) / h_E)^alpha for |alpha| <= k.
class ScaledMonomialBasis {
public:
    ScaledMonomialBasis(int degree, const Point2& center, double scale);
    ScaledMonomialBasis(int degree, const ElementGeometry& element)
        : ScaledMonomialBasis(degree, element.centroid, element.diameter) {}

    int degree() const { return m_degree; }
    int size() const { return monomial_count(m_degree); }
    const Point2& center() const { return m_center; }
    double scale() const { return m_scale; }
    const std::array<int, 2>& exponent(int i) const { return m_exponents[i]; }

    Eigen::VectorXd evaluate(const Point2& x) const;
    /// Row i holds the gradient of m_i.
    Eigen::MatrixX2d gradient(const Point2& x) const;

    /// Coefficients (in the degree k-2 basis) of the Laplacian of every m_alpha; column alpha.
    Eigen::MatrixXd laplacian_matrix() const;

private:
    int m_degree;
    Point2 m_center;
    double m_scale;
    std::vector<std::array<int, 2>> m_exponents;
};

/// Integrals of m_alpha over the element for |alpha| <= k.
Eigen::VectorXd integrate_monomials(const ElementGeometry& element, int k);

/// H_ab = (m_a, m_b) over the element, |a|,|b| <= k.
Eigen::MatrixXd monomial_mass_matrix(const ElementGeometry& element, int k);

/// (grad m_a, grad m_b) over the element, |a|,|b| <= k.
Eigen::MatrixXd monomial_stiffness_matrix(const ElementGeometry& element, int k);

/// Polynomial given by coefficients over a basis.
struct PolynomialCoeffs {
    ScaledMonomialBasis basis;
    Eigen::VectorXd coeffs;
};

Eigen::VectorXd evaluate_poly(const PolynomialCoeffs& p, std::span<const Point2> points);
Eigen::MatrixX2d gradient_poly(const PolynomialCoeffs& p, std::span<const Point2> points);
double evaluate_poly(const ScaledMonomialBasis& basis, const Eigen::Ref<const Eigen::VectorXd>& coeffs,
                     const Point2& x);
Vector2 gradient_poly(const ScaledMonomialBasis& basis, const Eigen::Ref<const Eigen::VectorXd>& coeffs,
                      const Point2& x);

} // namespace elastovem
