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
#include "elastovem/polybasis.hpp"

#include "elastovem/quadrature.hpp"

namespace elastovem {

ScaledMonomialBasis::ScaledMonomialBasis(int degree, const Point2& center, double scale)
    : m_degree(degree), m_center(center), m_scale(scale) {
    m_exponents.reserve(size());
    for (int d = 0; d <= degree; ++d) {
        for (int b = 0; b <= d; ++b) {
            m_exponents.push_back({d - b, b});
        }
    }
}

Eigen::VectorXd ScaledMonomialBasis::evaluate(const Point2& x) const {
    const Point2 s = (x - m_center) / m_scale;
    Eigen::VectorXd v(size());
    v[0] = 1.0;
    // m_(a,b) of degree d from degree d-1: multiply by sx except the last, which takes sy
    for (int d = 1; d <= m_degree; ++d) {
        const int prev = monomial_count(d - 2);
        const int cur = monomial_count(d - 1);
        for (int b = 0; b < d; ++b) {
            v[cur + b] = v[prev + b] * s.x();
        }
        v[cur + d] = v[prev + d - 1] * s.y();
    }
    return v;
}

Eigen::MatrixX2d ScaledMonomialBasis::gradient(const Point2& x) const {
    Eigen::MatrixX2d g = Eigen::MatrixX2d::Zero(size(), 2);
    if (m_degree == 0) {
        return g;
    }
    const Eigen::VectorXd v = ScaledMonomialBasis(m_degree - 1, m_center, m_scale).evaluate(x);
    for (int i = 1; i < size(); ++i) {
        const auto [a, b] = m_exponents[i];
        if (a > 0) {
            g(i, 0) = a * v[monomial_index(a - 1, b)] / m_scale;
        }
        if (b > 0) {
            g(i, 1) = b * v[monomial_index(a, b - 1)] / m_scale;
        }
    }
    return g;
}

Eigen::MatrixXd ScaledMonomialBasis::laplacian_matrix() const {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(monomial_count(m_degree - 2), size());
    const double h2 = m_scale * m_scale;
    for (int i = 0; i < size(); ++i) {
        const auto [a, b] = m_exponents[i];
        if (a >= 2) {
            L(monomial_index(a - 2, b), i) += a * (a - 1) / h2;
        }
        if (b >= 2) {
            L(monomial_index(a, b - 2), i) += b * (b - 1) / h2;
        }
    }
    return L;
}

Eigen::VectorXd integrate_monomials(const ElementGeometry& element, int k) {
    const ScaledMonomialBasis basis(k, element);
    Eigen::VectorXd result = Eigen::VectorXd::Zero(basis.size());
    for (const auto& q : polygon_rule(element.vertices, element.centroid, k)) {
        result += q.w * basis.evaluate(q.x);
    }
    return result;
}

Eigen::MatrixXd monomial_mass_matrix(const ElementGeometry& element, int k) {
    const Eigen::VectorXd moments = integrate_monomials(element, 2 * k);
    const ScaledMonomialBasis basis(k, element);
    const int n = basis.size();
    Eigen::MatrixXd H(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const auto& ei = basis.exponent(i);
            const auto& ej = basis.exponent(j);
            H(i, j) = H(j, i) = moments[monomial_index(ei[0] + ej[0], ei[1] + ej[1])];
        }
    }
    return H;
}

Eigen::MatrixXd monomial_stiffness_matrix(const ElementGeometry& element, int k) {
    const ScaledMonomialBasis basis(k, element);
    const int n = basis.size();
    Eigen::MatrixXd G = Eigen::MatrixXd::Zero(n, n);
    if (k == 0) {
        return G;
    }
    const Eigen::VectorXd moments = integrate_monomials(element, 2 * k - 2);
    auto moment = [&](int a, int b) { return moments[monomial_index(a, b)]; };
    const double h2 = element.diameter * element.diameter;
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j <= i; ++j) {
            const auto [ai, bi] = basis.exponent(i);
            const auto [aj, bj] = basis.exponent(j);
            double v = 0.0;
            if (ai > 0 && aj > 0) {
                v += ai * aj * moment(ai + aj - 2, bi + bj);
            }
            if (bi > 0 && bj > 0) {
                v += bi * bj * moment(ai + aj, bi + bj - 2);
            }
            G(i, j) = G(j, i) = v / h2;
        }
    }
    return G;
}

Eigen::VectorXd evaluate_poly(const PolynomialCoeffs& p, std::span<const Point2> points) {
    Eigen::VectorXd values(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        values[i] = p.basis.evaluate(points[i]).dot(p.coeffs);
    }
    return values;
}

Eigen::MatrixX2d gradient_poly(const PolynomialCoeffs& p, std::span<const Point2> points) {
    Eigen::MatrixX2d values(points.size(), 2);
    for (std::size_t i = 0; i < points.size(); ++i) {
        values.row(i) = p.coeffs.transpose() * p.basis.gradient(points[i]);
    }
    return values;
}

double evaluate_poly(const ScaledMonomialBasis& basis, const Eigen::Ref<const Eigen::VectorXd>& coeffs,
                     const Point2& x) {
    return basis.evaluate(x).dot(coeffs);
}

Vector2 gradient_poly(const ScaledMonomialBasis& basis, const Eigen::Ref<const Eigen::VectorXd>& coeffs,
                      const Point2& x) {
    return (coeffs.transpose() * basis.gradient(x)).transpose();
}

} // namespace elastovem
