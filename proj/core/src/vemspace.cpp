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
#include "elastovem/vemspace.hpp"

#include "elastovem/quadrature.hpp"

#include <spdlog/spdlog.h>

#include <cmath>

namespace elastovem {

namespace {

constexpr double kConditionWarning = 1e12;

void check_condition(double rcond, int cell, const char* what) {
    if (!(rcond > 0.0) || !std::isfinite(rcond)) {
        throw ElementError(cell, std::string("singular ") + what);
    }
    if (1.0 / rcond > kConditionWarning) {
        spdlog::warn("cell {}: {} condition estimate {:.3e}", cell, what, 1.0 / rcond);
    }
}

} // namespace

std::vector<double> edge_dof_parameters(int k) {
    if (k < 2) {
        return {};
    }
    const Rule1D lobatto = gauss_lobatto(k + 1);
    return {lobatto.points.begin() + 1, lobatto.points.end() - 1};
}

std::vector<Point2> dof_points(const ElementGeometry& element, int k) {
    std::vector<Point2> pts(element.vertices);
    const auto t = edge_dof_parameters(k);
    for (const auto& e : element.edges) {
        for (double s : t) {
            pts.push_back(e.a + s * (e.b - e.a));
        }
    }
    return pts;
}

ElementOperators build_element_operators(const ElementGeometry& element, int k, int cell) {
    if (k < 1) {
        throw ElementError(cell, "order must be >= 1");
    }
    ElementOperators op;
    op.k = k;
    op.geometry = element;
    op.layout = DofLayout{k, static_cast<int>(element.edges.size())};
    const DofLayout& L = op.layout;
    const ScaledMonomialBasis basis(k, element);
    const int nm = basis.size();
    const int nd = L.size();
    const int nlow = monomial_count(k - 2);
    const double area = element.area;

    op.H = monomial_mass_matrix(element, k);
    op.G_tilde = monomial_stiffness_matrix(element, k);

    // D
    op.D.resize(nd, nm);
    const auto points = dof_points(element, k);
    for (int i = 0; i < L.num_point_dofs(); ++i) {
        op.D.row(i) = basis.evaluate(points[i]).transpose();
    }
    for (int b = 0; b < nlow; ++b) {
        op.D.row(L.moment_dof(b)) = op.H.row(b) / area;
    }

    // B: right-hand sides of the H1 projection in terms of DOFs.
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(nm, nd);
    const Rule1D lobatto = gauss_lobatto(k + 1);
    const int ne = L.num_edges;
    for (int e = 0; e < ne; ++e) {
        const auto& edge = element.edges[e];
        for (int j = 0; j <= k; ++j) {
            int dof;
            if (j == 0) {
                dof = L.vertex_dof(e);
            } else if (j == k) {
                dof = L.vertex_dof((e + 1) % ne);
            } else {
                dof = L.edge_dof(e, j - 1);
            }
            const double w = lobatto.weights[j] * edge.length;
            const Point2 x = edge.a + lobatto.points[j] * (edge.b - edge.a);
            B(0, dof) += w;
            B.col(dof).tail(nm - 1) += w * (basis.gradient(x) * edge.normal).tail(nm - 1);
        }
    }
    if (k >= 2) {
        const Eigen::MatrixXd lap = basis.laplacian_matrix();
        for (int a = 1; a < nm; ++a) {
            for (int b = 0; b < nlow; ++b) {
                B(a, L.moment_dof(b)) -= area * lap(b, a);
            }
        }
    }

    const Eigen::MatrixXd G = B * op.D;
    const Eigen::PartialPivLU<Eigen::MatrixXd> g_lu(G);
    check_condition(g_lu.rcond(), cell, "H1 projector system");
    op.pi_nabla_star = g_lu.solve(B);
    op.pi_nabla_dof = op.D * op.pi_nabla_star;

    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(nd, nd);
    const Eigen::MatrixXd rn = I - op.pi_nabla_dof;
    op.K = op.pi_nabla_star.transpose() * op.G_tilde * op.pi_nabla_star + rn.transpose() * rn;

    // L2 projection through the enhancement: moments of degree <= k-2 come from the DOFs, the
    // components L2-orthogonal to P_{k-2} are those of the H1 projection.
    const Eigen::LLT<Eigen::MatrixXd> h_llt(op.H);
    if (h_llt.info() != Eigen::Success) {
        throw ElementError(cell, "monomial mass matrix is not positive definite");
    }
    check_condition(h_llt.rcond(), cell, "monomial mass matrix");
    // Pi0 w = Pi_nabla w + r with r in P_{k-2} fixed by the moment DOFs.
    op.pi_zero_star = op.pi_nabla_star;
    if (nlow > 0) {
        Eigen::MatrixXd C_low = -op.H.topRows(nlow) * op.pi_nabla_star;
        for (int b = 0; b < nlow; ++b) {
            C_low(b, L.moment_dof(b)) += area;
        }
        const Eigen::LLT<Eigen::MatrixXd> low_llt(op.H.topLeftCorner(nlow, nlow));
        op.pi_zero_star.topRows(nlow) += low_llt.solve(C_low);
    }
    op.pi_zero_dof = op.D * op.pi_zero_star;
    const Eigen::MatrixXd r0 = I - op.pi_zero_dof;
    op.M = op.pi_zero_star.transpose() * op.H * op.pi_zero_star + area * r0.transpose() * r0;

    op.K = 0.5 * (op.K + op.K.transpose());
    op.M = 0.5 * (op.M + op.M.transpose());
    return op;
}

Eigen::MatrixXd ElementOperators::pi_zero_star_reduced(int kp) const {
    if (kp >= k) {
        return pi_zero_star;
    }
    const int n = monomial_count(kp);
    const Eigen::MatrixXd Hk = H.topLeftCorner(n, n);
    return Hk.llt().solve(H.topRows(n) * pi_zero_star);
}

Eigen::MatrixXd compute_pi_nabla(const ElementGeometry& element, int k) {
    return build_element_operators(element, k).pi_nabla_star;
}

Eigen::MatrixXd compute_pi_zero(const ElementGeometry& element, int k) {
    return build_element_operators(element, k).pi_zero_star;
}

Eigen::MatrixXd local_stiffness(const ElementGeometry& element, int k) {
    return build_element_operators(element, k).K;
}

Eigen::MatrixXd local_mass(const ElementGeometry& element, int k) {
    return build_element_operators(element, k).M;
}

Eigen::VectorXd interpolate_into_space(const ElementGeometry& element, int k, const ScalarFunction& f,
                                       int extra_degree) {
    const DofLayout L{k, static_cast<int>(element.edges.size())};
    Eigen::VectorXd dofs(L.size());
    const auto points = dof_points(element, k);
    for (int i = 0; i < L.num_point_dofs(); ++i) {
        dofs[i] = f(points[i]);
    }
    if (L.num_moments() > 0) {
        const ScaledMonomialBasis low(k - 2, element);
        Eigen::VectorXd m = Eigen::VectorXd::Zero(low.size());
        for (const auto& q : polygon_rule(element.vertices, element.centroid, 2 * k + 2 + extra_degree)) {
            m += q.w * f(q.x) * low.evaluate(q.x);
        }
        dofs.tail(L.num_moments()) = m / element.area;
    }
    return dofs;
}

} // namespace elastovem
