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
#include "elastovem/trace.hpp"

#include "elastovem/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace elastovem {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

Eigen::SparseMatrix<double> from_triplets(int rows, int cols, const Triplets& t) {
    Eigen::SparseMatrix<double> m(rows, cols);
    m.setFromTriplets(t.begin(), t.end());
    return m;
}

void check_same_curve(const BoundaryTraceSpace& p, const BoundaryTraceSpace& s) {
    const double len = p.perimeter();
    const double tol = 1e-10 * len;
    if (std::abs(len - s.perimeter()) > 1e-12 * len) {
        throw BoundaryMismatchError("P and S boundaries have different lengths");
    }
    auto check = [tol](const BoundaryTraceSpace& a, const BoundaryTraceSpace& b) {
        for (int i = 0; i < a.num_edges(); ++i) {
            const double s0 = a.breakpoints()[i];
            if ((a.edge(i).a - b.point_at(s0)).norm() > tol) {
                throw BoundaryMismatchError("boundary vertex at arclength " + std::to_string(s0) +
                                            " is not on the other boundary (orientation or domain mismatch)");
            }
        }
    };
    check(p, s);
    check(s, p);
}

} // namespace

BoundaryFunction normal_component(VectorFunction g) {
    return [g = std::move(g)](const Point2& x, const Vector2& n, const Vector2&) { return g(x).dot(n); };
}

BoundaryFunction tangential_component(VectorFunction g) {
    return [g = std::move(g)](const Point2& x, const Vector2&, const Vector2& t) { return g(x).dot(t); };
}

BoundaryTraceSpace::BoundaryTraceSpace(const PolygonalMesh& mesh, const DofMap& dofs)
    : m_k(dofs.order()), m_num_dofs(dofs.num_dofs()), m_num_boundary(dofs.num_boundary_dofs()) {
    m_nodes = gauss_lobatto(m_k + 1).points;
    m_breaks.push_back(0.0);
    const auto& chain = mesh.boundary_edges();
    for (int i = 0; i < static_cast<int>(chain.size()); ++i) {
        const Point2 pts[2] = {mesh.vertices()[chain[i].from], mesh.vertices()[chain[i].to]};
        m_edges.push_back(polygon_geometry(pts).edges[0]);
        m_edge_dofs.push_back(dofs.boundary_edge_dofs(i));
        m_breaks.push_back(m_breaks.back() + m_edges.back().length);
    }
}

int BoundaryTraceSpace::edge_at(double s) const {
    const auto it = std::upper_bound(m_breaks.begin(), m_breaks.end(), s);
    const int i = static_cast<int>(it - m_breaks.begin()) - 1;
    return std::clamp(i, 0, num_edges() - 1);
}

Point2 BoundaryTraceSpace::point_at(double s) const {
    const int i = edge_at(s);
    const double t = (s - m_breaks[i]) / m_edges[i].length;
    return m_edges[i].a + t * (m_edges[i].b - m_edges[i].a);
}

Eigen::VectorXd BoundaryTraceSpace::basis_values(double t) const {
    const int n = m_k + 1;
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) {
        double p = 1.0;
        for (int j = 0; j < n; ++j) {
            if (j != i) {
                p *= (t - m_nodes[j]) / (m_nodes[i] - m_nodes[j]);
            }
        }
        v[i] = p;
    }
    return v;
}

Eigen::VectorXd BoundaryTraceSpace::basis_derivatives(double t) const {
    const int n = m_k + 1;
    Eigen::VectorXd d = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        for (int l = 0; l < n; ++l) {
            if (l == i) {
                continue;
            }
            double p = 1.0 / (m_nodes[i] - m_nodes[l]);
            for (int j = 0; j < n; ++j) {
                if (j != i && j != l) {
                    p *= (t - m_nodes[j]) / (m_nodes[i] - m_nodes[j]);
                }
            }
            d[i] += p;
        }
    }
    return d;
}

Eigen::SparseMatrix<double> assemble_boundary_mass(const BoundaryTraceSpace& space) {
    const Rule1D rule = gauss_legendre(space.order() + 1);
    const int n = space.order() + 1;
    Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const Eigen::VectorXd phi = space.basis_values(rule.points[q]);
        ref += rule.weights[q] * phi * phi.transpose();
    }
    Triplets t;
    for (int e = 0; e < space.num_edges(); ++e) {
        const auto& dofs = space.edge_dofs(e);
        const double len = space.edge(e).length;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                t.emplace_back(dofs[i], dofs[j], len * ref(i, j));
            }
        }
    }
    return from_triplets(space.num_dofs(), space.num_dofs(), t);
}

std::pair<Eigen::SparseMatrix<double>, Eigen::SparseMatrix<double>>
assemble_coupling(const BoundaryTraceSpace& space_p, const BoundaryTraceSpace& space_s) {
    check_same_curve(space_p, space_s);
    const double len = space_p.perimeter();
    std::vector<double> breaks = space_p.breakpoints();
    breaks.insert(breaks.end(), space_s.breakpoints().begin(), space_s.breakpoints().end());
    std::sort(breaks.begin(), breaks.end());
    std::vector<double> merged;
    for (double s : breaks) {
        if (merged.empty() || s - merged.back() > 1e-12 * len) {
            merged.push_back(s);
        }
    }
    merged.back() = len;

    const int kp = space_p.order();
    const int ks = space_s.order();
    const Rule1D rule = gauss_legendre((kp + ks + 1) / 2 + 1);
    Triplets tps, tsp;
    for (std::size_t m = 0; m + 1 < merged.size(); ++m) {
        const double a = merged[m];
        const double b = merged[m + 1];
        const double mid = 0.5 * (a + b);
        const int ep = space_p.edge_at(mid);
        const int es = space_s.edge_at(mid);
        const double sp0 = space_p.breakpoints()[ep];
        const double ss0 = space_s.breakpoints()[es];
        const double lp = space_p.edge(ep).length;
        const double ls = space_s.edge(es).length;
        const auto& dp = space_p.edge_dofs(ep);
        const auto& ds = space_s.edge_dofs(es);
        Eigen::MatrixXd local_ps = Eigen::MatrixXd::Zero(kp + 1, ks + 1);
        Eigen::MatrixXd local_sp = Eigen::MatrixXd::Zero(ks + 1, kp + 1);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const double s = a + rule.points[q] * (b - a);
            const double w = rule.weights[q] * (b - a);
            const double tp = (s - sp0) / lp;
            const double ts = (s - ss0) / ls;
            const Eigen::VectorXd phi_p = space_p.basis_values(tp);
            const Eigen::VectorXd phi_s = space_s.basis_values(ts);
            // d/dtau = -d/ds for the counterclockwise arclength s
            const Eigen::VectorXd dtau_p = -space_p.basis_derivatives(tp) / lp;
            const Eigen::VectorXd dtau_s = -space_s.basis_derivatives(ts) / ls;
            local_ps += w * phi_p * dtau_s.transpose();
            local_sp += w * phi_s * dtau_p.transpose();
        }
        for (int i = 0; i <= kp; ++i) {
            for (int j = 0; j <= ks; ++j) {
                tps.emplace_back(dp[i], ds[j], local_ps(i, j));
                tsp.emplace_back(ds[j], dp[i], local_sp(j, i));
            }
        }
    }
    return {from_triplets(space_p.num_dofs(), space_s.num_dofs(), tps),
            from_triplets(space_s.num_dofs(), space_p.num_dofs(), tsp)};
}

Eigen::VectorXd boundary_load(const BoundaryTraceSpace& space, const BoundaryFunction& g, int extra_degree) {
    const Rule1D rule = gauss_legendre_for_degree(2 * space.order() + 2 + extra_degree);
    Eigen::VectorXd f = Eigen::VectorXd::Zero(space.num_dofs());
    for (int e = 0; e < space.num_edges(); ++e) {
        const auto& edge = space.edge(e);
        const auto& dofs = space.edge_dofs(e);
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const Point2 x = edge.a + rule.points[q] * (edge.b - edge.a);
            const double w = rule.weights[q] * edge.length * g(x, edge.normal, edge.tangent);
            const Eigen::VectorXd phi = space.basis_values(rule.points[q]);
            for (int i = 0; i <= space.order(); ++i) {
                f[dofs[i]] += w * phi[i];
            }
        }
    }
    return f;
}

Eigen::VectorXd boundary_load_interpolated(const BoundaryTraceSpace& space, const BoundaryFunction& g) {
    const int n = space.order() + 1;
    const Rule1D rule = gauss_legendre(n);
    Eigen::MatrixXd ref = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t q = 0; q < rule.size(); ++q) {
        const Eigen::VectorXd phi = space.basis_values(rule.points[q]);
        ref += rule.weights[q] * phi * phi.transpose();
    }
    Eigen::VectorXd f = Eigen::VectorXd::Zero(space.num_dofs());
    for (int e = 0; e < space.num_edges(); ++e) {
        const auto& edge = space.edge(e);
        const auto& dofs = space.edge_dofs(e);
        Eigen::VectorXd samples(n);
        for (int i = 0; i < n; ++i) {
            samples[i] = g(edge.a + space.nodes()[i] * (edge.b - edge.a), edge.normal, edge.tangent);
        }
        const Eigen::VectorXd local = edge.length * ref * samples;
        for (int i = 0; i < n; ++i) {
            f[dofs[i]] += local[i];
        }
    }
    return f;
}

Eigen::VectorXd tangential_derivative_trace(const BoundaryTraceSpace& space, int edge,
                                            const Eigen::VectorXd& nodal_values) {
    const int n = space.order() + 1;
    Eigen::MatrixXd V(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            V(i, j) = std::pow(space.nodes()[i], j);
        }
    }
    const Eigen::VectorXd a = V.partialPivLu().solve(nodal_values);
    const double len = space.edge(edge).length;
    Eigen::VectorXd d = Eigen::VectorXd::Zero(std::max(n - 1, 1));
    for (int j = 1; j < n; ++j) {
        d[j - 1] = -j * a[j] / std::pow(len, j);
    }
    return d;
}

} // namespace elastovem
