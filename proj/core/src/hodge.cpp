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
#include "elastovem/hodge.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>


namespace elastovem {

Eigen::VectorXd solve_neumann_potential(const ScalarVemSpace& space, const VectorSource& source,
                                        LoadProjection projection) {
    const int n = space.num_dofs();
    const Eigen::VectorXd c = space.boundary_mass() * Eigen::VectorXd::Ones(n);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n + 1);
    rhs.head(n) = -space.source_load(source.div, projection) +
                  boundary_load(space.trace(), normal_component(source.f));

    // bordered form of A + c c^T: [A c; c^T -1] [x; y] = [b; 0]
    const auto& A = space.stiffness();
    std::vector<Eigen::Triplet<double>> t;
    t.reserve(A.nonZeros() + 2 * space.dofs().num_boundary_dofs() + 1);
    for (int j = 0; j < A.outerSize(); ++j) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, j); it; ++it) {
            t.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
        }
    }
    for (int i = 0; i < n; ++i) {
        if (c[i] != 0.0) {
            t.emplace_back(i, n, c[i]);
            t.emplace_back(n, i, c[i]);
        }
    }
    t.emplace_back(n, n, -1.0);
    Eigen::SparseMatrix<double> K(n + 1, n + 1);
    K.setFromTriplets(t.begin(), t.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(K);
    if (lu.info() != Eigen::Success) {
        throw SolverError("Neumann potential system is singular: " + lu.lastErrorMessage(), 0.0);
    }
    const Eigen::VectorXd x = lu.solve(rhs);
    return x.head(n);
}

Eigen::VectorXd solve_dirichlet_potential(const ScalarVemSpace& space, const VectorSource& source,
                                          LoadProjection projection) {
    const int n = space.num_dofs();
    const int nb = space.dofs().num_boundary_dofs();
    const int ni = n - nb;
    Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
    if (ni == 0) {
        return x;
    }
    const Eigen::VectorXd rhs = space.source_load(source.curl, projection).tail(ni);
    const Eigen::SparseMatrix<double> A_ii = space.stiffness().bottomRightCorner(ni, ni);
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A_ii);
    if (ldlt.info() != Eigen::Success) {
        throw SolverError("Dirichlet potential system is singular", 0.0);
    }
    x.tail(ni) = ldlt.solve(rhs);
    return x;
}

HodgeDecomposition decompose_source(const ScalarVemSpace& space_p, const ScalarVemSpace& space_s,
                                    const VectorSource& source, LoadProjection projection) {
    HodgeDecomposition d;
    d.f_p = solve_neumann_potential(space_p, source, projection);
    d.f_s = solve_dirichlet_potential(space_s, source, projection);
    return d;
}

} // namespace elastovem
