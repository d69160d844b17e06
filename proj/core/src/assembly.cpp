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
#include "elastovem/assembly.hpp"

#include <Eigen/SparseLU>
#include <spdlog/spdlog.h>

#include <cmath>
#include <fstream>
#include <iomanip>

namespace elastovem {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

void append(Triplets& t, const Eigen::SparseMatrix<double>& A, int row0, int col0, double scale) {
    for (int j = 0; j < A.outerSize(); ++j) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, j); it; ++it) {
            t.emplace_back(row0 + static_cast<int>(it.row()), col0 + static_cast<int>(it.col()), scale * it.value());
        }
    }
}

double norm1(const Eigen::SparseMatrix<double>& A) {
    double n = 0.0;
    for (int j = 0; j < A.outerSize(); ++j) {
        double s = 0.0;
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, j); it; ++it) {
            s += std::abs(it.value());
        }
        n = std::max(n, s);
    }
    return n;
}

Eigen::VectorXd sign_of(const Eigen::VectorXd& v) {
    return v.unaryExpr([](double x) { return x >= 0.0 ? 1.0 : -1.0; });
}

/// Hager-Higham estimate of the 1-norm of A^-1 from solves with A and A^T.
template <class Solver>
double inverse_norm1_estimate(Solver& lu, int n) {
    Eigen::VectorXd x = Eigen::VectorXd::Constant(n, 1.0 / n);
    Eigen::VectorXd y = lu.solve(x);
    double est = y.lpNorm<1>();
    Eigen::VectorXd xi = sign_of(y);
    Eigen::VectorXd z = lu.transpose().solve(xi);
    Eigen::Index j;
    z.cwiseAbs().maxCoeff(&j);
    for (int iter = 0; iter < 5; ++iter) {
        x = Eigen::VectorXd::Unit(n, j);
        y = lu.solve(x);
        const double next = y.lpNorm<1>();
        const Eigen::VectorXd xi_next = sign_of(y);
        if (next <= est || xi_next == xi) {
            est = std::max(est, next);
            break;
        }
        est = next;
        xi = xi_next;
        z = lu.transpose().solve(xi);
        Eigen::Index jn;
        const double zmax = z.cwiseAbs().maxCoeff(&jn);
        if (zmax <= z[j] * x[j] || jn == j) {
            break;
        }
        j = jn;
    }
    Eigen::VectorXd alt(n);
    for (int i = 0; i < n; ++i) {
        alt[i] = (i % 2 == 0 ? 1.0 : -1.0) * (1.0 + static_cast<double>(i) / std::max(n - 1, 1));
    }
    const double est_alt = 2.0 * lu.solve(alt).template lpNorm<1>() / (3.0 * n);
    return std::max(est, est_alt);
}

} // namespace

Eigen::SparseMatrix<double> BlockSystem::matrix() const {
    Triplets t;
    t.reserve(A_p.nonZeros() + M_p.nonZeros() + A_s.nonZeros() + M_s.nonZeros() + B_ps.nonZeros() +
              B_sp.nonZeros());
    append(t, A_p, 0, 0, 1.0);
    append(t, M_p, 0, 0, -kappa_p_squared);
    append(t, B_ps, 0, n_p, -1.0);
    append(t, B_sp, n_p, 0, 1.0);
    append(t, A_s, n_p, n_p, 1.0);
    append(t, M_s, n_p, n_p, -kappa_s_squared);
    Eigen::SparseMatrix<double> K(size(), size());
    K.setFromTriplets(t.begin(), t.end());
    K.prune(0.0);
    return K;
}

Eigen::VectorXd BlockSystem::rhs() const {
    Eigen::VectorXd b(size());
    b.head(n_p) = source_p + boundary_p;
    b.tail(n_s) = source_s + boundary_s;
    return b;
}

BlockSystem assemble_global(const ScalarVemSpace& space_p, const ScalarVemSpace& space_s,
                            const ElasticProblem& problem, const AssemblyOptions& options) {
    const auto& mat = problem.material;
    mat.validate();
    BlockSystem sys;
    sys.n_p = space_p.num_dofs();
    sys.n_s = space_s.num_dofs();
    sys.n_p_boundary = space_p.dofs().num_boundary_dofs();
    sys.n_s_boundary = space_s.dofs().num_boundary_dofs();
    sys.kappa_p_squared = mat.kappa_p_squared();
    sys.kappa_s_squared = mat.kappa_s_squared();
    sys.A_p = space_p.stiffness();
    sys.M_p = space_p.mass();
    sys.Q_p = space_p.boundary_mass();
    sys.A_s = space_s.stiffness();
    sys.M_s = space_s.mass();
    sys.Q_s = space_s.boundary_mass();
    if (options.couple) {
        std::tie(sys.B_ps, sys.B_sp) = assemble_coupling(space_p.trace(), space_s.trace());
    } else {
        sys.B_ps.resize(sys.n_p, sys.n_s);
        sys.B_sp.resize(sys.n_s, sys.n_p);
    }

    const double cp = mat.lambda + 2.0 * mat.mu;
    const double cs = mat.mu;
    if (problem.vector_source) {
        sys.hodge = decompose_source(space_p, space_s, *problem.vector_source, options.load_projection);
        sys.source_p = space_p.discrete_source_load(sys.hodge->f_p, options.load_projection) / cp;
        sys.source_s = space_s.discrete_source_load(sys.hodge->f_s, options.load_projection) / cs;
    } else {
        if (!problem.f_p || !problem.f_s) {
            throw UnsupportedConfigurationError("problem has neither potential sources nor a vector source");
        }
        sys.source_p = space_p.source_load(problem.f_p, options.load_projection) / cp;
        sys.source_s = space_s.source_load(problem.f_s, options.load_projection) / cs;
    }

    if (!problem.g) {
        throw UnsupportedConfigurationError("problem has no boundary datum");
    }
    const auto gn = normal_component(problem.g);
    const auto gt = tangential_component(problem.g);
    if (options.boundary_load == BoundaryLoadMode::Quadrature) {
        sys.boundary_p = boundary_load(space_p.trace(), gn);
        sys.boundary_s = boundary_load(space_s.trace(), gt);
    } else {
        sys.boundary_p = boundary_load_interpolated(space_p.trace(), gn);
        sys.boundary_s = boundary_load_interpolated(space_s.trace(), gt);
    }
    return sys;
}

Eigen::VectorXd solve_sparse(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                             SolverDiagnostics* diagnostics) {
    Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>> lu;
    lu.analyzePattern(A);
    lu.factorize(A);
    if (lu.info() != Eigen::Success) {
        throw SolverError("sparse LU failed (near-resonance or invalid mesh): " + lu.lastErrorMessage(),
                          std::numeric_limits<double>::infinity());
    }
    const Eigen::VectorXd x = lu.solve(b);
    const double cond = norm1(A) * inverse_norm1_estimate(lu, static_cast<int>(A.rows()));
    if (!x.allFinite() || !std::isfinite(cond)) {
        throw SolverError("non-finite solution (near-resonance or invalid mesh)", cond);
    }
    SolverDiagnostics d;
    d.condition_estimate = cond;
    const double bn = b.norm();
    d.relative_residual = (A * x - b).norm() / (bn > 0.0 ? bn : 1.0);
    d.condition_warning = cond > kConditionWarningThreshold;
    if (d.condition_warning) {
        spdlog::warn("condition estimate {:.3e}: close to a resonance of the potential problem", cond);
    }
    if (diagnostics) {
        *diagnostics = d;
    }
    return x;
}

PotentialSolution solve_block_system(const BlockSystem& system) {
    PotentialSolution sol;
    const Eigen::VectorXd x = solve_sparse(system.matrix(), system.rhs(), &sol.diagnostics);
    sol.phi_p = x.head(system.n_p);
    sol.phi_s = x.tail(system.n_s);
    spdlog::debug("solved {} unknowns, residual {:.3e}, condition estimate {:.3e}", system.size(),
                  sol.diagnostics.relative_residual, sol.diagnostics.condition_estimate);
    return sol;
}

Eigen::VectorXd solve_scalar_helmholtz(const ScalarVemSpace& space, double kappa2, const Eigen::VectorXd& b,
                                       SolverDiagnostics* diagnostics) {
    Eigen::SparseMatrix<double> A = space.stiffness() - kappa2 * space.mass();
    A.prune(0.0);
    return solve_sparse(A, b, diagnostics);
}

void export_triplets(const Eigen::SparseMatrix<double>& A, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot write '" + path.string() + "'");
    }
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << A.rows() << ' ' << A.cols() << ' ' << A.nonZeros() << '\n';
    out << std::setprecision(17);
    for (int j = 0; j < A.outerSize(); ++j) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(A, j); it; ++it) {
            out << it.row() + 1 << ' ' << it.col() + 1 << ' ' << it.value() << '\n';
        }
    }
}

void export_blocks(const BlockSystem& system, const std::filesystem::path& directory) {
    std::filesystem::create_directories(directory);
    const std::pair<const char*, const Eigen::SparseMatrix<double>*> blocks[] = {
        {"A_P", &system.A_p}, {"M_P", &system.M_p}, {"Q_P", &system.Q_p},   {"A_S", &system.A_s},
        {"M_S", &system.M_s}, {"Q_S", &system.Q_s}, {"B_PS", &system.B_ps}, {"B_SP", &system.B_sp}};
    for (const auto& [name, A] : blocks) {
        export_triplets(*A, directory / (std::string(name) + ".mtx"));
    }
    export_triplets(system.matrix(), directory / "global.mtx");
}

} // namespace elastovem
