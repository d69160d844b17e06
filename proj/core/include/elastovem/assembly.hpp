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

#include "elastovem/discrete_space.hpp"
#include "elastovem/hodge.hpp"
#include "elastovem/problem.hpp"

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <filesystem>
#include <optional>
#include <string>

namespace elastovem {

enum class BoundaryLoadMode { Quadrature, Interpolated };

struct AssemblyOptions {
    LoadProjection load_projection = LoadProjection::Full;
    BoundaryLoadMode boundary_load = BoundaryLoadMode::Quadrature;
    /// Zeroes B_PS and B_SP; used to audit the decoupled case.
    bool couple = true;
};

/**
 * Blocks of the potential system
 *
 *   [ A_P - kP^2 M_P      -B_PS       ] [phi_P]   [ f_P / (lambda + 2 mu) + <g.n, v> ]
 *   [      B_SP       A_S - kS^2 M_S  ] [phi_S] = [ f_S / mu              + <g.t, v> ]
 *
 * with both unknown vectors ordered boundary DOFs first.
 */
struct BlockSystem {
    int n_p = 0;
    int n_s = 0;
    int n_p_boundary = 0;
    int n_s_boundary = 0;
    double kappa_p_squared = 0.0;
    double kappa_s_squared = 0.0;

    Eigen::SparseMatrix<double> A_p, M_p, Q_p;
    Eigen::SparseMatrix<double> A_s, M_s, Q_s;
    Eigen::SparseMatrix<double> B_ps; ///< n_p x n_s
    Eigen::SparseMatrix<double> B_sp; ///< n_s x n_p

    Eigen::VectorXd source_p; ///< f_P-term, already divided by lambda + 2 mu
    Eigen::VectorXd source_s; ///< f_S-term, already divided by mu
    Eigen::VectorXd boundary_p;
    Eigen::VectorXd boundary_s;

    std::optional<HodgeDecomposition> hodge;

    int size() const { return n_p + n_s; }
    Eigen::SparseMatrix<double> matrix() const;
    Eigen::VectorXd rhs() const;
};

BlockSystem assemble_global(const ScalarVemSpace& space_p, const ScalarVemSpace& space_s,
                            const ElasticProblem& problem, const AssemblyOptions& options = {});

struct SolverDiagnostics {
    double relative_residual = 0.0;
    double condition_estimate = 0.0;
    bool condition_warning = false;
};

struct PotentialSolution {
    Eigen::VectorXd phi_p;
    Eigen::VectorXd phi_s;
    SolverDiagnostics diagnostics;
};

/// Estimates above this trigger the near-resonance warning.
inline constexpr double kConditionWarningThreshold = 1e10;

/// Sparse LU with COLAMD ordering. Throws SolverError ("near-resonance or invalid mesh")
/// when the factorization fails or the solution is not finite.
PotentialSolution solve_block_system(const BlockSystem& system);

/// Solves a sparse system with the same factorization and diagnostics.
Eigen::VectorXd solve_sparse(const Eigen::SparseMatrix<double>& A, const Eigen::VectorXd& b,
                             SolverDiagnostics* diagnostics = nullptr);

/// (A - kappa2 M) x = b for one potential on its own.
Eigen::VectorXd solve_scalar_helmholtz(const ScalarVemSpace& space, double kappa2, const Eigen::VectorXd& b,
                                       SolverDiagnostics* diagnostics = nullptr);

/// Matrix Market coordinate file (1-based triplets).
void export_triplets(const Eigen::SparseMatrix<double>& A, const std::filesystem::path& path);

/// Writes every block and the global matrix into a directory; file names are the block names.
void export_blocks(const BlockSystem& system, const std::filesystem::path& directory);

} // namespace elastovem
