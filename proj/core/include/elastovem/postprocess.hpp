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

#include "elastovem/assembly.hpp"
#include "elastovem/discrete_space.hpp"

#include <Eigen/Dense>

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace elastovem {

/**
 * Computable displacement grad(Pi_nabla phi_P) + curl(Pi_nabla phi_S), piecewise polynomial on
 * the common refinement of the P and S meshes. Identical meshes give the identity overlay;
 * otherwise both meshes must consist of convex cells, which are clipped pairwise.
 */
class DisplacementField {
public:
    struct Piece {
        int cell_p;
        int cell_s;
        std::vector<Point2> polygon;
        Point2 centroid;
        double area;
    };

    DisplacementField(const ScalarVemSpace& space_p, const Eigen::VectorXd& phi_p, const ScalarVemSpace& space_s,
                      const Eigen::VectorXd& phi_s);

    const std::vector<Piece>& pieces() const { return m_pieces; }
    int max_order() const { return m_max_order; }

    /// Value of the polynomial of one piece (also valid slightly outside it).
    Vector2 evaluate(int piece, const Point2& x) const;
    /// Locates the piece containing x; throws Error outside the domain.
    Vector2 evaluate(const Point2& x) const;
    int locate(const Point2& x) const;

private:
    std::vector<Piece> m_pieces;
    std::vector<ScaledMonomialBasis> m_basis_p, m_basis_s;
    std::vector<Eigen::VectorXd> m_coeffs_p, m_coeffs_s;
    int m_max_order;
    Point2 m_lo, m_hi;
    int m_nx = 1, m_ny = 1;
    std::vector<std::vector<int>> m_buckets;
};

DisplacementField reconstruct_displacement(const ScalarVemSpace& space_p, const ScalarVemSpace& space_s,
                                           const PotentialSolution& solution);

/// L2 norm of u - u_h over the domain with a rule of degree 2 max(k) + 2 + extra_degree.
double l2_error_displacement(const DisplacementField& field, const VectorFunction& exact, int extra_degree = 4);

/// Max of |u - u_h| (Euclidean) over the quadrature points, vertices and centroids of all pieces.
double max_error_displacement(const DisplacementField& field, const VectorFunction& exact, int extra_degree = 4);

/**
 * Max |w_a - w_b| over the vertex and edge-point DOFs of space a, with w_b evaluated at
 * those locations: from a coinciding point DOF of b, from the edge trace of b, or from the
 * H1 projection of the cell of b containing the point. Throws IncomparableSpacesError when a
 * location lies outside the mesh of b.
 */
double dof_sup_error(const ScalarVemSpace& space_a, const Eigen::VectorXd& w_a, const ScalarVemSpace& space_b,
                     const Eigen::VectorXd& w_b);

struct ConvergenceRow {
    int level = 0;
    double h_p = 0.0;
    double h_s = 0.0;
    int k_p = 1;
    int k_s = 1;
    int dof_total = 0;
    double l2_error = 0.0;
    std::optional<double> eoc;
    double max_error = 0.0;
    SolverDiagnostics diagnostics;
};

struct ConvergenceReport {
    std::string scenario;
    std::map<std::string, std::string> metadata;
    std::vector<ConvergenceRow> rows;

    /// Fills eoc of rows 1.. from consecutive (h, error) pairs, h = max(h_p, h_s).
    void compute_eoc();
    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
};

/// Meshes of one refinement level.
struct MeshPair {
    std::shared_ptr<const PolygonalMesh> p;
    std::shared_ptr<const PolygonalMesh> s;
};

struct LevelResult {
    std::shared_ptr<const ScalarVemSpace> space_p;
    std::shared_ptr<const ScalarVemSpace> space_s;
    BlockSystem system;
    PotentialSolution solution;
};

/// Builds the spaces (shared when the meshes and orders coincide), assembles and solves.
LevelResult solve_level(const MeshPair& meshes, int k_p, int k_s, const ElasticProblem& problem,
                        const AssemblyOptions& options = {});

/// Solves every level and reports L2 and max displacement errors against problem.exact_u.
/// Errors from a level are rethrown with the level index in the message.
ConvergenceReport run_convergence_study(const std::string& scenario, const ElasticProblem& problem,
                                        const std::vector<MeshPair>& levels, int k_p, int k_s,
                                        const AssemblyOptions& options = {});

} // namespace elastovem
