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
#include "elastovem/postprocess.hpp"

#include "elastovem/parallel.hpp"
#include "elastovem/quadrature.hpp"

#include <nlohmann/json.hpp>
#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdio>
#include <unordered_map>

namespace elastovem {

namespace {

double cross(const Vector2& u, const Vector2& v) { return u.x() * v.y() - u.y() * v.x(); }

bool is_convex(const std::vector<Point2>& p) {
    const std::size_t n = p.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vector2 u = p[(i + 1) % n] - p[i];
        const Vector2 v = p[(i + 2) % n] - p[(i + 1) % n];
        if (cross(u, v) < -1e-12 * u.norm() * v.norm()) {
            return false;
        }
    }
    return true;
}

/// Clips a polygon against a convex counterclockwise polygon.
std::vector<Point2> clip(std::vector<Point2> subject, const std::vector<Point2>& convex) {
    const std::size_t m = convex.size();
    for (std::size_t e = 0; e < m && !subject.empty(); ++e) {
        const Point2& a = convex[e];
        const Vector2 d = convex[(e + 1) % m] - a;
        auto side = [&](const Point2& x) { return cross(d, x - a); };
        std::vector<Point2> out;
        const std::size_t n = subject.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2& p = subject[i];
            const Point2& q = subject[(i + 1) % n];
            const double sp = side(p);
            const double sq = side(q);
            if (sp >= 0.0) {
                out.push_back(p);
            }
            if ((sp >= 0.0) != (sq >= 0.0)) {
                out.push_back(p + (sp / (sp - sq)) * (q - p));
            }
        }
        subject = std::move(out);
    }
    return subject;
}

double polygon_area(const std::vector<Point2>& p) {
    double a = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        a += cross(p[i], p[(i + 1) % p.size()]);
    }
    return 0.5 * a;
}

bool inside(const std::vector<Point2>& poly, const Point2& x) {
    bool in = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2& a = poly[i];
        const Point2& b = poly[j];
        if ((a.y() > x.y()) != (b.y() > x.y()) &&
            x.x() < (b.x() - a.x()) * (x.y() - a.y()) / (b.y() - a.y()) + a.x()) {
            in = !in;
        }
    }
    return in;
}

double distance_to_segment(const Point2& x, const Point2& a, const Point2& b, double* t_out = nullptr) {
    const Vector2 d = b - a;
    const double t = std::clamp((x - a).dot(d) / d.squaredNorm(), 0.0, 1.0);
    if (t_out) {
        *t_out = t;
    }
    return (a + t * d - x).norm();
}

double boundary_distance(const std::vector<Point2>& poly, const Point2& x) {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < poly.size(); ++i) {
        d = std::min(d, distance_to_segment(x, poly[i], poly[(i + 1) % poly.size()]));
    }
    return d;
}

/// Uniform bucket grid over bounding boxes.
class BucketGrid {
public:
    BucketGrid(const std::vector<std::vector<Point2>>& polys) {
        m_lo = polys.front().front();
        m_hi = m_lo;
        for (const auto& p : polys) {
            for (const auto& x : p) {
                m_lo = m_lo.cwiseMin(x);
                m_hi = m_hi.cwiseMax(x);
            }
        }
        const int side = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(polys.size()))));
        m_n = side;
        m_buckets.resize(static_cast<std::size_t>(side) * side);
        for (std::size_t i = 0; i < polys.size(); ++i) {
            Point2 lo = polys[i].front(), hi = lo;
            for (const auto& x : polys[i]) {
                lo = lo.cwiseMin(x);
                hi = hi.cwiseMax(x);
            }
            const auto [i0, j0] = bucket(lo);
            const auto [i1, j1] = bucket(hi);
            for (int j = j0; j <= j1; ++j) {
                for (int k = i0; k <= i1; ++k) {
                    m_buckets[j * m_n + k].push_back(static_cast<int>(i));
                }
            }
        }
    }

    const std::vector<int>& candidates(const Point2& x) const {
        const auto [i, j] = bucket(x);
        return m_buckets[j * m_n + i];
    }

    double diagonal() const { return (m_hi - m_lo).norm(); }

private:
    std::pair<int, int> bucket(const Point2& x) const {
        const Vector2 ext = (m_hi - m_lo).cwiseMax(Vector2::Constant(1e-300));
        auto idx = [this](double v) { return std::clamp(static_cast<int>(v * m_n), 0, m_n - 1); };
        return {idx((x.x() - m_lo.x()) / ext.x()), idx((x.y() - m_lo.y()) / ext.y())};
    }

    Point2 m_lo, m_hi;
    int m_n = 1;
    std::vector<std::vector<int>> m_buckets;
};

std::vector<std::vector<Point2>> cell_polygons(const PolygonalMesh& mesh) {
    std::vector<std::vector<Point2>> polys(mesh.num_cells());
    for (int c = 0; c < mesh.num_cells(); ++c) {
        polys[c] = mesh.cell_vertices(c);
    }
    return polys;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

} // namespace

DisplacementField::DisplacementField(const ScalarVemSpace& space_p, const Eigen::VectorXd& phi_p,
                                     const ScalarVemSpace& space_s, const Eigen::VectorXd& phi_s)
    : m_max_order(std::max(space_p.order(), space_s.order())) {
    const auto& mp = space_p.mesh();
    const auto& ms = space_s.mesh();
    for (int c = 0; c < mp.num_cells(); ++c) {
        m_basis_p.push_back(space_p.element(c).basis());
        m_coeffs_p.push_back(space_p.projection_coefficients(c, phi_p));
    }
    for (int c = 0; c < ms.num_cells(); ++c) {
        m_basis_s.push_back(space_s.element(c).basis());
        m_coeffs_s.push_back(space_s.projection_coefficients(c, phi_s));
    }

    auto add_piece = [this](int cp, int cs, std::vector<Point2> poly) {
        const auto g = polygon_geometry(poly);
        m_pieces.push_back({cp, cs, std::move(poly), g.centroid, g.area});
    };
    if (&mp == &ms || mp.same_as(ms)) {
        for (int c = 0; c < mp.num_cells(); ++c) {
            add_piece(c, c, mp.cell_vertices(c));
        }
    } else {
        const auto polys_p = cell_polygons(mp);
        const auto polys_s = cell_polygons(ms);
        for (const auto* polys : {&polys_p, &polys_s}) {
            for (const auto& p : *polys) {
                if (!is_convex(p)) {
                    throw UnsupportedConfigurationError(
                        "overlay of different P and S meshes requires convex cells");
                }
            }
        }
        const BucketGrid grid(polys_s);
        double covered = 0.0;
        for (int cp = 0; cp < mp.num_cells(); ++cp) {
            const auto gp = polygon_geometry(polys_p[cp]);
            std::vector<int> cand;
            for (const auto& x : polys_p[cp]) {
                const auto& c = grid.candidates(x);
                cand.insert(cand.end(), c.begin(), c.end());
            }
            const auto& cc = grid.candidates(gp.centroid);
            cand.insert(cand.end(), cc.begin(), cc.end());
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            double piece_area = 0.0;
            for (int cs : cand) {
                auto poly = clip(polys_p[cp], polys_s[cs]);
                if (poly.size() >= 3 && polygon_area(poly) > 1e-12 * gp.area) {
                    piece_area += polygon_area(poly);
                    add_piece(cp, cs, std::move(poly));
                }
            }
            if (std::abs(piece_area - gp.area) > 1e-9 * gp.area) {
                // candidate search by bucket may miss cells of a much coarser S mesh
                piece_area = 0.0;
                m_pieces.erase(std::remove_if(m_pieces.begin(), m_pieces.end(),
                                              [cp](const Piece& p) { return p.cell_p == cp; }),
                               m_pieces.end());
                for (int cs = 0; cs < ms.num_cells(); ++cs) {
                    auto poly = clip(polys_p[cp], polys_s[cs]);
                    if (poly.size() >= 3 && polygon_area(poly) > 1e-12 * gp.area) {
                        piece_area += polygon_area(poly);
                        add_piece(cp, cs, std::move(poly));
                    }
                }
            }
            covered += piece_area;
        }
        if (std::abs(covered - mp.area()) > 1e-9 * mp.area() || std::abs(covered - ms.area()) > 1e-9 * ms.area()) {
            throw UnsupportedConfigurationError("P and S meshes do not cover the same domain");
        }
    }

    std::vector<std::vector<Point2>> polys;
    polys.reserve(m_pieces.size());
    for (const auto& p : m_pieces) {
        polys.push_back(p.polygon);
    }
    m_lo = m_hi = polys.front().front();
    for (const auto& p : polys) {
        for (const auto& x : p) {
            m_lo = m_lo.cwiseMin(x);
            m_hi = m_hi.cwiseMax(x);
        }
    }
    m_nx = m_ny = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(polys.size()))));
    m_buckets.resize(static_cast<std::size_t>(m_nx) * m_ny);
    const Vector2 ext = (m_hi - m_lo).cwiseMax(Vector2::Constant(1e-300));
    auto idx = [](double v, int n) { return std::clamp(static_cast<int>(v * n), 0, n - 1); };
    for (std::size_t i = 0; i < polys.size(); ++i) {
        Point2 lo = polys[i].front(), hi = lo;
        for (const auto& x : polys[i]) {
            lo = lo.cwiseMin(x);
            hi = hi.cwiseMax(x);
        }
        const int i0 = idx((lo.x() - m_lo.x()) / ext.x(), m_nx), i1 = idx((hi.x() - m_lo.x()) / ext.x(), m_nx);
        const int j0 = idx((lo.y() - m_lo.y()) / ext.y(), m_ny), j1 = idx((hi.y() - m_lo.y()) / ext.y(), m_ny);
        for (int j = j0; j <= j1; ++j) {
            for (int k = i0; k <= i1; ++k) {
                m_buckets[j * m_nx + k].push_back(static_cast<int>(i));
            }
        }
    }
}

Vector2 DisplacementField::evaluate(int piece, const Point2& x) const {
    const auto& p = m_pieces[piece];
    const Vector2 grad_p = gradient_poly(m_basis_p[p.cell_p], m_coeffs_p[p.cell_p], x);
    const Vector2 grad_s = gradient_poly(m_basis_s[p.cell_s], m_coeffs_s[p.cell_s], x);
    return grad_p + curl_of_gradient(grad_s);
}

int DisplacementField::locate(const Point2& x) const {
    const Vector2 ext = (m_hi - m_lo).cwiseMax(Vector2::Constant(1e-300));
    auto idx = [](double v, int n) { return std::clamp(static_cast<int>(v * n), 0, n - 1); };
    const int i = idx((x.x() - m_lo.x()) / ext.x(), m_nx);
    const int j = idx((x.y() - m_lo.y()) / ext.y(), m_ny);
    const auto& cand = m_buckets[j * m_nx + i];
    for (int c : cand) {
        if (inside(m_pieces[c].polygon, x)) {
            return c;
        }
    }
    const double tol = 1e-10 * ext.norm();
    for (int c : cand) {
        if (boundary_distance(m_pieces[c].polygon, x) <= tol) {
            return c;
        }
    }
    throw Error("point (" + format_double(x.x()) + ", " + format_double(x.y()) + ") is outside the mesh");
}

Vector2 DisplacementField::evaluate(const Point2& x) const { return evaluate(locate(x), x); }

DisplacementField reconstruct_displacement(const ScalarVemSpace& space_p, const ScalarVemSpace& space_s,
                                           const PotentialSolution& solution) {
    return DisplacementField(space_p, solution.phi_p, space_s, solution.phi_s);
}

double l2_error_displacement(const DisplacementField& field, const VectorFunction& exact, int extra_degree) {
    const auto& pieces = field.pieces();
    std::vector<double> local(pieces.size(), 0.0);
    const int degree = 2 * field.max_order() + 2 + extra_degree;
    parallel_for(static_cast<int>(pieces.size()), [&](int i) {
        double s = 0.0;
        for (const auto& q : polygon_rule(pieces[i].polygon, pieces[i].centroid, degree)) {
            s += q.w * (exact(q.x) - field.evaluate(i, q.x)).squaredNorm();
        }
        local[i] = s;
    });
    double total = 0.0;
    for (double v : local) {
        total += v;
    }
    return std::sqrt(total);
}

double max_error_displacement(const DisplacementField& field, const VectorFunction& exact, int extra_degree) {
    const auto& pieces = field.pieces();
    std::vector<double> local(pieces.size(), 0.0);
    const int degree = 2 * field.max_order() + 2 + extra_degree;
    parallel_for(static_cast<int>(pieces.size()), [&](int i) {
        const auto& p = pieces[i];
        double m = (exact(p.centroid) - field.evaluate(i, p.centroid)).norm();
        for (const auto& x : p.polygon) {
            m = std::max(m, (exact(x) - field.evaluate(i, x)).norm());
        }
        for (const auto& q : polygon_rule(p.polygon, p.centroid, degree)) {
            m = std::max(m, (exact(q.x) - field.evaluate(i, q.x)).norm());
        }
        local[i] = m;
    });
    return local.empty() ? 0.0 : *std::max_element(local.begin(), local.end());
}

double dof_sup_error(const ScalarVemSpace& space_a, const Eigen::VectorXd& w_a, const ScalarVemSpace& space_b,
                     const Eigen::VectorXd& w_b) {
    const auto& da = space_a.dofs();
    const auto& db = space_b.dofs();
    if (w_a.size() != da.num_dofs() || w_b.size() != db.num_dofs()) {
        throw IncomparableSpacesError("DOF vectors do not match their spaces");
    }
    if (space_a.order() == space_b.order() &&
        (&space_a.mesh() == &space_b.mesh() || space_a.mesh().same_as(space_b.mesh()))) {
        double m = 0.0;
        for (int i = 0; i < da.num_dofs(); ++i) {
            if (da.kind(i) != DofKind::Moment) {
                m = std::max(m, std::abs(w_a[i] - w_b[i]));
            }
        }
        return m;
    }

    const auto& mb = space_b.mesh();
    const auto polys = cell_polygons(mb);
    const BucketGrid grid(polys);
    const double tol = 1e-10 * grid.diagonal();
    std::unordered_map<long long, std::vector<int>> points;
    auto key = [tol](const Point2& x) {
        const long long i = std::llround(x.x() / (100 * tol));
        const long long j = std::llround(x.y() / (100 * tol));
        return i * 1000003LL + j;
    };
    for (int i = 0; i < db.num_dofs(); ++i) {
        if (db.kind(i) != DofKind::Moment) {
            points[key(db.location(i))].push_back(i);
        }
    }
    const int kb = space_b.order();
    const auto nodes = gauss_lobatto(kb + 1).points;
    auto value_b = [&](const Point2& x) -> double {
        for (int di = -1; di <= 1; ++di) {
            for (int dj = -1; dj <= 1; ++dj) {
                const auto it = points.find(key(x + Point2(di, dj) * 100 * tol));
                if (it == points.end()) {
                    continue;
                }
                for (int i : it->second) {
                    if ((db.location(i) - x).norm() <= tol) {
                        return w_b[i];
                    }
                }
            }
        }
        for (int c : grid.candidates(x)) {
            const auto& cell = mb.cells()[c];
            for (std::size_t l = 0; l < cell.size(); ++l) {
                const int e = mb.cell_edge(c, static_cast<int>(l));
                const auto& edge = mb.edges()[e];
                double t;
                if (distance_to_segment(x, mb.vertices()[edge.v0], mb.vertices()[edge.v1], &t) > tol) {
                    continue;
                }
                std::vector<double> vals;
                vals.push_back(w_b[db.vertex_dof(edge.v0)]);
                for (int d : db.edge_dofs(e)) {
                    vals.push_back(w_b[d]);
                }
                vals.push_back(w_b[db.vertex_dof(edge.v1)]);
                double v = 0.0;
                for (int i = 0; i <= kb; ++i) {
                    double li = 1.0;
                    for (int j = 0; j <= kb; ++j) {
                        if (j != i) {
                            li *= (t - nodes[j]) / (nodes[i] - nodes[j]);
                        }
                    }
                    v += li * vals[i];
                }
                return v;
            }
        }
        for (int c : grid.candidates(x)) {
            if (inside(polys[c], x)) {
                return evaluate_poly(space_b.element(c).basis(), space_b.projection_coefficients(c, w_b), x);
            }
        }
        throw IncomparableSpacesError("DOF location (" + format_double(x.x()) + ", " + format_double(x.y()) +
                                      ") is outside the other mesh");
    };

    double m = 0.0;
    for (int i = 0; i < da.num_dofs(); ++i) {
        if (da.kind(i) != DofKind::Moment) {
            m = std::max(m, std::abs(w_a[i] - value_b(da.location(i))));
        }
    }
    return m;
}

void ConvergenceReport::compute_eoc() {
    for (std::size_t r = 0; r < rows.size(); ++r) {
        rows[r].eoc.reset();
        if (r == 0) {
            continue;
        }
        const double h0 = std::max(rows[r - 1].h_p, rows[r - 1].h_s);
        const double h1 = std::max(rows[r].h_p, rows[r].h_s);
        const double e0 = rows[r - 1].l2_error;
        const double e1 = rows[r].l2_error;
        if (h0 != h1 && e0 > 0.0 && e1 > 0.0) {
            rows[r].eoc = std::log(e0 / e1) / std::log(h0 / h1);
        }
    }
}

void ConvergenceReport::write_csv(std::ostream& out) const {
    out << "level,h_p,h_s,k_p,k_s,dof_total,l2_error,eoc,max_error,relative_residual,condition_estimate\n";
    for (const auto& r : rows) {
        out << r.level << ',' << format_double(r.h_p) << ',' << format_double(r.h_s) << ',' << r.k_p << ','
            << r.k_s << ',' << r.dof_total << ',' << format_double(r.l2_error) << ','
            << (r.eoc ? format_double(*r.eoc) : "") << ',' << format_double(r.max_error) << ','
            << format_double(r.diagnostics.relative_residual) << ','
            << format_double(r.diagnostics.condition_estimate) << '\n';
    }
}

void ConvergenceReport::write_json(std::ostream& out) const {
    nlohmann::ordered_json j;
    j["scenario"] = scenario;
    j["metadata"] = metadata;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json row;
        row["level"] = r.level;
        row["h_p"] = r.h_p;
        row["h_s"] = r.h_s;
        row["k_p"] = r.k_p;
        row["k_s"] = r.k_s;
        row["dof_total"] = r.dof_total;
        row["l2_error"] = r.l2_error;
        row["eoc"] = r.eoc ? nlohmann::ordered_json(*r.eoc) : nlohmann::ordered_json(nullptr);
        row["max_error"] = r.max_error;
        row["relative_residual"] = r.diagnostics.relative_residual;
        row["condition_estimate"] = r.diagnostics.condition_estimate;
        row["condition_warning"] = r.diagnostics.condition_warning;
        j["rows"].push_back(row);
    }
    out << j.dump(2) << '\n';
}

LevelResult solve_level(const MeshPair& meshes, int k_p, int k_s, const ElasticProblem& problem,
                        const AssemblyOptions& options) {
    LevelResult r;
    r.space_p = std::make_shared<const ScalarVemSpace>(meshes.p, k_p);
    const bool same_mesh = meshes.p == meshes.s || meshes.p->same_as(*meshes.s);
    if (same_mesh && k_p == k_s) {
        r.space_s = r.space_p;
    } else {
        r.space_s = std::make_shared<const ScalarVemSpace>(same_mesh ? meshes.p : meshes.s, k_s);
    }
    r.system = assemble_global(*r.space_p, *r.space_s, problem, options);
    r.solution = solve_block_system(r.system);
    return r;
}

ConvergenceReport run_convergence_study(const std::string& scenario, const ElasticProblem& problem,
                                        const std::vector<MeshPair>& levels, int k_p, int k_s,
                                        const AssemblyOptions& options) {
    if (!problem.exact_u) {
        throw UnsupportedConfigurationError("convergence study needs an exact displacement");
    }
    ConvergenceReport report;
    report.scenario = scenario;
    for (std::size_t l = 0; l < levels.size(); ++l) {
        try {
            const auto r = solve_level(levels[l], k_p, k_s, problem, options);
            const auto field = reconstruct_displacement(*r.space_p, *r.space_s, r.solution);
            ConvergenceRow row;
            row.level = static_cast<int>(l);
            row.h_p = levels[l].p->mesh_size();
            row.h_s = levels[l].s->mesh_size();
            row.k_p = k_p;
            row.k_s = k_s;
            row.dof_total = r.system.size();
            row.l2_error = l2_error_displacement(field, problem.exact_u);
            row.max_error = max_error_displacement(field, problem.exact_u);
            row.diagnostics = r.solution.diagnostics;
            spdlog::info("level {}: h = {:.4g}, dofs = {}, L2 error = {:.6e}", l, std::max(row.h_p, row.h_s),
                         row.dof_total, row.l2_error);
            report.rows.push_back(row);
        } catch (const SolverError& e) {
            throw SolverError("level " + std::to_string(l) + ": " + e.what(), e.condition_estimate());
        } catch (const UnsupportedConfigurationError& e) {
            throw UnsupportedConfigurationError("level " + std::to_string(l) + ": " + e.what());
        } catch (const Error& e) {
            throw Error("level " + std::to_string(l) + ": " + e.what());
        }
    }
    report.compute_eoc();
    return report;
}

} // namespace elastovem
