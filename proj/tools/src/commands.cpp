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
#include "commands.hpp"

#include <elastovem/scenarios.hpp>

#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>

namespace elastovem::cli {

namespace {

using nlohmann::json;

std::string fmt_g(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.16g", v);
    return buf;
}

const char* kind_name(DofKind k) {
    switch (k) {
    case DofKind::Vertex:
        return "vertex";
    case DofKind::EdgePoint:
        return "edge";
    default:
        return "moment";
    }
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw ConfigError("output.directory", "cannot write '" + path.string() + "'");
    }
    return out;
}

std::filesystem::path output_dir(const ScenarioConfig& config) {
    const std::filesystem::path dir(config.output_directory);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw ConfigError("output.directory", "cannot create '" + dir.string() + "': " + ec.message());
    }
    return dir;
}

void write_potential(const ScalarVemSpace& space, const Eigen::VectorXd& phi, const std::filesystem::path& path) {
    auto out = open_output(path);
    out << "dof,kind,x,y,value\n";
    for (int d = 0; d < space.num_dofs(); ++d) {
        const auto& x = space.dofs().location(d);
        out << d << ',' << kind_name(space.dofs().kind(d)) << ',' << fmt_g(x.x()) << ',' << fmt_g(x.y()) << ','
            << fmt_g(phi(d)) << '\n';
    }
}

void write_grid(const DisplacementField& field, const PolygonalMesh& mesh, int samples, const VectorFunction& exact,
                const std::filesystem::path& path) {
    Point2 lo = mesh.vertices().front();
    Point2 hi = lo;
    for (const auto& v : mesh.vertices()) {
        lo = lo.cwiseMin(v);
        hi = hi.cwiseMax(v);
    }
    auto out = open_output(path);
    out << "x,y,u1,u2" << (exact ? ",exact_u1,exact_u2" : "") << '\n';
    for (int j = 0; j < samples; ++j) {
        for (int i = 0; i < samples; ++i) {
            const Point2 x(lo.x() + (hi.x() - lo.x()) * i / (samples - 1),
                           lo.y() + (hi.y() - lo.y()) * j / (samples - 1));
            Vector2 u;
            try {
                u = field.evaluate(x);
            } catch (const Error&) {
                continue;
            }
            out << fmt_g(x.x()) << ',' << fmt_g(x.y()) << ',' << fmt_g(u.x()) << ',' << fmt_g(u.y());
            if (exact) {
                const Vector2 e = exact(x);
                out << ',' << fmt_g(e.x()) << ',' << fmt_g(e.y());
            }
            out << '\n';
        }
    }
}

json material_json(const MaterialParams& m) {
    return {{"lambda", m.lambda}, {"mu", m.mu},           {"rho", m.rho},
            {"kappa", m.kappa},   {"kappa_p", m.kappa_p()}, {"kappa_s", m.kappa_s()}};
}

json diagnostics_json(const SolverDiagnostics& d) {
    return {{"relative_residual", d.relative_residual},
            {"condition_estimate", d.condition_estimate},
            {"condition_warning", d.condition_warning}};
}

} // namespace

ElasticProblem build_problem(const ScenarioConfig& config) {
    auto p = make_scenario_problem(config.scenario, config.material);
    p.material.validate();
    switch (config.source) {
    case SourceKind::Vector:
        if (!p.vector_source) {
            throw ConfigError("source", "scenario '" + config.scenario + "' defines no vector source");
        }
        break;
    case SourceKind::Potentials:
        if (p.vector_source) {
            throw ConfigError("source", "scenario '" + config.scenario + "' is defined by a vector source only");
        }
        break;
    case SourceKind::Scenario:
        break;
    }
    return p;
}

void check_mesh_files(const ScenarioConfig& config) {
    if (config.domain != DomainKind::Mesh) {
        return;
    }
    auto check = [](const std::string& file, const std::string& field) {
        if (!std::filesystem::exists(file)) {
            throw ConfigError(field, "mesh file '" + file + "' does not exist");
        }
    };
    for (std::size_t i = 0; i < config.levels.size(); ++i) {
        const std::string base = "levels[" + std::to_string(i) + "]";
        check(config.levels[i].mesh_p, base + ".mesh_p");
        check(config.levels[i].mesh_s, base + ".mesh_s");
    }
    if (config.reference) {
        check(config.reference->mesh_p, "reference.mesh_p");
        check(config.reference->mesh_s, "reference.mesh_s");
    }
}

MeshPair build_level_meshes(const ScenarioConfig& config, const LevelSpec& level) {
    auto make = [&](int n, const std::string& file) -> std::shared_ptr<const PolygonalMesh> {
        switch (config.domain) {
        case DomainKind::Rectangle:
            return std::make_shared<const PolygonalMesh>(build_structured_quad_mesh(config.rectangle, n, n));
        case DomainKind::LShape:
            return std::make_shared<const PolygonalMesh>(build_lshape_quad_mesh(n));
        default:
            return std::make_shared<const PolygonalMesh>(load_mesh(file, mesh_format_from_path(file)));
        }
    };
    MeshPair m;
    m.p = make(level.n_p, level.mesh_p);
    const bool same = config.domain == DomainKind::Mesh ? level.mesh_s == level.mesh_p : level.n_s == level.n_p;
    m.s = same ? m.p : make(level.n_s, level.mesh_s);
    return m;
}

AssemblyOptions assembly_options(const ScenarioConfig& config) {
    AssemblyOptions o;
    o.load_projection = config.load_projection;
    o.boundary_load = config.boundary_load;
    return o;
}

int cmd_solve(const ScenarioConfig& config, std::ostream& out) {
    check_mesh_files(config);
    const auto problem = build_problem(config);
    const auto dir = output_dir(config);
    const auto& m = problem.material;
    spdlog::info("scenario {}: kappa_P = {:.4f}, kappa_S = {:.4f}", config.scenario, m.kappa_p(), m.kappa_s());

    const auto t0 = std::chrono::steady_clock::now();
    const auto meshes = build_level_meshes(config, config.levels.back());
    const auto r = solve_level(meshes, config.k_p, config.k_s, problem, assembly_options(config));
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    write_potential(*r.space_p, r.solution.phi_p, dir / "phi_p.csv");
    write_potential(*r.space_s, r.solution.phi_s, dir / "phi_s.csv");
    const auto field = reconstruct_displacement(*r.space_p, *r.space_s, r.solution);
    write_grid(field, *meshes.p, config.grid_samples, problem.exact_u, dir / "displacement_grid.csv");
    if (config.export_matrices) {
        export_blocks(r.system, dir / "matrices");
    }

    json d;
    d["scenario"] = config.scenario;
    d["config"] = to_json(config);
    d["material"] = material_json(m);
    d["k_p"] = config.k_p;
    d["k_s"] = config.k_s;
    d["h_p"] = meshes.p->mesh_size();
    d["h_s"] = meshes.s->mesh_size();
    d["dofs_p"] = r.space_p->num_dofs();
    d["dofs_s"] = r.space_s->num_dofs();
    d["dof_total"] = r.system.size();
    d["solver"] = diagnostics_json(r.solution.diagnostics);
    d["seconds"] = seconds;
    if (problem.exact_u) {
        d["l2_error"] = l2_error_displacement(field, problem.exact_u);
        d["max_error"] = max_error_displacement(field, problem.exact_u);
    }
    if (config.reference) {
        const auto ref_meshes = build_level_meshes(config, *config.reference);
        const auto ref = solve_level(ref_meshes, config.k_p, config.k_s, problem, assembly_options(config));
        d["reference"] = {{"h_p", ref_meshes.p->mesh_size()},
                          {"h_s", ref_meshes.s->mesh_size()},
                          {"dof_total", ref.system.size()},
                          {"dof_sup_error_p", dof_sup_error(*r.space_p, r.solution.phi_p, *ref.space_p, ref.solution.phi_p)},
                          {"dof_sup_error_s", dof_sup_error(*r.space_s, r.solution.phi_s, *ref.space_s, ref.solution.phi_s)}};
    }
    auto f = open_output(dir / "diagnostics.json");
    f << d.dump(2) << '\n';
    out << d.dump(2) << '\n';
    return 0;
}

int cmd_convergence(const ScenarioConfig& config, std::ostream& out) {
    check_mesh_files(config);
    const auto problem = build_problem(config);
    if (!problem.exact_u) {
        throw ConfigError("scenario", "scenario '" + config.scenario + "' has no exact solution to measure errors against");
    }
    const auto dir = output_dir(config);
    std::vector<MeshPair> levels;
    for (const auto& l : config.levels) {
        levels.push_back(build_level_meshes(config, l));
    }
    auto report = run_convergence_study(config.scenario, problem, levels, config.k_p, config.k_s,
                                        assembly_options(config));
    const auto& m = problem.material;
    report.metadata["lambda"] = fmt_g(m.lambda);
    report.metadata["mu"] = fmt_g(m.mu);
    report.metadata["rho"] = fmt_g(m.rho);
    report.metadata["kappa"] = fmt_g(m.kappa);
    report.metadata["load_projection"] = config.load_projection == LoadProjection::Full ? "full" : "reduced";
    report.metadata["boundary_load"] =
        config.boundary_load == BoundaryLoadMode::Quadrature ? "quadrature" : "interpolated";
    {
        auto f = open_output(dir / "convergence.csv");
        report.write_csv(f);
    }
    {
        auto f = open_output(dir / "convergence.json");
        report.write_json(f);
    }
    report.write_csv(out);
    return 0;
}

int cmd_patch_test(const ScenarioConfig& config, std::ostream& out) {
    if (config.scenario != "patch-test") {
        throw ConfigError("scenario", "the patch test needs the polynomial scenario 'patch-test'");
    }
    check_mesh_files(config);
    const auto problem = build_problem(config);
    const auto dir = output_dir(config);
    bool pass = true;
    json j;
    j["tolerance"] = kPatchTolerance;
    j["k_p"] = config.k_p;
    j["k_s"] = config.k_s;
    j["levels"] = json::array();
    for (std::size_t i = 0; i < config.levels.size(); ++i) {
        const auto meshes = build_level_meshes(config, config.levels[i]);
        const auto t0 = std::chrono::steady_clock::now();
        const auto r = solve_level(meshes, config.k_p, config.k_s, problem, assembly_options(config));
        const auto field = reconstruct_displacement(*r.space_p, *r.space_s, r.solution);
        const double err = l2_error_displacement(field, problem.exact_u);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool ok = err <= kPatchTolerance;
        pass = pass && ok;
        out << "level " << i << ": h = " << fmt_g(std::max(meshes.p->mesh_size(), meshes.s->mesh_size()))
            << ", L2 error = " << fmt_g(err) << (ok ? "  PASS" : "  FAIL") << '\n';
        j["levels"].push_back({{"level", i},
                               {"h_p", meshes.p->mesh_size()},
                               {"h_s", meshes.s->mesh_size()},
                               {"l2_error", err},
                               {"pass", ok},
                               {"seconds", seconds}});
    }
    j["pass"] = pass;
    auto f = open_output(dir / "patch_test.json");
    f << j.dump(2) << '\n';
    out << (pass ? "patch test PASSED" : "patch test FAILED") << '\n';
    return pass ? 0 : 1;
}

} // namespace elastovem::cli
