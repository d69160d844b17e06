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
#include "config.hpp"

#include <elastovem/scenarios.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace elastovem::cli {

namespace {

using nlohmann::json;

template <class E>
E parse_enum(const json& j, const std::string& path, const std::map<std::string, E>& names) {
    if (!j.is_string()) {
        throw ConfigError(path, "expected a string");
    }
    const auto it = names.find(j.get<std::string>());
    if (it == names.end()) {
        std::string options;
        for (const auto& [k, v] : names) {
            options += (options.empty() ? "" : ", ") + k;
        }
        throw ConfigError(path, "unknown value '" + j.get<std::string>() + "' (expected one of " + options + ")");
    }
    return it->second;
}

template <class E>
std::string enum_name(E value, const std::map<std::string, E>& names) {
    for (const auto& [k, v] : names) {
        if (v == value) {
            return k;
        }
    }
    return {};
}

const std::map<std::string, DomainKind> domain_names = {
    {"rectangle", DomainKind::Rectangle}, {"lshape", DomainKind::LShape}, {"mesh", DomainKind::Mesh}};
const std::map<std::string, SourceKind> source_names = {
    {"scenario", SourceKind::Scenario}, {"potentials", SourceKind::Potentials}, {"vector", SourceKind::Vector}};
const std::map<std::string, LoadProjection> projection_names = {{"full", LoadProjection::Full},
                                                                {"reduced", LoadProjection::Reduced}};
const std::map<std::string, BoundaryLoadMode> boundary_names = {{"quadrature", BoundaryLoadMode::Quadrature},
                                                                {"interpolated", BoundaryLoadMode::Interpolated}};

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object()) {
        throw ConfigError(path, "expected an object");
    }
    for (const auto& [k, v] : j.items()) {
        if (!allowed.count(k)) {
            throw ConfigError(path.empty() ? k : path + "." + k, "unknown field");
        }
    }
}

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw ConfigError(path, "expected a number");
    }
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) {
        throw ConfigError(path, "expected an integer");
    }
    return j.get<int>();
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string() || j.get<std::string>().empty()) {
        throw ConfigError(path, "expected a non-empty string");
    }
    return j.get<std::string>();
}

LevelSpec parse_level(const json& j, const std::string& path, DomainKind domain) {
    LevelSpec l;
    if (domain == DomainKind::Mesh) {
        if (j.is_string()) {
            l.mesh_p = l.mesh_s = get_string(j, path);
            return l;
        }
        check_keys(j, path, {"mesh_p", "mesh_s"});
        if (!j.contains("mesh_p")) {
            throw ConfigError(join(path, "mesh_p"), "required for mesh domains");
        }
        l.mesh_p = get_string(j["mesh_p"], join(path, "mesh_p"));
        l.mesh_s = j.contains("mesh_s") ? get_string(j["mesh_s"], join(path, "mesh_s")) : l.mesh_p;
        return l;
    }
    if (j.is_number_integer()) {
        l.n_p = l.n_s = j.get<int>();
    } else {
        check_keys(j, path, {"n_p", "n_s"});
        if (!j.contains("n_p")) {
            throw ConfigError(join(path, "n_p"), "required");
        }
        l.n_p = get_int(j["n_p"], join(path, "n_p"));
        l.n_s = j.contains("n_s") ? get_int(j["n_s"], join(path, "n_s")) : l.n_p;
    }
    if (l.n_p < 1 || l.n_s < 1) {
        throw ConfigError(path, "cells per side must be positive");
    }
    return l;
}

json level_to_json(const LevelSpec& l, DomainKind domain) {
    if (domain == DomainKind::Mesh) {
        return {{"mesh_p", l.mesh_p}, {"mesh_s", l.mesh_s}};
    }
    return {{"n_p", l.n_p}, {"n_s", l.n_s}};
}

} // namespace

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) { return to_json(a) == to_json(b); }

ScenarioConfig parse_config(const json& j) {
    check_keys(j, "", {"scenario", "source", "material", "orders", "domain", "levels", "reference", "load_projection",
                       "boundary_load", "output"});
    ScenarioConfig c;
    if (!j.contains("scenario")) {
        throw ConfigError("scenario", "required");
    }
    c.scenario = get_string(j["scenario"], "scenario");
    ScenarioInfo info;
    try {
        info = find_scenario(c.scenario);
    } catch (const UnsupportedConfigurationError& e) {
        throw ConfigError("scenario", e.what());
    }
    if (j.contains("source")) {
        c.source = parse_enum(j["source"], "source", source_names);
    }
    const auto probe = make_scenario_problem(c.scenario);
    if (c.source == SourceKind::Vector && !probe.vector_source) {
        throw ConfigError("source", "scenario '" + c.scenario + "' defines no vector source");
    }
    if (c.source == SourceKind::Potentials && probe.vector_source) {
        throw ConfigError("source", "scenario '" + c.scenario + "' is defined by a vector source only");
    }

    if (j.contains("material")) {
        const auto& m = j["material"];
        check_keys(m, "material", {"lambda", "mu", "rho", "kappa"});
        MaterialParams p = info.material;
        if (m.contains("lambda")) p.lambda = get_number(m["lambda"], "material.lambda");
        if (m.contains("mu")) p.mu = get_number(m["mu"], "material.mu");
        if (m.contains("rho")) p.rho = get_number(m["rho"], "material.rho");
        if (m.contains("kappa")) p.kappa = get_number(m["kappa"], "material.kappa");
        try {
            p.validate();
        } catch (const UnsupportedConfigurationError& e) {
            throw ConfigError("material", e.what());
        }
        c.material = p;
    }

    if (j.contains("orders")) {
        const auto& o = j["orders"];
        check_keys(o, "orders", {"k_p", "k_s"});
        if (o.contains("k_p")) c.k_p = get_int(o["k_p"], "orders.k_p");
        if (o.contains("k_s")) c.k_s = get_int(o["k_s"], "orders.k_s");
    }
    for (const auto& [name, k] : {std::pair{"orders.k_p", c.k_p}, std::pair{"orders.k_s", c.k_s}}) {
        if (k < 1 || k > 5) {
            throw ConfigError(name, "must be in 1..5");
        }
    }

    c.domain = info.domain == DomainShape::LShape ? DomainKind::LShape : DomainKind::Rectangle;
    if (j.contains("domain")) {
        const auto& d = j["domain"];
        check_keys(d, "domain", {"type", "bounds"});
        if (!d.contains("type")) {
            throw ConfigError("domain.type", "required");
        }
        c.domain = parse_enum(d["type"], "domain.type", domain_names);
        if (d.contains("bounds")) {
            if (c.domain != DomainKind::Rectangle) {
                throw ConfigError("domain.bounds", "only valid for rectangle domains");
            }
            const auto& b = d["bounds"];
            if (!b.is_array() || b.size() != 4) {
                throw ConfigError("domain.bounds", "expected [x0, y0, x1, y1]");
            }
            c.rectangle = {get_number(b[0], "domain.bounds[0]"), get_number(b[1], "domain.bounds[1]"),
                           get_number(b[2], "domain.bounds[2]"), get_number(b[3], "domain.bounds[3]")};
            if (!(c.rectangle.x1 > c.rectangle.x0) || !(c.rectangle.y1 > c.rectangle.y0)) {
                throw ConfigError("domain.bounds", "empty rectangle");
            }
        }
    }

    if (!j.contains("levels")) {
        throw ConfigError("levels", "required");
    }
    const auto& levels = j["levels"];
    if (!levels.is_array() || levels.empty()) {
        throw ConfigError("levels", "expected a non-empty array");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        c.levels.push_back(parse_level(levels[i], "levels[" + std::to_string(i) + "]", c.domain));
    }
    if (j.contains("reference") && !j["reference"].is_null()) {
        c.reference = parse_level(j["reference"], "reference", c.domain);
    }

    if (j.contains("load_projection")) {
        c.load_projection = parse_enum(j["load_projection"], "load_projection", projection_names);
    }
    if (j.contains("boundary_load")) {
        c.boundary_load = parse_enum(j["boundary_load"], "boundary_load", boundary_names);
    }
    if (j.contains("output")) {
        const auto& o = j["output"];
        check_keys(o, "output", {"directory", "grid_samples", "export_matrices"});
        if (o.contains("directory")) c.output_directory = get_string(o["directory"], "output.directory");
        if (o.contains("grid_samples")) c.grid_samples = get_int(o["grid_samples"], "output.grid_samples");
        if (o.contains("export_matrices")) {
            if (!o["export_matrices"].is_boolean()) {
                throw ConfigError("output.export_matrices", "expected a boolean");
            }
            c.export_matrices = o["export_matrices"].get<bool>();
        }
        if (c.grid_samples < 2) {
            throw ConfigError("output.grid_samples", "must be at least 2");
        }
    }
    return c;
}

json to_json(const ScenarioConfig& c) {
    json j;
    j["scenario"] = c.scenario;
    j["source"] = enum_name(c.source, source_names);
    if (c.material) {
        j["material"] = {{"lambda", c.material->lambda},
                         {"mu", c.material->mu},
                         {"rho", c.material->rho},
                         {"kappa", c.material->kappa}};
    }
    j["orders"] = {{"k_p", c.k_p}, {"k_s", c.k_s}};
    j["domain"] = {{"type", enum_name(c.domain, domain_names)}};
    if (c.domain == DomainKind::Rectangle) {
        j["domain"]["bounds"] = {c.rectangle.x0, c.rectangle.y0, c.rectangle.x1, c.rectangle.y1};
    }
    j["levels"] = json::array();
    for (const auto& l : c.levels) {
        j["levels"].push_back(level_to_json(l, c.domain));
    }
    if (c.reference) {
        j["reference"] = level_to_json(*c.reference, c.domain);
    }
    j["load_projection"] = enum_name(c.load_projection, projection_names);
    j["boundary_load"] = enum_name(c.boundary_load, boundary_names);
    j["output"] = {{"directory", c.output_directory},
                   {"grid_samples", c.grid_samples},
                   {"export_matrices", c.export_matrices}};
    return j;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("", "cannot open config file '" + path.string() + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("", "'" + path.string() + "' is not valid JSON: " + e.what());
    }
    auto c = parse_config(j);
    const auto base = path.parent_path();
    auto resolve = [&base](std::string& p) {
        if (!p.empty() && std::filesystem::path(p).is_relative()) {
            p = (base / p).lexically_normal().string();
        }
    };
    for (auto& l : c.levels) {
        resolve(l.mesh_p);
        resolve(l.mesh_s);
    }
    if (c.reference) {
        resolve(c.reference->mesh_p);
        resolve(c.reference->mesh_s);
    }
    return c;
}

} // namespace elastovem::cli
