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
#include <commands.hpp>
#include <config.hpp>

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using namespace elastovem;
using namespace elastovem::cli;
using nlohmann::json;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "elastovem_cli_tests" / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string error_of(const json& j) {
    try {
        parse_config(j);
    } catch (const ConfigError& e) {
        return e.path();
    }
    return "<none>";
}

int run_cli(const std::string& args) {
    const std::string cmd = std::string(ELASTOVEM_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

json patch_config(const std::filesystem::path& out) {
    return {{"scenario", "patch-test"},
            {"orders", {{"k_p", 1}, {"k_s", 3}}},
            {"levels", {2, 4}},
            {"output", {{"directory", out.string()}, {"grid_samples", 5}}}};
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("config round trip") {
    const std::vector<json> configs = {
        patch_config("out"),
        {{"scenario", "sandstone"},
         {"material", {{"kappa", 1.0e4}}},
         {"orders", {{"k_p", 2}, {"k_s", 5}}},
         {"domain", {{"type", "rectangle"}, {"bounds", {0.0, 0.0, 2.0, 1.0}}}},
         {"levels", {json{{"n_p", 4}, {"n_s", 8}}, 3}},
         {"reference", 16},
         {"load_projection", "reduced"},
         {"boundary_load", "interpolated"},
         {"output", {{"directory", "x"}, {"grid_samples", 11}, {"export_matrices", true}}}},
        {{"scenario", "gaussian-source"}, {"source", "vector"}, {"levels", {22}}},
        {{"scenario", "smooth-potentials"},
         {"domain", {{"type", "mesh"}}},
         {"levels", {"a.json", json{{"mesh_p", "b.off"}, {"mesh_s", "c.json"}}}}},
    };
    for (const auto& j : configs) {
        const auto c = parse_config(j);
        const auto back = parse_config(to_json(c));
        CHECK(back == c);
        CHECK(to_json(back) == to_json(c));
    }
    const auto c = parse_config(configs[1]);
    CHECK(c.material->kappa == 1.0e4);
    CHECK(c.material->mu == doctest::Approx(5.168e8));
    CHECK(c.levels[1].n_s == 3);
    CHECK(parse_config(configs[2]).domain == DomainKind::LShape);
    CHECK(parse_config(configs[3]).levels[0].mesh_s == "a.json");
}

TEST_CASE("config errors name the field") {
    const json base = patch_config("out");
    auto with = [&](const std::string& key, const json& v) {
        json j = base;
        j[key] = v;
        return j;
    };
    json no_levels = base;
    no_levels.erase("levels");
    json no_scenario = base;
    no_scenario.erase("scenario");
    CHECK(error_of(base) == "<none>");
    CHECK(error_of(no_scenario) == "scenario");
    CHECK(error_of(with("scenario", "nope")) == "scenario");
    CHECK(error_of(no_levels) == "levels");
    CHECK(error_of(with("levels", json::array())) == "levels");
    CHECK(error_of(with("levels", {2, 0})) == "levels[1]");
    CHECK(error_of(with("levels", {2, "x"})) == "levels[1]");
    CHECK(error_of(with("orders", {{"k_p", 6}})) == "orders.k_p");
    CHECK(error_of(with("orders", {{"k_s", 0}})) == "orders.k_s");
    CHECK(error_of(with("orders", {{"k_q", 1}})) == "orders.k_q");
    CHECK(error_of(with("material", {{"mu", -1.0}})) == "material");
    CHECK(error_of(with("material", {{"mu", "soft"}})) == "material.mu");
    CHECK(error_of(with("source", "vector")) == "source");
    CHECK(error_of(with("load_projection", "half")) == "load_projection");
    CHECK(error_of(with("domain", {{"type", "disk"}})) == "domain.type");
    CHECK(error_of(with("domain", {{"type", "lshape"}, {"bounds", {0, 0, 1, 1}}})) == "domain.bounds");
    CHECK(error_of(with("output", {{"grid_samples", 1}})) == "output.grid_samples");
    CHECK(error_of(with("extra", 1)) == "extra");
    json vec = base;
    vec["scenario"] = "gaussian-source";
    vec["source"] = "potentials";
    CHECK(error_of(vec) == "source");
}

TEST_CASE("missing mesh file names the path") {
    json j = {{"scenario", "patch-test"}, {"domain", {{"type", "mesh"}}}, {"levels", {"/no/such/mesh.json"}}};
    const auto c = parse_config(j);
    try {
        check_mesh_files(c);
        FAIL("expected a ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.path() == "levels[0].mesh_p");
        CHECK(std::string(e.what()).find("/no/such/mesh.json") != std::string::npos);
    }
}

TEST_CASE("relative mesh paths resolve against the config file") {
    const auto dir = scratch("relative");
    std::filesystem::copy_file(std::string(ELASTOVEM_TEST_DATA_DIR) + "/voronoi_16.json", dir / "m.json");
    std::ofstream(dir / "cfg.json") << json{{"scenario", "patch-test"}, {"domain", {{"type", "mesh"}}}, {"levels", {"m.json"}}}.dump();
    const auto c = load_config(dir / "cfg.json");
    CHECK(std::filesystem::path(c.levels[0].mesh_p) == (dir / "m.json").lexically_normal());
    CHECK_NOTHROW(check_mesh_files(c));
}

TEST_CASE("patch test command") {
    const auto dir = scratch("patch");
    std::ostringstream out;
    auto c = parse_config(patch_config(dir));
    CHECK(cmd_patch_test(c, out) == 0);
    CHECK(out.str().find("PASSED") != std::string::npos);
    c.k_s = 2;
    CHECK(cmd_patch_test(c, out) == 1);
    c.k_p = 3;
    c.k_s = 3;
    CHECK(cmd_patch_test(c, out) == 0);
    const auto j = json::parse(read_file(dir / "patch_test.json"));
    CHECK(j["pass"] == true);
    for (const auto& l : j["levels"]) {
        CHECK(l["l2_error"].get<double>() < 1e-11);
    }
    c.scenario = "smooth-potentials";
    CHECK_THROWS_AS(cmd_patch_test(c, out), ConfigError);
}

TEST_CASE("solve command outputs") {
    const auto dir = scratch("solve");
    std::ostringstream out;
    auto c = parse_config(patch_config(dir));
    CHECK(cmd_solve(c, out) == 0);
    for (const char* f : {"phi_p.csv", "phi_s.csv", "displacement_grid.csv", "diagnostics.json"}) {
        CHECK(std::filesystem::exists(dir / f));
    }
    const auto d = json::parse(read_file(dir / "diagnostics.json"));
    CHECK(d["dof_total"] == 25 + 153);
    CHECK(d["l2_error"].get<double>() < 1e-9);
    const std::string grid = read_file(dir / "displacement_grid.csv");
    CHECK(grid.rfind("x,y,u1,u2,exact_u1,exact_u2\n", 0) == 0);
    CHECK(std::count(grid.begin(), grid.end(), '\n') == 26);

    json s = {{"scenario", "sandstone"}, {"orders", {{"k_p", 1}, {"k_s", 1}}}, {"levels", {4}},
              {"output", {{"directory", dir.string()}, {"grid_samples", 3}}}};
    std::ostringstream sout;
    CHECK(cmd_solve(parse_config(s), sout) == 0);
    const auto sd = json::parse(read_file(dir / "diagnostics.json"));
    CHECK(std::abs(sd["material"]["kappa_p"].get<double>() - 7.144) < 1e-3);
    CHECK_FALSE(sd.contains("l2_error"));
}

TEST_CASE("convergence CSV is byte-identical across runs") {
    const auto a = scratch("conv_a");
    const auto b = scratch("conv_b");
    json j = {{"scenario", "smooth-potentials"}, {"orders", {{"k_p", 2}, {"k_s", 2}}}, {"levels", {2, 4, 8}}};
    j["output"] = {{"directory", a.string()}};
    std::ostringstream oa, ob;
    CHECK(cmd_convergence(parse_config(j), oa) == 0);
    j["output"] = {{"directory", b.string()}};
    CHECK(cmd_convergence(parse_config(j), ob) == 0);
    CHECK(read_file(a / "convergence.csv") == read_file(b / "convergence.csv"));
    CHECK(oa.str() == ob.str());

    json single = j;
    single["levels"] = {4};
    std::ostringstream os;
    CHECK(cmd_convergence(parse_config(single), os) == 0);
    CHECK(read_file(b / "convergence.csv").find(",,") != std::string::npos);

    json sand = {{"scenario", "sandstone"}, {"levels", {2}}, {"output", {{"directory", b.string()}}}};
    CHECK_THROWS_AS(cmd_convergence(parse_config(sand), os), ConfigError);
}

TEST_CASE("exit codes") {
    const auto dir = scratch("exit");
    auto write = [&](const std::string& name, const json& j) {
        std::ofstream(dir / name) << j.dump();
        return (dir / name).string();
    };
    CHECK(run_cli("patch-test -c " + write("ok.json", patch_config(dir))) == 0);
    json fail = patch_config(dir);
    fail["orders"]["k_s"] = 2;
    CHECK(run_cli("patch-test -c " + write("fail.json", fail)) == 1);
    json bad = patch_config(dir);
    bad["orders"]["k_p"] = 9;
    CHECK(run_cli("solve -c " + write("bad.json", bad)) == 2);
    json missing = {{"scenario", "patch-test"}, {"domain", {{"type", "mesh"}}}, {"levels", {"nowhere.json"}}};
    CHECK(run_cli("solve -c " + write("missing.json", missing)) == 2);
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK(run_cli("solve -c " + (dir / "broken.json").string()) == 2);
    CHECK(run_cli("frobnicate") == 2);
    json resonant = patch_config(dir);
    resonant["material"] = {{"kappa", 0.0}};
    const int code = run_cli("solve -c " + write("resonant.json", resonant));
    CHECK((code == 0 || code == 1));
}

}
