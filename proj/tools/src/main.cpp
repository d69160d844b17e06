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
#include "config.hpp"

#include <elastovem/parallel.hpp>

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <iostream>

using namespace elastovem;

namespace {

int run(const std::string& command, const std::string& config_path, bool print_config) {
    try {
        const auto config = cli::load_config(config_path);
        if (print_config) {
            std::cout << cli::to_json(config).dump(2) << '\n';
            return 0;
        }
        if (command == "solve") {
            return cli::cmd_solve(config, std::cout);
        }
        if (command == "convergence") {
            return cli::cmd_convergence(config, std::cout);
        }
        return cli::cmd_patch_test(config, std::cout);
    } catch (const cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const UnsupportedConfigurationError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const MeshError& e) {
        std::cerr << "mesh error: " << e.what() << '\n';
        return 2;
    } catch (const BoundaryMismatchError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const IncomparableSpacesError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Time-harmonic elastodynamics through P- and S-wave potentials on polygonal meshes"};
    app.require_subcommand(1);
    std::string config_path;
    int threads = 1;
    bool verbose = false;
    bool print_config = false;

    std::string command;
    for (const auto& [name, help] : {std::pair{"solve", "solve the finest level and write potentials, a displacement grid and diagnostics"},
                                     std::pair{"convergence", "run every level and write the convergence table"},
                                     std::pair{"patch-test", "check exact reproduction of the polynomial solution"}}) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("-c,--config", config_path, "JSON scenario configuration")->required()->check(CLI::ExistingFile);
        sub->add_option("-t,--threads", threads, "worker threads for element loops (0 = all cores)")
            ->check(CLI::NonNegativeNumber);
        sub->add_flag("-v,--verbose", verbose, "debug logging");
        sub->add_flag("--print-config", print_config, "print the normalized configuration and exit");
        sub->callback([&command, sub] { command = sub->get_name(); });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    spdlog::set_default_logger(spdlog::stderr_color_mt("elastovem"));
    spdlog::set_level(verbose ? spdlog::level::debug : spdlog::level::info);
    spdlog::set_pattern("[%l] %v");
    set_num_threads(threads);
    return run(command, config_path, print_config);
}
