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
#include <elastovem/assembly.hpp>
#include <elastovem/parallel.hpp>
#include <elastovem/postprocess.hpp>
#include <elastovem/scenarios.hpp>

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

using namespace elastovem;

namespace {

ElementGeometry hexagon() {
    std::vector<Point2> p;
    for (int i = 0; i < 6; ++i) {
        const double t = std::numbers::pi * i / 3.0;
        p.emplace_back(0.1 * std::cos(t), 0.1 * std::sin(t));
    }
    return polygon_geometry(p);
}

std::shared_ptr<const PolygonalMesh> square(int n) {
    return std::make_shared<const PolygonalMesh>(build_structured_quad_mesh({}, n, n));
}

void BM_ElementOperators(benchmark::State& state) {
    const auto g = hexagon();
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_element_operators(g, k));
    }
}
BENCHMARK(BM_ElementOperators)->DenseRange(1, 5);

void BM_SpaceBuild(benchmark::State& state) {
    const auto mesh = square(static_cast<int>(state.range(0)));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        ScalarVemSpace V(mesh, k);
        benchmark::DoNotOptimize(V.stiffness().nonZeros());
    }
    state.counters["dofs"] = ScalarVemSpace(mesh, k).num_dofs();
}
BENCHMARK(BM_SpaceBuild)->Args({32, 1})->Args({32, 2})->Args({32, 3})->Unit(benchmark::kMillisecond);

void BM_SpaceBuildThreads(benchmark::State& state) {
    const auto mesh = square(64);
    set_num_threads(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ScalarVemSpace V(mesh, 3);
        benchmark::DoNotOptimize(V.stiffness().nonZeros());
    }
    set_num_threads(1);
}
BENCHMARK(BM_SpaceBuildThreads)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_AssembleGlobal(benchmark::State& state) {
    const auto mesh = square(static_cast<int>(state.range(0)));
    const ScalarVemSpace V(mesh, static_cast<int>(state.range(1)));
    const auto prob = smooth_potentials_problem();
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_global(V, V, prob).size());
    }
}
BENCHMARK(BM_AssembleGlobal)->Args({32, 2})->Args({32, 3})->Unit(benchmark::kMillisecond);

void BM_Coupling(benchmark::State& state) {
    const ScalarVemSpace P(square(32), 2);
    const ScalarVemSpace S(square(128), 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_coupling(P.trace(), S.trace()).first.nonZeros());
    }
}
BENCHMARK(BM_Coupling)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
    const auto mesh = square(static_cast<int>(state.range(0)));
    const ScalarVemSpace V(mesh, static_cast<int>(state.range(1)));
    const auto sys = assemble_global(V, V, smooth_potentials_problem());
    for (auto _ : state) {
        benchmark::DoNotOptimize(solve_block_system(sys).phi_p.size());
    }
    state.counters["unknowns"] = sys.size();
}
BENCHMARK(BM_Solve)->Args({16, 2})->Args({32, 2})->Args({32, 3})->Unit(benchmark::kMillisecond);

void BM_HodgeDecomposition(benchmark::State& state) {
    const auto mesh = std::make_shared<const PolygonalMesh>(build_lshape_quad_mesh(static_cast<int>(state.range(0))));
    const ScalarVemSpace V(mesh, 2);
    const auto src = *gaussian_source_problem().vector_source;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_source(V, V, src).f_p.size());
    }
}
BENCHMARK(BM_HodgeDecomposition)->Arg(11)->Arg(22)->Unit(benchmark::kMillisecond);

void BM_ErrorIntegration(benchmark::State& state) {
    const auto mesh = square(32);
    const auto prob = smooth_potentials_problem();
    const auto r = solve_level({mesh, mesh}, 2, 2, prob);
    const auto field = reconstruct_displacement(*r.space_p, *r.space_s, r.solution);
    for (auto _ : state) {
        benchmark::DoNotOptimize(l2_error_displacement(field, prob.exact_u));
    }
}
BENCHMARK(BM_ErrorIntegration)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
