#include "decpoisson/assembly.hpp"
#include "decpoisson/dual.hpp"
#include "decpoisson/mesh_generators.hpp"
#include "decpoisson/solver.hpp"

#include <benchmark/benchmark.h>

using namespace decp;

namespace {

TriangleMesh bench_mesh(benchmark::State& state) {
    return generate_perturbed_mesh(static_cast<std::size_t>(state.range(0)), 0.25, 1);
}

void BM_BuildDual(benchmark::State& state) {
    const TriangleMesh mesh = bench_mesh(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_dual(mesh));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh.num_triangles()));
}

void BM_AssembleDec(benchmark::State& state) {
    const TriangleMesh mesh = bench_mesh(state);
    const DualComplex dual = build_dual(mesh);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_dec(mesh, dual));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh.num_triangles()));
}

void BM_AssembleFem(benchmark::State& state) {
    const TriangleMesh mesh = bench_mesh(state);
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_fem(mesh));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<long>(mesh.num_triangles()));
}

void BM_RhsBox(benchmark::State& state) {
    const TriangleMesh mesh = bench_mesh(state);
    const DualComplex dual = build_dual(mesh);
    const ScalarField f = sine_solution().f;
    for (auto _ : state) {
        benchmark::DoNotOptimize(assemble_rhs_box(mesh, dual, f, 2));
    }
}

void BM_SolveCg(benchmark::State& state) {
    const TriangleMesh mesh = bench_mesh(state);
    const DualComplex dual = build_dual(mesh);
    const LinearSystem system = apply_dirichlet(
        assemble_dec(mesh, dual), assemble_rhs_dec(mesh, dual, sine_solution().f), mesh, Method::dec);
    std::size_t iterations = 0;
    for (auto _ : state) {
        const SolveReport report = solve_cg(system);
        iterations = report.iterations;
        benchmark::DoNotOptimize(report.solution.data());
    }
    state.counters["cg_iterations"] = static_cast<double>(iterations);
}

}  // namespace

BENCHMARK(BM_BuildDual)->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_AssembleDec)->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_AssembleFem)->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_RhsBox)->RangeMultiplier(2)->Range(16, 128);
BENCHMARK(BM_SolveCg)->RangeMultiplier(2)->Range(16, 64)->Unit(benchmark::kMillisecond);
