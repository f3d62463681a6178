#include <benchmark/benchmark.h>

#include "scramble/hamiltonian.hpp"
#include "scramble/observables.hpp"
#include "scramble/operator_analysis.hpp"
#include "scramble/operator_kernels.hpp"
#include "scramble/propagation.hpp"
#include "scramble/state.hpp"

using namespace scramble;

namespace {

std::shared_ptr<const SpectralDecomposition> decomposition(const HamiltonianSpec& spec) {
    static SpectralCache cache(14);
    return cache.get(spec);
}

void bm_hamiltonian_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const HamiltonianAction h(HamiltonianSpec::powerlaw(n, 1.1, true));
    const StateVector psi = product_state(PauliEigenstate::YPlus, n);
    Eigen::VectorXcd out(psi.dim());
    for (auto _ : state) {
        h.apply(psi.amplitudes(), out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetComplexityN(psi.dim());
}

void bm_spectral_evolve(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = HamiltonianSpec::local(n);
    const SpectralPropagator prop(decomposition(spec), n);
    const StateVector psi = product_state(PauliEigenstate::YPlus, n);
    double t = 0.5;
    for (auto _ : state) {
        auto out = prop.evolve(psi, t);
        benchmark::DoNotOptimize(out.amplitudes().data());
        t += 0.25;
    }
}

void bm_krylov_step(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto action = std::make_shared<const HamiltonianAction>(HamiltonianSpec::powerlaw(n, 1.1, true));
    const KrylovPropagator prop(action);
    const StateVector psi = product_state(PauliEigenstate::YPlus, n);
    for (auto _ : state) {
        auto out = prop.evolve(psi, 0.1);
        benchmark::DoNotOptimize(out.amplitudes().data());
    }
}

void bm_heisenberg_snapshot(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = HamiltonianSpec::local(n);
    const HeisenbergEvolver evolver(decomposition(spec), n, dense_pauli(PauliKind::Y, 1, n));
    double t = 0.5;
    for (auto _ : state) {
        auto op = evolver.at_time(t);
        benchmark::DoNotOptimize(op.entries().data());
        t += 0.25;
    }
}

void bm_density_profile(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = HamiltonianSpec::local(n);
    const HeisenbergEvolver evolver(decomposition(spec), n, dense_pauli(PauliKind::Y, 1, n));
    const auto op = evolver.at_time(2.0);
    for (auto _ : state) {
        auto profile = operator_density_profile(op);
        benchmark::DoNotOptimize(profile.p.data());
    }
}

void bm_squared_commutator(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto spec = HamiltonianSpec::powerlaw(n, 1.1, true);
    const SpectralPropagator prop(decomposition(spec), n);
    const StateVector psi = product_state(PauliEigenstate::YPlus, n);
    double t = 0.5;
    for (auto _ : state) {
        auto sample = squared_commutator_pure(prop, PauliKind::Y, 1, PauliKind::Y, n, psi, t);
        benchmark::DoNotOptimize(sample.value);
        t += 0.25;
    }
}

BENCHMARK(bm_hamiltonian_apply)->Arg(10)->Arg(12)->Arg(14);
BENCHMARK(bm_spectral_evolve)->Arg(10)->Arg(12);
BENCHMARK(bm_krylov_step)->Arg(10)->Arg(12)->Arg(14);
BENCHMARK(bm_heisenberg_snapshot)->Arg(8)->Arg(10);
BENCHMARK(bm_density_profile)->Arg(8)->Arg(10);
BENCHMARK(bm_squared_commutator)->Arg(10)->Arg(12);

} // namespace

BENCHMARK_MAIN();
