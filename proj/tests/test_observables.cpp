#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <memory>
#include <vector>

#include "helpers.hpp"
#include "scramble/density_matrix.hpp"
#include "scramble/hamiltonian.hpp"
#include "scramble/observables.hpp"
#include "scramble/propagation.hpp"
#include "scramble/region.hpp"
#include "scramble/state.hpp"

using namespace scramble;
using scramble::testing::embedded_pauli;
using scramble::testing::random_state;

namespace {

std::shared_ptr<const SpectralDecomposition> decompose(const HamiltonianSpec& spec) {
    return std::make_shared<SpectralDecomposition>(
        eigendecompose(build_hamiltonian(spec)));
}

StateVector bell_pair() {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(4);
    amps(0) = amps(3) = 1.0 / std::sqrt(2.0);
    return StateVector(2, amps);
}

StateVector ghz(int n) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index(1) << n);
    amps(0) = 1.0 / std::sqrt(2.0);
    amps(amps.size() - 1) = amps(0);
    return StateVector(n, amps);
}

} // namespace

TEST_CASE("von Neumann entropy on known spectra") {
    Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(2, 2);
    pure(0, 0) = 1.0;
    CHECK(von_neumann_entropy(DensityMatrix(pure)) == 0.0);

    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(8)) ==
          doctest::Approx(std::log(8.0)).epsilon(1e-14));

    Eigen::MatrixXcd mixed = Eigen::MatrixXcd::Zero(2, 2);
    mixed(0, 0) = 0.25;
    mixed(1, 1) = 0.75;
    const double want = -0.25 * std::log(0.25) - 0.75 * std::log(0.75);
    CHECK(von_neumann_entropy(DensityMatrix(mixed)) ==
          doctest::Approx(want).epsilon(1e-14));

    Eigen::MatrixXcd skew = Eigen::MatrixXcd::Zero(2, 2);
    skew(0, 1) = 1.0;
    CHECK_THROWS_AS(von_neumann_entropy(DensityMatrix(skew)), std::invalid_argument);
}

TEST_CASE("Page values") {
    CHECK(page_value(1, 1) == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-15));
    CHECK(page_value(6, 6) == doctest::Approx(6.0 * std::log(2.0) - 0.5).epsilon(1e-15));
    CHECK(page_value(3, 5) ==
          doctest::Approx(3.0 * std::log(2.0) - 8.0 / 64.0).epsilon(1e-15));
    CHECK_THROWS_AS(page_value(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(page_value(0, 3), std::invalid_argument);
}

TEST_CASE("region entropy on hand states") {
    CHECK(entropy_of_region(bell_pair(), Region::prefix(1)) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));

    const StateVector product = product_state(PauliEigenstate::YPlus, 4);
    CHECK(entropy_of_region(product, Region::range(2, 3)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // GHZ has Schmidt rank 2 across every cut.
    for (const Region& r : {Region::prefix(1), Region::prefix(3), Region({2})})
        CHECK(entropy_of_region(ghz(4), r) ==
              doctest::Approx(std::log(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(entropy_of_region(product, Region({5})), std::out_of_range);
}

TEST_CASE("pure-state entropy is symmetric under complementation") {
    const StateVector psi = random_state(5, 41);
    for (const Region& r : {Region({1, 3}), Region::prefix(2), Region({2, 4, 5})}) {
        const double a = entropy_of_region(psi, r);
        const double b = entropy_of_region(psi, r.complement(5));
        CHECK(a == doctest::Approx(b).epsilon(1e-11));
    }
}

TEST_CASE("entropy samples carry Page-normalized values") {
    const EntropySample s = entropy_sample(bell_pair(), Region::prefix(1), 2.5);
    CHECK(s.time == 2.5);
    CHECK(s.entropy == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(s.normalized ==
          doctest::Approx(std::log(2.0) / page_value(1, 1)).epsilon(1e-12));
}

TEST_CASE("squared commutator on coincident and disjoint probes at t=0") {
    const SpectralPropagator prop(decompose(HamiltonianSpec::local(4)), 4);
    const StateVector psi = product_state(PauliEigenstate::YPlus, 4);

    // Disjoint single-site Paulis commute.
    const CommutatorSample far =
        squared_commutator_pure(prop, PauliKind::Y, 1, PauliKind::Y, 3, psi, 0.0);
    CHECK(far.value == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::abs(far.otoc - std::complex<double>(1.0, 0.0)) < 1e-13);
    CHECK(far.site == 3);
    CHECK(far.ensemble == Ensemble::PureState);

    // [Y,X] = -2iZ on the same site: C = 2, F = <XYXY> = -1.
    const CommutatorSample same =
        squared_commutator_pure(prop, PauliKind::Y, 1, PauliKind::X, 1, psi, 0.0);
    CHECK(same.value == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(same.otoc.real() == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(std::abs(same.otoc.imag()) < 1e-13);
}

TEST_CASE("squared commutator stays nonnegative and consistent with the OTOC") {
    const SpectralPropagator prop(decompose(HamiltonianSpec::powerlaw(5, 1.1, true)), 5);
    const StateVector psi = product_state(PauliEigenstate::YPlus, 5);
    for (double t : {0.5, 1.5, 4.0}) {
        for (int r : {2, 4}) {
            const CommutatorSample s =
                squared_commutator_pure(prop, PauliKind::Y, 1, PauliKind::Y, r, psi, t);
            CHECK(s.value >= 0.0);
            // C = 1 - Re F holds for Hermitian unitary probes.
            CHECK(s.value == doctest::Approx(1.0 - s.otoc.real()).epsilon(1e-11));
        }
    }
}

TEST_CASE("squared commutator matches a dense-matrix evaluation") {
    const int n = 4;
    auto spec = HamiltonianSpec::powerlaw(n, 1.1, true);
    auto d = decompose(spec);
    const SpectralPropagator prop(d, n);
    const StateVector psi = random_state(n, 9);
    const double t = 1.3;

    const Eigen::MatrixXcd wt = heisenberg_operator(d, n, PauliKind::Y, 1, t).entries();
    const Eigen::MatrixXcd v = embedded_pauli(PauliKind::Y, 3, n);
    const Eigen::MatrixXcd k = wt * v - v * wt;
    const std::complex<double> c_form =
        0.5 * psi.amplitudes().dot(k.adjoint() * k * psi.amplitudes());
    const std::complex<double> f_form =
        psi.amplitudes().dot(v * wt * v * wt * psi.amplitudes());

    const CommutatorSample s =
        squared_commutator_pure(prop, PauliKind::Y, 1, PauliKind::Y, 3, psi, t);
    CHECK(s.value == doctest::Approx(c_form.real()).epsilon(1e-11));
    CHECK(std::abs(s.otoc - f_form) < 1e-11);
}

TEST_CASE("infinite-temperature commutator matches the Frobenius form") {
    const int n = 4;
    auto d = decompose(HamiltonianSpec::fast_scrambler(n));
    const HeisenbergOperator wt = heisenberg_operator(d, n, PauliKind::Y, 1, 1.7);
    const Eigen::MatrixXcd v = embedded_pauli(PauliKind::Y, 3, n);
    const Eigen::MatrixXcd k = wt.entries() * v - v * wt.entries();
    const double want = 0.5 * k.squaredNorm() / std::pow(2.0, n);
    CHECK(squared_commutator_infT(wt, PauliKind::Y, 3) ==
          doctest::Approx(want).epsilon(1e-11));
}

TEST_CASE("infinite temperature equals the basis-state average") {
    const int n = 3;
    auto spec = HamiltonianSpec::powerlaw(n, 1.5, true);
    auto d = decompose(spec);
    const SpectralPropagator prop(d, n);
    const double t = 0.8;
    const HeisenbergOperator wt = heisenberg_operator(d, n, PauliKind::Y, 1, t);

    double mean = 0.0;
    for (std::uint64_t b = 0; b < 8; ++b) {
        mean += squared_commutator_pure(prop, PauliKind::Y, 1, PauliKind::Y, 3,
                                        StateVector::basis_state(n, b), t)
                    .value;
    }
    mean /= 8.0;
    CHECK(mean == doctest::Approx(squared_commutator_infT(wt, PauliKind::Y, 3))
                      .epsilon(1e-11));
}

TEST_CASE("operator state is normalized and starts at W|psi0>") {
    const int n = 4;
    const SpectralPropagator prop(decompose(HamiltonianSpec::local(n)), n);
    const StateVector psi = product_state(PauliEigenstate::YPlus, n);

    const StateVector phi0 = operator_state(prop, PauliKind::Y, 1, psi, 0.0);
    const StateVector want = apply_local_pauli(psi, PauliKind::Y, 1);
    CHECK((phi0.amplitudes() - want.amplitudes()).cwiseAbs().maxCoeff() < 1e-13);

    const StateVector phi = operator_state(prop, PauliKind::Y, 1, psi, 2.0);
    CHECK(phi.norm() == doctest::Approx(1.0).epsilon(1e-12));

    // W|psi0> is still a product state, so its entropy starts at zero.
    const EntropySample s =
        operator_state_entropy(prop, PauliKind::Y, 1, psi, 0.0, Region::prefix(2));
    CHECK(s.entropy == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("running time average by the trapezoidal rule") {
    const std::vector<double> times{0.0, 1.0, 2.0, 3.0};

    const std::vector<double> flat = time_average(times, {5.0, 5.0, 5.0, 5.0});
    for (double v : flat) CHECK(v == doctest::Approx(5.0).epsilon(1e-15));

    // Running mean of y = t is t/2.
    const std::vector<double> ramp = time_average(times, {0.0, 1.0, 2.0, 3.0});
    CHECK(ramp[0] == 0.0);
    CHECK(ramp[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(ramp[2] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ramp[3] == doctest::Approx(1.5).epsilon(1e-15));

    CHECK_THROWS_AS(time_average({0.0, 0.0}, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(time_average({0.0, 1.0}, {1.0}), std::invalid_argument);
}

TEST_CASE("window average over a subrange") {
    const std::vector<double> times{0.0, 1.0, 2.0, 3.0, 4.0};
    const std::vector<double> ramp{0.0, 1.0, 2.0, 3.0, 4.0};
    CHECK(window_average(times, ramp, 2.0, 4.0) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(window_average(times, {7.0, 7.0, 7.0, 7.0, 7.0}, 1.0, 3.0) ==
          doctest::Approx(7.0).epsilon(1e-15));
    CHECK_THROWS_AS(window_average(times, ramp, 10.0, 20.0), std::invalid_argument);
}

TEST_CASE("trace distance to the maximally mixed state") {
    CHECK(trace_distance_to_maximally_mixed(DensityMatrix::maximally_mixed(4)) ==
          doctest::Approx(0.0).epsilon(1e-14));

    Eigen::MatrixXcd pure = Eigen::MatrixXcd::Zero(4, 4);
    pure(0, 0) = 1.0;
    CHECK(trace_distance_to_maximally_mixed(DensityMatrix(pure)) ==
          doctest::Approx(0.75).epsilon(1e-13));

    Eigen::MatrixXcd half = Eigen::MatrixXcd::Zero(4, 4);
    half(0, 0) = half(1, 1) = 0.5;
    CHECK(trace_distance_to_maximally_mixed(DensityMatrix(half)) ==
          doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("reduced density matrices are positive with unit trace") {
    const StateVector psi = random_state(5, 77);
    const DensityMatrix rho = reduced_density_matrix(psi, Region({2, 4}));
    CHECK(rho.dim() == 4);
    CHECK(std::abs(rho.trace() - std::complex<double>(1.0, 0.0)) < 1e-12);
    CHECK(rho.hermiticity_error() < 1e-13);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries());
    CHECK(solver.eigenvalues().minCoeff() > -1e-12);
}
