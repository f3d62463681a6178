#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <limits>

#include "helpers.hpp"
#include "scramble/errors.hpp"
#include "scramble/hamiltonian.hpp"
#include "scramble/state.hpp"

using namespace scramble;
using scramble::testing::embedded_pauli;
using scramble::testing::random_state;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// H assembled from explicit Kronecker products, fully independent of the
// bit-stencil construction under test.
Eigen::MatrixXcd kron_hamiltonian(const HamiltonianSpec& spec) {
    const int n = spec.n_qubits;
    const Eigen::Index dim = Eigen::Index(1) << n;
    const Eigen::MatrixXd j = coupling_matrix(spec);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m = 1; m <= n; ++m) {
        for (int k = m + 1; k <= n; ++k) {
            if (j(m - 1, k - 1) == 0.0) continue;
            h -= j(m - 1, k - 1) * (embedded_pauli(PauliKind::Z, m, n) *
                                    embedded_pauli(PauliKind::Z, k, n));
        }
    }
    for (int m = 1; m <= n; ++m) {
        h -= spec.h_x * embedded_pauli(PauliKind::X, m, n);
        h -= spec.h_z * embedded_pauli(PauliKind::Z, m, n);
    }
    return h;
}

} // namespace

TEST_CASE("kac constant limiting and hand values") {
    CHECK(kac_constant(kInf, 2) == 1.0);
    CHECK(kac_constant(kInf, 9) == 1.0);
    // alpha = 0: every pair couples equally, kappa = N/2.
    CHECK(kac_constant(0.0, 4) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(kac_constant(0.0, 7) == doctest::Approx(3.5).epsilon(1e-15));
    // N=3, alpha=1: (1/2)(2/1 + 1/2) = 1.25.
    CHECK(kac_constant(1.0, 3) == doctest::Approx(1.25).epsilon(1e-15));
    // N=4, alpha=2: (1/3)(3/1 + 2/4 + 1/9) = 65/54.
    CHECK(kac_constant(2.0, 4) == doctest::Approx(65.0 / 54.0).epsilon(1e-15));
    CHECK_THROWS_AS(kac_constant(-1.0, 4), std::invalid_argument);
    CHECK_THROWS_AS(kac_constant(1.0, 1), std::invalid_argument);
}

TEST_CASE("coupling matrix is symmetric with zero diagonal") {
    for (const auto& spec :
         {HamiltonianSpec::local(5), HamiltonianSpec::powerlaw(5, 1.7, true),
          HamiltonianSpec::powerlaw(5, 0.4, false), HamiltonianSpec::fast_scrambler(5)}) {
        const Eigen::MatrixXd j = coupling_matrix(spec);
        CHECK((j - j.transpose()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(j.diagonal().cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("local couplings are nearest-neighbor only") {
    const Eigen::MatrixXd j = coupling_matrix(HamiltonianSpec::local(4));
    for (int m = 0; m < 4; ++m)
        for (int k = 0; k < 4; ++k)
            CHECK(j(m, k) == (std::abs(m - k) == 1 ? 1.0 : 0.0));
}

TEST_CASE("powerlaw couplings with and without Kac normalization") {
    auto unit = HamiltonianSpec::powerlaw(3, 2.0, false);
    const Eigen::MatrixXd ju = coupling_matrix(unit);
    CHECK(ju(0, 1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ju(1, 2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ju(0, 2) == doctest::Approx(0.25).epsilon(1e-15));

    auto kac = HamiltonianSpec::powerlaw(3, 2.0, true);
    const Eigen::MatrixXd jk = coupling_matrix(kac);
    // kappa = (1/2)(2/1 + 1/4) = 1.125.
    CHECK(jk(0, 1) == doctest::Approx(1.0 / 1.125).epsilon(1e-15));
    CHECK(jk(0, 2) == doctest::Approx(0.25 / 1.125).epsilon(1e-15));
}

TEST_CASE("Kac normalization fixes the total coupling to J(N-1)") {
    for (double alpha : {0.3, 0.7, 1.5, 2.5}) {
        for (int n : {3, 6, 9}) {
            const Eigen::MatrixXd j =
                coupling_matrix(HamiltonianSpec::powerlaw(n, alpha, true));
            double total = 0.0;
            for (int m = 0; m < n; ++m)
                for (int k = m + 1; k < n; ++k) total += j(m, k);
            CHECK(total == doctest::Approx(double(n - 1)).epsilon(1e-13));
        }
    }
}

TEST_CASE("fast scrambler adds a uniform N^-gamma tail to the local chain") {
    auto fs2 = HamiltonianSpec::fast_scrambler(2);
    CHECK(coupling_matrix(fs2)(0, 1) ==
          doctest::Approx(1.0 + 1.0 / std::sqrt(2.0)).epsilon(1e-15));

    auto fs3 = HamiltonianSpec::fast_scrambler(3);
    const Eigen::MatrixXd j = coupling_matrix(fs3);
    const double tail = 1.0 / std::sqrt(3.0);
    CHECK(j(0, 1) == doctest::Approx(1.0 + tail).epsilon(1e-15));
    CHECK(j(1, 2) == doctest::Approx(1.0 + tail).epsilon(1e-15));
    CHECK(j(0, 2) == doctest::Approx(tail).epsilon(1e-15));

    // gamma -> infinity removes the tail entirely.
    auto fs_inf = HamiltonianSpec::fast_scrambler(4, kInf);
    const Eigen::MatrixXd local = coupling_matrix(HamiltonianSpec::local(4));
    CHECK((coupling_matrix(fs_inf) - local).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("diagonal of the two-site local model") {
    const Eigen::VectorXd d = hamiltonian_diagonal(HamiltonianSpec::local(2));
    REQUIRE(d.size() == 4);
    CHECK(d(0) == doctest::Approx(-2.0).epsilon(1e-15));
    CHECK(d(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d(2) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d(3) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("diagonal matches explicit sign bookkeeping") {
    auto spec = HamiltonianSpec::powerlaw(4, 1.3, true);
    const Eigen::MatrixXd j = coupling_matrix(spec);
    const Eigen::VectorXd d = hamiltonian_diagonal(spec);
    for (std::uint64_t b = 0; b < 16; ++b) {
        auto z = [&](int m) { return 1.0 - 2.0 * double((b >> (m - 1)) & 1u); };
        double e = 0.0;
        for (int m = 1; m <= 4; ++m) {
            for (int k = m + 1; k <= 4; ++k) e -= j(m - 1, k - 1) * z(m) * z(k);
            e -= spec.h_z * z(m);
        }
        CHECK(d(Eigen::Index(b)) == doctest::Approx(e).epsilon(1e-14));
    }
}

TEST_CASE("two-site dense matrix couples single bit flips at -h_x") {
    const HamiltonianMatrix h = build_hamiltonian(HamiltonianSpec::local(2));
    const auto& m = h.entries();
    CHECK(m(0, 1) == doctest::Approx(1.05).epsilon(1e-15));
    CHECK(m(0, 2) == doctest::Approx(1.05).epsilon(1e-15));
    CHECK(m(1, 3) == doctest::Approx(1.05).epsilon(1e-15));
    CHECK(m(2, 3) == doctest::Approx(1.05).epsilon(1e-15));
    CHECK(m(0, 3) == 0.0); // two bits apart
    CHECK(m(1, 2) == 0.0);
    CHECK(h.hermiticity_error() == 0.0);
}

TEST_CASE("dense matrix equals the Kronecker-product construction") {
    for (const auto& spec :
         {HamiltonianSpec::local(3), HamiltonianSpec::powerlaw(3, 1.7, true),
          HamiltonianSpec::powerlaw(3, 0.6, false), HamiltonianSpec::fast_scrambler(3)}) {
        const HamiltonianMatrix h = build_hamiltonian(spec);
        const Eigen::MatrixXcd oracle = kron_hamiltonian(spec);
        CHECK(oracle.imag().cwiseAbs().maxCoeff() < 1e-14);
        CHECK((h.entries() - oracle.real()).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("matrix-free action agrees with the dense matrix") {
    for (const auto& spec :
         {HamiltonianSpec::local(5), HamiltonianSpec::powerlaw(5, 1.1, true),
          HamiltonianSpec::fast_scrambler(5)}) {
        const HamiltonianMatrix dense = build_hamiltonian(spec);
        const HamiltonianAction action(spec);
        const StateVector psi = random_state(5, 17);
        const Eigen::VectorXcd got = action.apply(psi.amplitudes());
        const Eigen::VectorXcd want = dense.entries() * psi.amplitudes();
        CHECK((got - want).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("energy expectation is real and matches the quadratic form") {
    auto spec = HamiltonianSpec::powerlaw(4, 2.3, true);
    const HamiltonianAction action(spec);
    const StateVector psi = random_state(4, 3);
    const std::complex<double> form =
        psi.amplitudes().dot(action.apply(psi.amplitudes()));
    CHECK(std::abs(form.imag()) < 1e-13);
    CHECK(action.expectation(psi) == doctest::Approx(form.real()).epsilon(1e-12));
}

TEST_CASE("Y+ product state has zero energy in every family") {
    // <X> = <Z> = <ZZ> = 0 for |Y+>^N, so every term vanishes.
    const StateVector psi = product_state(PauliEigenstate::YPlus, 6);
    for (const auto& spec :
         {HamiltonianSpec::local(6), HamiltonianSpec::powerlaw(6, 0.8, true),
          HamiltonianSpec::fast_scrambler(6)}) {
        CHECK(HamiltonianAction(spec).expectation(psi) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("model labels are stable identifiers") {
    CHECK(HamiltonianSpec::local(4).label() == "local");
    CHECK(HamiltonianSpec::powerlaw(4, 1.1, true).label() == "powerlaw-a1.1-kac");
    CHECK(HamiltonianSpec::powerlaw(4, 0.4, false).label() == "powerlaw-a0.4-unit");
    CHECK(HamiltonianSpec::fast_scrambler(4).label() == "fast-scrambler");
    CHECK(HamiltonianSpec::fast_scrambler(4, 1.0).label() == "fast-scrambler-g1");
}

TEST_CASE("infinite alpha collapses to the local family") {
    auto spec = HamiltonianSpec::powerlaw(4, kInf, true);
    CHECK(spec.family == HamiltonianFamily::Local);
    CHECK(spec.label() == "local");
    const Eigen::MatrixXd got = coupling_matrix(spec);
    const Eigen::MatrixXd want = coupling_matrix(HamiltonianSpec::local(4));
    CHECK((got - want).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("model validation rejects out-of-domain fields") {
    CHECK_THROWS_AS(HamiltonianSpec::local(1), config_error);
    CHECK_THROWS_AS(HamiltonianSpec::powerlaw(4, -0.5, true), config_error);
    CHECK_THROWS_AS(
        HamiltonianSpec::powerlaw(4, std::numeric_limits<double>::quiet_NaN(), true),
        config_error);
    CHECK_THROWS_AS(HamiltonianSpec::fast_scrambler(4, -kInf), config_error);
    CHECK_NOTHROW(HamiltonianSpec::fast_scrambler(4, kInf));

    HamiltonianSpec bad = HamiltonianSpec::local(4);
    bad.h_x = kInf;
    CHECK_THROWS_AS(bad.validate(), config_error);
}

TEST_CASE("dense assembly is capped while the action is not") {
    HamiltonianSpec spec = HamiltonianSpec::local(15);
    CHECK_THROWS_AS(build_hamiltonian(spec), resource_limit_error);
    CHECK_NOTHROW(HamiltonianAction{spec});
}
