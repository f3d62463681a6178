#pragma once

#include <Eigen/Dense>
#include <limits>
#include <string>

#include "scramble/state.hpp"

namespace scramble {

enum class HamiltonianFamily { Local, Powerlaw, FastScrambler };

// Mixed-field Ising chain, open boundaries:
//   H = -sum_{m<n} J_mn Z_m Z_n - h_x sum_m X_m - h_z sum_m Z_m
// Families differ only in J_mn:
//   Local:         J_mn = J for |m-n| = 1, else 0 (the alpha -> infinity limit)
//   Powerlaw:      J_mn = (J / kappa) / |m-n|^alpha, kappa = Kac constant or 1
//   FastScrambler: J_mn = J delta_{|m-n|,1} + J / N^gamma  (all pairs)
struct HamiltonianSpec {
    HamiltonianFamily family = HamiltonianFamily::Local;
    int n_qubits = 2;
    double alpha = std::numeric_limits<double>::infinity();
    bool kac_normalized = true;
    double gamma = 0.5;
    double j_coupling = 1.0;
    double h_x = -1.05;
    double h_z = 0.5;

    static HamiltonianSpec local(int n_qubits);
    // alpha = infinity collapses to the Local family.
    static HamiltonianSpec powerlaw(int n_qubits, double alpha, bool kac_normalized);
    static HamiltonianSpec fast_scrambler(int n_qubits, double gamma = 0.5);

    // Stable identifier used as the "model" column in result tables,
    // e.g. "local", "powerlaw-a1.1-kac", "powerlaw-a0.4-unit", "fast-scrambler".
    std::string label() const;

    // Throws config_error on out-of-domain fields.
    void validate() const;
};

// Kac constant kappa = (1/(N-1)) sum_{m<n} 1/|m-n|^alpha. alpha = infinity
// keeps only the N-1 nearest-neighbor terms, giving exactly 1.
double kac_constant(double alpha, int n_qubits);

// Symmetric coupling matrix; entry (m-1, n-1) holds J_mn, diagonal zero.
Eigen::MatrixXd coupling_matrix(const HamiltonianSpec& spec);

// Diagonal of H in the Z-product basis: entry b is
//   -sum_{m<n} J_mn z_m(b) z_n(b) - h_z sum_m z_m(b),  z_m(b) = 1 - 2 bit_{m-1}(b).
Eigen::VectorXd hamiltonian_diagonal(const HamiltonianSpec& spec);

// Dense real-symmetric H: the diagonal above plus -h_x between basis states
// differing in exactly one bit.
class HamiltonianMatrix {
  public:
    HamiltonianMatrix(HamiltonianSpec spec, Eigen::MatrixXd entries);

    const HamiltonianSpec& spec() const { return spec_; }
    const Eigen::MatrixXd& entries() const { return entries_; }
    int n_qubits() const { return spec_.n_qubits; }
    Eigen::Index dim() const { return entries_.rows(); }

    // max |H - H^T|
    double hermiticity_error() const;

  private:
    HamiltonianSpec spec_;
    Eigen::MatrixXd entries_;
};

HamiltonianMatrix build_powerlaw_ising(const HamiltonianSpec& spec);
HamiltonianMatrix build_fast_scrambler(const HamiltonianSpec& spec);

// Dispatch on spec.family.
HamiltonianMatrix build_hamiltonian(const HamiltonianSpec& spec);

// Matrix-free H|psi> for state-only propagation past the dense limit:
// stored diagonal plus the uniform -h_x single-bit-flip stencil.
class HamiltonianAction {
  public:
    explicit HamiltonianAction(const HamiltonianSpec& spec);

    const HamiltonianSpec& spec() const { return spec_; }
    int n_qubits() const { return spec_.n_qubits; }
    Eigen::Index dim() const { return diagonal_.size(); }

    void apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const;
    Eigen::VectorXcd apply(const Eigen::VectorXcd& in) const;

    // <psi|H|psi>, real for any state.
    double expectation(const StateVector& psi) const;

  private:
    HamiltonianSpec spec_;
    Eigen::VectorXd diagonal_;
    double flip_; // off-diagonal coefficient, -h_x
};

} // namespace scramble
