#pragma once

#include <Eigen/Dense>
#include <complex>

#include "scramble/pauli.hpp"

namespace scramble {

// A pure state of an N-qubit chain: 2^N complex amplitudes.
//
// Bit convention (shared by every module): basis index b encodes qubit m as
// bit m-1, so site 1 is the least-significant bit.
class StateVector {
  public:
    StateVector(int n_qubits, Eigen::VectorXcd amplitudes);

    // Computational basis state |b>.
    static StateVector basis_state(int n_qubits, std::uint64_t b);

    int n_qubits() const { return n_qubits_; }
    Eigen::Index dim() const { return amplitudes_.size(); }
    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }

    double norm() const { return amplitudes_.norm(); }

    // <this|other>
    std::complex<double> inner(const StateVector& other) const;

  private:
    int n_qubits_;
    Eigen::VectorXcd amplitudes_;
};

// Tensor power of a single-qubit Pauli eigenstate, e.g. |Y+>^(x)N.
StateVector product_state(PauliEigenstate local, int n_qubits);

// P_site |psi> via bit masks; O(2^N), no matrix is formed. site is 1-based.
StateVector apply_local_pauli(const StateVector& state, PauliKind p, int site);

// In-place kernel behind apply_local_pauli; bit = site-1.
void apply_pauli_inplace(Eigen::VectorXcd& amps, PauliKind p, int bit);

// Sum of <Z_m> over all sites.
double total_magnetization_z(const StateVector& state);

} // namespace scramble
