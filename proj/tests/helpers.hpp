#pragma once

#include <Eigen/Dense>
#include <complex>
#include <random>

#include "scramble/pauli.hpp"
#include "scramble/state.hpp"

namespace scramble::testing {

using Complex = std::complex<double>;

// 2x2 single-qubit Pauli, written out directly.
inline Eigen::Matrix2cd pauli_matrix(PauliKind p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case PauliKind::Identity: m << 1, 0, 0, 1; break;
        case PauliKind::X: m << 0, 1, 1, 0; break;
        case PauliKind::Y: m << 0, Complex(0, -1), Complex(0, 1), 0; break;
        case PauliKind::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

// P embedded on `site` of an n-qubit chain. Site 1 is the least-significant
// bit, so it sits rightmost in the Kronecker chain.
inline Eigen::MatrixXcd embedded_pauli(PauliKind p, int site, int n_qubits) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
    for (int m = 1; m <= n_qubits; ++m) {
        const Eigen::MatrixXcd factor =
            (m == site) ? Eigen::MatrixXcd(pauli_matrix(p))
                        : Eigen::MatrixXcd(Eigen::Matrix2cd::Identity());
        out = kron(factor, out);
    }
    return out;
}

inline Eigen::VectorXcd random_amplitudes(int n_qubits, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXcd v(Eigen::Index{1} << n_qubits);
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(dist(rng), dist(rng));
    v /= v.norm();
    return v;
}

inline StateVector random_state(int n_qubits, unsigned seed) {
    return StateVector(n_qubits, random_amplitudes(n_qubits, seed));
}

} // namespace scramble::testing
