#include "scramble/state.hpp"

#include <bit>
#include <stdexcept>

namespace scramble {

using namespace std::complex_literals;

StateVector::StateVector(int n_qubits, Eigen::VectorXcd amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > 30)
        throw std::invalid_argument("n_qubits must be in 1..30");
    if (amplitudes_.size() != (Eigen::Index{1} << n_qubits))
        throw std::invalid_argument("amplitude vector must have length 2^n_qubits");
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t b) {
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(Eigen::Index{1} << n_qubits);
    if (b >= static_cast<std::uint64_t>(amps.size()))
        throw std::out_of_range("basis index out of range");
    amps(static_cast<Eigen::Index>(b)) = 1.0;
    return StateVector(n_qubits, std::move(amps));
}

std::complex<double> StateVector::inner(const StateVector& other) const {
    if (dim() != other.dim())
        throw std::invalid_argument("dimension mismatch in inner product");
    return amplitudes_.dot(other.amplitudes_);
}

StateVector product_state(PauliEigenstate local, int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    const auto v = eigenstate_amplitudes(local);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    Eigen::VectorXcd amps(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        std::complex<double> a = 1.0;
        for (int m = 0; m < n_qubits; ++m) a *= v[(b >> m) & 1];
        amps(b) = a;
    }
    return StateVector(n_qubits, std::move(amps));
}

void apply_pauli_inplace(Eigen::VectorXcd& amps, PauliKind p, int bit) {
    const Eigen::Index dim = amps.size();
    const Eigen::Index mask = Eigen::Index{1} << bit;
    switch (p) {
        case PauliKind::Identity:
            return;
        case PauliKind::X:
            for (Eigen::Index b = 0; b < dim; ++b)
                if (!(b & mask)) std::swap(amps(b), amps(b | mask));
            return;
        case PauliKind::Y:
            // Y|0> = i|1>, Y|1> = -i|0>
            for (Eigen::Index b = 0; b < dim; ++b) {
                if (b & mask) continue;
                const std::complex<double> a0 = amps(b);
                const std::complex<double> a1 = amps(b | mask);
                amps(b) = std::complex<double>(a1.imag(), -a1.real());     // -i a1
                amps(b | mask) = std::complex<double>(-a0.imag(), a0.real()); // +i a0
            }
            return;
        case PauliKind::Z:
            for (Eigen::Index b = 0; b < dim; ++b)
                if (b & mask) amps(b) = -amps(b);
            return;
    }
}

StateVector apply_local_pauli(const StateVector& state, PauliKind p, int site) {
    if (site < 1 || site > state.n_qubits())
        throw std::out_of_range("site out of range");
    Eigen::VectorXcd amps = state.amplitudes();
    apply_pauli_inplace(amps, p, site - 1);
    return StateVector(state.n_qubits(), std::move(amps));
}

double total_magnetization_z(const StateVector& state) {
    const auto& amps = state.amplitudes();
    const int n = state.n_qubits();
    double mz = 0.0;
    for (Eigen::Index b = 0; b < amps.size(); ++b) {
        const int ones = std::popcount(static_cast<std::uint64_t>(b));
        mz += std::norm(amps(b)) * static_cast<double>(n - 2 * ones);
    }
    return mz;
}

} // namespace scramble
