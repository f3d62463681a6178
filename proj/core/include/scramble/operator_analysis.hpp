#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "scramble/pauli.hpp"
#include "scramble/propagation.hpp"

namespace scramble {

// Tensor product of single-site Paulis, packed base-4: digit m-1 holds the
// letter on site m (0=I, 1=X, 2=Y, 3=Z). The strings form an orthonormal
// operator basis under the normalized trace 2^-N Tr.
struct PauliString {
    std::uint64_t code = 0;
    int n_qubits = 0;

    PauliString() = default;
    PauliString(std::uint64_t code, int n_qubits);

    static PauliString identity(int n_qubits);
    static PauliString single(PauliKind p, int site, int n_qubits);

    PauliKind kind_at(int site) const;

    // Rightmost non-identity site; 0 for the identity string. This is the
    // "size" that indexes the operator density.
    int rightmost_site() const;

    // Number of non-identity sites.
    int weight() const;

    // Site 1 leftmost, e.g. "YIXZ".
    std::string label() const;

    // Bit m-1 set when site m carries X or Y (flips the basis state).
    std::uint64_t x_mask() const;
    // Bit m-1 set when site m carries Z or Y (contributes a sign).
    std::uint64_t z_mask() const;
    int y_count() const;
};

// Dense matrix of a Pauli string (test oracles and reconstruction).
Eigen::MatrixXcd pauli_string_matrix(const PauliString& s);

// All 4^N expansion coefficients c_Lambda = 2^-N Tr(S_Lambda op), indexed by
// the string's base-4 code.
struct OperatorExpansion {
    int n_qubits = 0;
    Eigen::VectorXcd coefficients;

    std::complex<double> coefficient(const PauliString& s) const;
    // sum |c|^2; equals 1 for a unitarily evolved Pauli.
    double total_weight() const;
};

// Weight of an evolved operator on strings by rightmost non-identity site:
// p_ell = sum over strings ending at ell of |c_Lambda|^2; the identity weight
// p0 is tracked separately.
struct OperatorDensityProfile {
    double time = 0;
    int n_qubits = 0;
    double p0 = 0;
    std::vector<double> p; // p[ell-1] holds p_ell, ell = 1..N

    // density(0) = p0, density(ell) = p_ell.
    double density(int ell) const;
    // p0 + sum p_ell; 1 within 1e-9 for unitarily evolved Paulis.
    double total() const;
};

// Explicit decomposition; 4^N coefficients, so capped at 7 qubits.
OperatorExpansion pauli_decompose(const HeisenbergOperator& op);

// Profile by nested identity-normalized partial traces:
//   q_ell = 2^-ell ||W_ell||_F^2 accumulates all strings inside the prefix,
//   p_ell = q_ell - q_{ell-1}, with q_0 = |2^-N Tr W|^2 = p0.
OperatorDensityProfile operator_density_profile(const HeisenbergOperator& op);

// Same profile summed directly from a full expansion (oracle path).
OperatorDensityProfile profile_from_expansion(const OperatorExpansion& expansion,
                                              double time);

// L = sum_ell ell * p_ell.
double operator_size(const OperatorDensityProfile& profile);

// Haar references: L_Haar = N (1 + 1/(4^N - 1)) - 1/3 and the stationary
// density p_ell = 3 * 4^(ell-1) / (4^N - 1).
double haar_operator_size(int n_qubits);
double haar_density(int ell, int n_qubits);

// Pauli-averaged squared commutator at probe site r,
//   Cbar_r = (1/4) sum_{V in {1,X,Y,Z}} C_r^V = sum over strings with a
// non-identity letter at r of |c_Lambda|^2, computed from the projection
//   G = (W + X_r W X_r + Y_r W Y_r + Z_r W Z_r)/4  (strings with identity at r)
// as Cbar_r = 2^-N (||W||_F^2 - ||G||_F^2), without any decomposition.
double average_squared_commutator(const HeisenbergOperator& op, int site);

} // namespace scramble
