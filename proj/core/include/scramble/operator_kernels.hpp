#pragma once

#include <Eigen/Dense>

#include "scramble/pauli.hpp"

namespace scramble {

// Dense 2^N x 2^N kernels on operators in the Z-product basis. Single-site
// Pauli factors are applied by row/column bit masks, never by forming the
// embedded Pauli matrix.

// op <- P_site * op
void apply_pauli_left(Eigen::MatrixXcd& op, PauliKind p, int site);

// op <- op * P_site
void apply_pauli_right(Eigen::MatrixXcd& op, PauliKind p, int site);

// Embedded single-site Pauli as a dense matrix (operator-picture seeds).
Eigen::MatrixXcd dense_pauli(PauliKind p, int site, int n_qubits);

// Identity-normalized partial trace over sites prefix_len+1..N:
//   W_l = 2^-(N-l) Tr_tail[W],  a 2^l x 2^l matrix on sites 1..l.
// Equals the operator's expansion restricted to strings supported on the
// prefix. prefix_len = N returns W itself.
Eigen::MatrixXcd partial_trace_operator(const Eigen::MatrixXcd& op, int n_qubits,
                                        int prefix_len);

} // namespace scramble
