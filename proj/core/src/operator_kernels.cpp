#include "scramble/operator_kernels.hpp"

#include <stdexcept>

namespace scramble {

namespace {

void check_site(int site, Eigen::Index dim) {
    if (site < 1) throw std::out_of_range("site out of range");
    if ((Eigen::Index{1} << (site - 1)) >= dim) throw std::out_of_range("site out of range");
}

} // namespace

void apply_pauli_left(Eigen::MatrixXcd& op, PauliKind p, int site) {
    check_site(site, op.rows());
    const Eigen::Index mask = Eigen::Index{1} << (site - 1);
    const Eigen::Index dim = op.rows();
    switch (p) {
        case PauliKind::Identity:
            return;
        case PauliKind::X:
            for (Eigen::Index b = 0; b < dim; ++b)
                if (!(b & mask)) op.row(b).swap(op.row(b | mask));
            return;
        case PauliKind::Y:
            // Row r of Y_site * op mixes rows r, r^mask of op with phases +-i.
            for (Eigen::Index b = 0; b < dim; ++b) {
                if (b & mask) continue;
                const Eigen::Index b1 = b | mask;
                Eigen::RowVectorXcd r0 = op.row(b);
                op.row(b) = std::complex<double>(0, -1) * op.row(b1);
                op.row(b1) = std::complex<double>(0, 1) * r0;
            }
            return;
        case PauliKind::Z:
            for (Eigen::Index b = 0; b < dim; ++b)
                if (b & mask) op.row(b) = -op.row(b);
            return;
    }
}

void apply_pauli_right(Eigen::MatrixXcd& op, PauliKind p, int site) {
    check_site(site, op.cols());
    const Eigen::Index mask = Eigen::Index{1} << (site - 1);
    const Eigen::Index dim = op.cols();
    switch (p) {
        case PauliKind::Identity:
            return;
        case PauliKind::X:
            for (Eigen::Index c = 0; c < dim; ++c)
                if (!(c & mask)) op.col(c).swap(op.col(c | mask));
            return;
        case PauliKind::Y:
            // Column c of op * Y_site mixes columns c, c^mask with transposed phases.
            for (Eigen::Index c = 0; c < dim; ++c) {
                if (c & mask) continue;
                const Eigen::Index c1 = c | mask;
                Eigen::VectorXcd v0 = op.col(c);
                op.col(c) = std::complex<double>(0, 1) * op.col(c1);
                op.col(c1) = std::complex<double>(0, -1) * v0;
            }
            return;
        case PauliKind::Z:
            for (Eigen::Index c = 0; c < dim; ++c)
                if (c & mask) op.col(c) = -op.col(c);
            return;
    }
}

Eigen::MatrixXcd dense_pauli(PauliKind p, int site, int n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("n_qubits must be in 1..30");
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    check_site(site, dim);
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(dim, dim);
    apply_pauli_left(op, p, site);
    return op;
}

Eigen::MatrixXcd partial_trace_operator(const Eigen::MatrixXcd& op, int n_qubits, int prefix_len) {
    if (op.rows() != op.cols()) throw std::invalid_argument("operator must be square");
    if (op.rows() != (Eigen::Index{1} << n_qubits))
        throw std::invalid_argument("operator dimension must be 2^n_qubits");
    if (prefix_len < 1 || prefix_len > n_qubits)
        throw std::out_of_range("prefix length out of range");

    const Eigen::Index dim_a = Eigen::Index{1} << prefix_len;
    const Eigen::Index dim_e = Eigen::Index{1} << (n_qubits - prefix_len);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_a, dim_a);
    // Prefix sites occupy the low bits, so the traced-out tail strides in blocks.
    for (Eigen::Index env = 0; env < dim_e; ++env) {
        const Eigen::Index off = env * dim_a;
        out += op.block(off, off, dim_a, dim_a);
    }
    out /= static_cast<double>(dim_e);
    return out;
}

} // namespace scramble
