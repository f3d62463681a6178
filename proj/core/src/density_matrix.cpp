#include "scramble/density_matrix.hpp"

#include <stdexcept>

namespace scramble {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
        throw std::invalid_argument("density matrix must be square");
    if (entries_.rows() < 1) throw std::invalid_argument("density matrix must be nonempty");
}

DensityMatrix DensityMatrix::maximally_mixed(Eigen::Index dim) {
    if (dim < 1) throw std::invalid_argument("dimension must be >= 1");
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(dim, dim) / static_cast<double>(dim);
    return DensityMatrix(std::move(m));
}

DensityMatrix reduced_density_matrix(const StateVector& state, const Region& keep) {
    const int n = state.n_qubits();
    if (!keep.within(n)) throw std::out_of_range("region extends past the last qubit");
    const auto& sites = keep.sites();
    const int k = static_cast<int>(sites.size());
    if (k == n) throw std::invalid_argument("region must be a proper subset of the chain");
    const int e = n - k;

    // Gather kept and traced-out bit positions (0-based).
    std::vector<int> keep_bits(k);
    for (int i = 0; i < k; ++i) keep_bits[i] = sites[i] - 1;
    std::vector<int> env_bits;
    env_bits.reserve(e);
    {
        std::uint64_t keep_mask = 0;
        for (int b : keep_bits) keep_mask |= std::uint64_t{1} << b;
        for (int b = 0; b < n; ++b)
            if (!(keep_mask & (std::uint64_t{1} << b))) env_bits.push_back(b);
    }

    const Eigen::Index dim_a = Eigen::Index{1} << k;
    const Eigen::Index dim_e = Eigen::Index{1} << e;
    const auto& amps = state.amplitudes();

    // scatter(i, bits) distributes the low bits of i to the given positions.
    auto scatter = [](Eigen::Index i, const std::vector<int>& bits) {
        std::uint64_t out = 0;
        for (std::size_t j = 0; j < bits.size(); ++j)
            if (i & (Eigen::Index{1} << j)) out |= std::uint64_t{1} << bits[j];
        return out;
    };

    std::vector<std::uint64_t> a_part(static_cast<std::size_t>(dim_a));
    for (Eigen::Index a = 0; a < dim_a; ++a) a_part[static_cast<std::size_t>(a)] = scatter(a, keep_bits);

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim_a, dim_a);
    for (Eigen::Index env = 0; env < dim_e; ++env) {
        const std::uint64_t env_part = scatter(env, env_bits);
        for (Eigen::Index a = 0; a < dim_a; ++a) {
            const auto ia = static_cast<Eigen::Index>(a_part[static_cast<std::size_t>(a)] | env_part);
            const std::complex<double> va = amps(ia);
            if (va == 0.0) continue;
            for (Eigen::Index b = 0; b < dim_a; ++b) {
                const auto ib = static_cast<Eigen::Index>(a_part[static_cast<std::size_t>(b)] | env_part);
                rho(a, b) += va * std::conj(amps(ib));
            }
        }
    }
    return DensityMatrix(std::move(rho));
}

} // namespace scramble
