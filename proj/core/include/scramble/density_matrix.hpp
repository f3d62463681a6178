#pragma once

#include <Eigen/Dense>

#include "scramble/region.hpp"
#include "scramble/state.hpp"

namespace scramble {

// Reduced density matrix of a subsystem.
class DensityMatrix {
  public:
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    Eigen::Index dim() const { return entries_.rows(); }
    const Eigen::MatrixXcd& entries() const { return entries_; }

    double hermiticity_error() const {
        return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    }
    std::complex<double> trace() const { return entries_.trace(); }

    static DensityMatrix maximally_mixed(Eigen::Index dim);

  private:
    Eigen::MatrixXcd entries_;
};

// rho_A = Tr_B |psi><psi| by direct index-pair summation; the full outer
// product |psi><psi| is never materialized. keep must be a nonempty proper
// subset of the chain.
DensityMatrix reduced_density_matrix(const StateVector& state, const Region& keep);

} // namespace scramble
