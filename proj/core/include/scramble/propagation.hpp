#pragma once

#include <Eigen/Dense>
#include <map>
#include <memory>

#include "scramble/hamiltonian.hpp"
#include "scramble/state.hpp"

namespace scramble {

// H = V diag(lambda) V^T with V real orthogonal (H is real symmetric in the
// Z-product basis for every model here). Immutable; share freely.
struct SpectralDecomposition {
    Eigen::VectorXd eigenvalues;  // ascending
    Eigen::MatrixXd eigenvectors; // columns

    Eigen::Index dim() const { return eigenvalues.size(); }
};

// Full eigendecomposition via LAPACK dsyevd. Throws resource_limit_error past
// max_qubits and numerical_error if the solver fails to converge.
SpectralDecomposition eigendecompose(const HamiltonianMatrix& h, int max_qubits = 14);

struct KrylovConfig {
    int max_dim = 60;        // Lanczos subspace cap per step
    double tolerance = 1e-12; // per-step error bound on the propagated state
    double dt = 0.1;          // step size; requested times are split into steps
};

// State propagation psi -> e^{-iHt} psi. Negative t evolves backward.
class Propagator {
  public:
    virtual ~Propagator() = default;
    virtual StateVector evolve(const StateVector& psi, double t) const = 0;
    virtual int n_qubits() const = 0;
};

// Exact at any t: psi(t) = V (e^{-i lambda t} . (V^T psi)).
class SpectralPropagator final : public Propagator {
  public:
    explicit SpectralPropagator(std::shared_ptr<const SpectralDecomposition> decomp,
                                int n_qubits);

    StateVector evolve(const StateVector& psi, double t) const override;
    int n_qubits() const override { return n_qubits_; }

    // Same evolution applied to every column in place (one pair of real
    // matrix products instead of per-column passes).
    void evolve_batch(Eigen::MatrixXcd& columns, double t) const;

    const SpectralDecomposition& decomposition() const { return *decomp_; }

  private:
    std::shared_ptr<const SpectralDecomposition> decomp_;
    int n_qubits_;
};

// Lanczos with full reorthogonalization, stepping in config.dt increments.
// The per-step error is estimated from the weight the propagated vector
// leaves in the last subspace direction; the subspace grows until the
// estimate drops below tolerance. Throws numerical_error at max_dim.
class KrylovPropagator final : public Propagator {
  public:
    explicit KrylovPropagator(std::shared_ptr<const HamiltonianAction> h,
                              KrylovConfig config = {});

    StateVector evolve(const StateVector& psi, double t) const override;
    int n_qubits() const override { return h_->n_qubits(); }

    const KrylovConfig& config() const { return config_; }

  private:
    void step(Eigen::VectorXcd& psi, double dt) const;

    std::shared_ptr<const HamiltonianAction> h_;
    KrylovConfig config_;
};

StateVector evolve_state(const Propagator& propagator, const StateVector& psi, double t);

// Snapshot of an operator evolved in the Heisenberg picture,
// W(t) = e^{+iHt} W e^{-iHt}, held dense.
class HeisenbergOperator {
  public:
    HeisenbergOperator(int n_qubits, double time, Eigen::MatrixXcd entries);

    int n_qubits() const { return n_qubits_; }
    double time() const { return time_; }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    Eigen::Index dim() const { return entries_.rows(); }

    double frobenius_sq() const { return entries_.squaredNorm(); }

  private:
    int n_qubits_;
    double time_;
    Eigen::MatrixXcd entries_;
};

// Repeated Heisenberg snapshots from one decomposition: caches
// Wtilde = V^T W V and forms W(t) = V (e^{i(li-lj)t} . Wtilde) V^T,
// split into real and imaginary parts (real matrix products only).
class HeisenbergEvolver {
  public:
    HeisenbergEvolver(std::shared_ptr<const SpectralDecomposition> decomp, int n_qubits,
                      const Eigen::MatrixXcd& seed);

    HeisenbergOperator at_time(double t) const;
    int n_qubits() const { return n_qubits_; }

  private:
    std::shared_ptr<const SpectralDecomposition> decomp_;
    int n_qubits_;
    Eigen::MatrixXd wtilde_re_, wtilde_im_;
};

// One-shot W(t) for a single-site Pauli seed. max_qubits guards the dense
// operator regime (four matrices of dim 2^N are live at once).
HeisenbergOperator heisenberg_operator(std::shared_ptr<const SpectralDecomposition> decomp,
                                       int n_qubits, PauliKind seed, int site, double t,
                                       int max_qubits = 13);

// Label-keyed store of decompositions so repeated experiments on the same
// model diagonalize once. Not thread-safe; share per worker or guard.
class SpectralCache {
  public:
    explicit SpectralCache(int max_qubits = 14) : max_qubits_(max_qubits) {}

    std::shared_ptr<const SpectralDecomposition> get(const HamiltonianSpec& spec);

  private:
    int max_qubits_;
    std::map<std::string, std::shared_ptr<const SpectralDecomposition>> cache_;
};

} // namespace scramble
