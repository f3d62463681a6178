#include "scramble/propagation.hpp"

#include <cmath>
#include <complex>

#include <lapacke.h>

#include "scramble/errors.hpp"
#include "scramble/operator_kernels.hpp"

namespace scramble {

SpectralDecomposition eigendecompose(const HamiltonianMatrix& h, int max_qubits) {
    if (h.n_qubits() > max_qubits)
        throw resource_limit_error("eigendecomposition limited to " +
                                   std::to_string(max_qubits) + " qubits, got " +
                                   std::to_string(h.n_qubits()));
    SpectralDecomposition d;
    d.eigenvectors = h.entries(); // dsyevd overwrites the input with eigenvectors
    d.eigenvalues.resize(d.eigenvectors.rows());
    const auto n = static_cast<lapack_int>(d.eigenvectors.rows());
    const lapack_int info =
        LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, d.eigenvectors.data(), n,
                       d.eigenvalues.data());
    if (info != 0)
        throw numerical_error("eigensolver failed to converge (dsyevd info=" +
                              std::to_string(info) + ")");
    return d;
}

SpectralPropagator::SpectralPropagator(std::shared_ptr<const SpectralDecomposition> decomp,
                                       int n_qubits)
    : decomp_(std::move(decomp)), n_qubits_(n_qubits) {
    if (!decomp_) throw std::invalid_argument("null decomposition");
    if (decomp_->dim() != (Eigen::Index{1} << n_qubits))
        throw std::invalid_argument("decomposition dimension must be 2^n_qubits");
}

StateVector SpectralPropagator::evolve(const StateVector& psi, double t) const {
    if (psi.dim() != decomp_->dim()) throw std::invalid_argument("state dimension mismatch");
    if (t == 0.0) return psi;
    Eigen::MatrixXcd cols = psi.amplitudes();
    evolve_batch(cols, t);
    return StateVector(n_qubits_, Eigen::VectorXcd(cols.col(0)));
}

void SpectralPropagator::evolve_batch(Eigen::MatrixXcd& columns, double t) const {
    const Eigen::MatrixXd& v = decomp_->eigenvectors;
    if (columns.rows() != v.rows()) throw std::invalid_argument("state dimension mismatch");
    // Complex columns through real V: two real products per direction.
    Eigen::MatrixXd re = v.transpose() * columns.real();
    Eigen::MatrixXd im = v.transpose() * columns.imag();
    const Eigen::ArrayXd phase = -t * decomp_->eigenvalues.array();
    const Eigen::ArrayXd c = phase.cos();
    const Eigen::ArrayXd s = phase.sin();
    for (Eigen::Index j = 0; j < columns.cols(); ++j) {
        const Eigen::ArrayXd r = re.col(j).array() * c - im.col(j).array() * s;
        const Eigen::ArrayXd i = re.col(j).array() * s + im.col(j).array() * c;
        re.col(j) = r;
        im.col(j) = i;
    }
    columns.real() = v * re;
    columns.imag() = v * im;
}

KrylovPropagator::KrylovPropagator(std::shared_ptr<const HamiltonianAction> h,
                                   KrylovConfig config)
    : h_(std::move(h)), config_(config) {
    if (!h_) throw std::invalid_argument("null hamiltonian action");
    if (config_.max_dim < 2) throw std::invalid_argument("krylov max_dim must be >= 2");
    if (!(config_.tolerance > 0)) throw std::invalid_argument("krylov tolerance must be > 0");
    if (!(config_.dt > 0)) throw std::invalid_argument("krylov dt must be > 0");
}

StateVector KrylovPropagator::evolve(const StateVector& psi, double t) const {
    if (psi.dim() != h_->dim()) throw std::invalid_argument("state dimension mismatch");
    if (t == 0.0) return psi;
    Eigen::VectorXcd amps = psi.amplitudes();
    const int n_steps = std::max(
        1, static_cast<int>(std::ceil(std::abs(t) / config_.dt - 1e-12)));
    const double dt = t / n_steps;
    for (int k = 0; k < n_steps; ++k) step(amps, dt);
    return StateVector(h_->n_qubits(), std::move(amps));
}

void KrylovPropagator::step(Eigen::VectorXcd& psi, double dt) const {
    const double beta0 = psi.norm();
    if (beta0 == 0.0) throw std::invalid_argument("cannot propagate the zero vector");

    const Eigen::Index dim = psi.size();
    const int max_m = static_cast<int>(std::min<Eigen::Index>(config_.max_dim, dim));
    Eigen::MatrixXcd basis(dim, max_m);
    Eigen::VectorXd alpha(max_m), beta(max_m); // beta(k) couples vector k to k+1
    basis.col(0) = psi / beta0;

    Eigen::VectorXcd u; // converged small-space coefficients
    int m = 0;
    while (true) {
        // Lanczos recurrence with full reorthogonalization against all
        // previous vectors (robustness over speed at these dimensions).
        Eigen::VectorXcd w = h_->apply(basis.col(m));
        alpha(m) = basis.col(m).dot(w).real();
        w -= alpha(m) * basis.col(m);
        if (m > 0) w -= beta(m - 1) * basis.col(m - 1);
        Eigen::VectorXcd corr = basis.leftCols(m + 1).adjoint() * w;
        w -= basis.leftCols(m + 1) * corr;
        beta(m) = w.norm();
        ++m;

        // Exponentiate the m x m tridiagonal projection.
        Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
        tri.diagonal() = alpha.head(m);
        if (m > 1) {
            tri.diagonal(1) = beta.head(m - 1);
            tri.diagonal(-1) = beta.head(m - 1);
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(tri);
        const Eigen::ArrayXd phase = -dt * small.eigenvalues().array();
        const Eigen::VectorXd q0 = small.eigenvectors().row(0).transpose();
        Eigen::VectorXd u_re = small.eigenvectors() * (phase.cos() * q0.array()).matrix();
        Eigen::VectorXd u_im = small.eigenvectors() * (phase.sin() * q0.array()).matrix();
        u = u_re.cast<std::complex<double>>() +
            std::complex<double>(0, 1) * u_im.cast<std::complex<double>>();

        // Residual estimate: weight about to spill into the next direction.
        const double err = beta(m - 1) * std::abs(u(m - 1)) * std::abs(dt);
        const bool breakdown = beta(m - 1) < 1e-14; // invariant subspace: exact
        if (breakdown || err < config_.tolerance) break;
        if (m == max_m)
            throw numerical_error("krylov step did not converge at subspace dimension " +
                                  std::to_string(max_m) + "; reduce dt or raise max_dim");
        basis.col(m) = w / beta(m - 1);
    }
    psi = beta0 * (basis.leftCols(m) * u);
}

StateVector evolve_state(const Propagator& propagator, const StateVector& psi, double t) {
    return propagator.evolve(psi, t);
}

HeisenbergOperator::HeisenbergOperator(int n_qubits, double time, Eigen::MatrixXcd entries)
    : n_qubits_(n_qubits), time_(time), entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() ||
        entries_.rows() != (Eigen::Index{1} << n_qubits))
        throw std::invalid_argument("operator dimension must be 2^n_qubits");
}

HeisenbergEvolver::HeisenbergEvolver(std::shared_ptr<const SpectralDecomposition> decomp,
                                     int n_qubits, const Eigen::MatrixXcd& seed)
    : decomp_(std::move(decomp)), n_qubits_(n_qubits) {
    if (!decomp_) throw std::invalid_argument("null decomposition");
    if (seed.rows() != decomp_->dim() || seed.cols() != decomp_->dim())
        throw std::invalid_argument("seed dimension mismatch");
    const Eigen::MatrixXd& v = decomp_->eigenvectors;
    // Pauli seeds are purely real or purely imaginary; skip the zero half.
    if (seed.real().isZero(0.0))
        wtilde_re_ = Eigen::MatrixXd::Zero(v.rows(), v.cols());
    else
        wtilde_re_ = v.transpose() * seed.real() * v;
    if (seed.imag().isZero(0.0))
        wtilde_im_ = Eigen::MatrixXd::Zero(v.rows(), v.cols());
    else
        wtilde_im_ = v.transpose() * seed.imag() * v;
}

HeisenbergOperator HeisenbergEvolver::at_time(double t) const {
    const Eigen::MatrixXd& v = decomp_->eigenvectors;
    const Eigen::Index dim = v.rows();
    const Eigen::ArrayXd c = (t * decomp_->eigenvalues.array()).cos();
    const Eigen::ArrayXd s = (t * decomp_->eigenvalues.array()).sin();
    // E_ij = e^{i(l_i - l_j)t} = (c_i + i s_i)(c_j - i s_j); apply elementwise
    // to Wtilde, keeping real and imaginary parts separate.
    Eigen::MatrixXd mr(dim, dim), mi(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Eigen::ArrayXd er = c * c(j) + s * s(j);
        const Eigen::ArrayXd ei = s * c(j) - c * s(j);
        mr.col(j) = er * wtilde_re_.col(j).array() - ei * wtilde_im_.col(j).array();
        mi.col(j) = er * wtilde_im_.col(j).array() + ei * wtilde_re_.col(j).array();
    }
    Eigen::MatrixXcd out(dim, dim);
    out.real() = v * mr * v.transpose();
    out.imag() = v * mi * v.transpose();
    return HeisenbergOperator(n_qubits_, t, std::move(out));
}

HeisenbergOperator heisenberg_operator(std::shared_ptr<const SpectralDecomposition> decomp,
                                       int n_qubits, PauliKind seed, int site, double t,
                                       int max_qubits) {
    if (n_qubits > max_qubits)
        throw resource_limit_error("dense operator evolution limited to " +
                                   std::to_string(max_qubits) + " qubits, got " +
                                   std::to_string(n_qubits));
    HeisenbergEvolver evolver(std::move(decomp), n_qubits, dense_pauli(seed, site, n_qubits));
    return evolver.at_time(t);
}

std::shared_ptr<const SpectralDecomposition> SpectralCache::get(const HamiltonianSpec& spec) {
    const std::string key = spec.label() + ":n" + std::to_string(spec.n_qubits) + ":J" +
                            std::to_string(spec.j_coupling) + ":hx" + std::to_string(spec.h_x) +
                            ":hz" + std::to_string(spec.h_z);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    auto decomp = std::make_shared<const SpectralDecomposition>(
        eigendecompose(build_hamiltonian(spec), max_qubits_));
    cache_.emplace(key, decomp);
    return decomp;
}

} // namespace scramble
