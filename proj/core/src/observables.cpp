#include "scramble/observables.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "scramble/operator_kernels.hpp"

namespace scramble {

namespace {

constexpr double kEigenvalueFloor = 1e-14;

Eigen::VectorXd hermitian_eigenvalues(const DensityMatrix& rho) {
    if (rho.hermiticity_error() > 1e-10)
        throw std::invalid_argument("density matrix is not Hermitian");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.entries(),
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

} // namespace

double von_neumann_entropy(const DensityMatrix& rho) {
    const Eigen::VectorXd lambda = hermitian_eigenvalues(rho);
    double s = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i)
        if (lambda(i) > kEigenvalueFloor) s -= lambda(i) * std::log(lambda(i));
    return s;
}

double page_value(int n_a, int n_b) {
    if (n_a < 1 || n_a > n_b) throw std::invalid_argument("page_value requires 1 <= n_A <= n_B");
    const double d_a = std::ldexp(1.0, n_a);
    const double d_b = std::ldexp(1.0, n_b);
    return n_a * std::log(2.0) - d_a / (2.0 * d_b);
}

double entropy_of_region(const StateVector& psi, const Region& region) {
    const int n = psi.n_qubits();
    if (!region.within(n)) throw std::out_of_range("region extends past the last qubit");
    // S_A = S_B for a pure global state; trace out the larger side.
    const Region side =
        region.size() * 2 <= n ? region : region.complement(n);
    return von_neumann_entropy(reduced_density_matrix(psi, side));
}

EntropySample entropy_sample(const StateVector& psi, const Region& region, double time) {
    EntropySample s;
    s.time = time;
    s.region = region;
    s.entropy = entropy_of_region(psi, region);
    const int a = region.size();
    const int b = psi.n_qubits() - a;
    s.normalized = s.entropy / page_value(std::min(a, b), std::max(a, b));
    return s;
}

CommutatorSample squared_commutator_pure(const Propagator& propagator, PauliKind w_kind,
                                         int w_site, PauliKind v_kind, int v_site,
                                         const StateVector& psi0, double t) {
    // u = W(t) V |psi0>
    StateVector u = apply_local_pauli(psi0, v_kind, v_site);
    u = propagator.evolve(u, t);
    u = apply_local_pauli(u, w_kind, w_site);
    u = propagator.evolve(u, -t);
    // w = V W(t) |psi0>
    StateVector w = propagator.evolve(psi0, t);
    w = apply_local_pauli(w, w_kind, w_site);
    w = propagator.evolve(w, -t);
    w = apply_local_pauli(w, v_kind, v_site);

    CommutatorSample sample;
    sample.time = t;
    sample.site = v_site;
    sample.ensemble = Ensemble::PureState;
    sample.value = 0.5 * (u.amplitudes() - w.amplitudes()).squaredNorm();
    sample.otoc = u.inner(w);
    return sample;
}

double squared_commutator_infT(const HeisenbergOperator& wt, PauliKind v_kind, int v_site) {
    Eigen::MatrixXcd commutator = wt.entries();
    apply_pauli_left(commutator, v_kind, v_site);   // V Wt
    Eigen::MatrixXcd right = wt.entries();
    apply_pauli_right(right, v_kind, v_site);       // Wt V
    commutator -= right;
    return 0.5 * std::ldexp(commutator.squaredNorm(), -wt.n_qubits());
}

StateVector operator_state(const Propagator& propagator, PauliKind w_kind, int w_site,
                           const StateVector& psi0, double t) {
    StateVector phi = propagator.evolve(psi0, t);
    phi = apply_local_pauli(phi, w_kind, w_site);
    return propagator.evolve(phi, -t);
}

EntropySample operator_state_entropy(const Propagator& propagator, PauliKind w_kind,
                                     int w_site, const StateVector& psi0, double t,
                                     const Region& region) {
    return entropy_sample(operator_state(propagator, w_kind, w_site, psi0, t), region, t);
}

std::vector<double> time_average(const std::vector<double>& times,
                                 const std::vector<double>& values) {
    if (times.empty() || times.size() != values.size())
        throw std::invalid_argument("time_average requires matching nonempty series");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("time_average requires strictly increasing times");
    std::vector<double> out(times.size());
    out[0] = values[0];
    double integral = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i) {
        integral += 0.5 * (values[i] + values[i - 1]) * (times[i] - times[i - 1]);
        const double span = times[i] - times[0];
        out[i] = integral / span;
    }
    return out;
}

double window_average(const std::vector<double>& times, const std::vector<double>& values,
                      double t_lo, double t_hi) {
    if (times.size() != values.size())
        throw std::invalid_argument("window_average requires matching series");
    if (!(t_lo < t_hi)) throw std::invalid_argument("window_average requires t_lo < t_hi");
    double integral = 0.0;
    double span = 0.0;
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (times[i] <= times[i - 1])
            throw std::invalid_argument("window_average requires strictly increasing times");
        if (times[i - 1] < t_lo || times[i] > t_hi) continue;
        integral += 0.5 * (values[i] + values[i - 1]) * (times[i] - times[i - 1]);
        span += times[i] - times[i - 1];
    }
    if (span == 0.0) throw std::invalid_argument("window_average: no samples inside window");
    return integral / span;
}

double trace_distance_to_maximally_mixed(const DensityMatrix& rho) {
    const Eigen::VectorXd lambda = hermitian_eigenvalues(rho);
    const double uniform = 1.0 / static_cast<double>(rho.dim());
    double dist = 0.0;
    for (Eigen::Index i = 0; i < lambda.size(); ++i) dist += std::abs(lambda(i) - uniform);
    return 0.5 * dist;
}

} // namespace scramble
