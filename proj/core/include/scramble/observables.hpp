#pragma once

#include <complex>
#include <vector>

#include "scramble/density_matrix.hpp"
#include "scramble/propagation.hpp"
#include "scramble/region.hpp"
#include "scramble/state.hpp"

namespace scramble {

struct EntropySample {
    double time = 0;
    Region region;
    double entropy = 0;    // nats
    double normalized = 0; // entropy / page_value(|A|, N-|A|)
};

enum class Ensemble { PureState, InfiniteTemperature };

struct CommutatorSample {
    double time = 0;
    int site = 0;                     // probe site r
    double value = 0;                 // C_r(t)
    std::complex<double> otoc{0, 0};  // F_r(t)
    Ensemble ensemble = Ensemble::PureState;
};

// S = -Tr[rho ln rho] in nats; eigenvalues below 1e-14 contribute zero
// (suppresses negative round-off eigenvalues).
double von_neumann_entropy(const DensityMatrix& rho);

// Mean entropy of an n_A-qubit subsystem of a Haar-random pure state on
// n_A + n_B qubits: S_P = ln d_A - d_A / (2 d_B), d = 2^n. Requires n_A <= n_B.
double page_value(int n_a, int n_b);

// Entanglement entropy of a region of a pure state. Purity lets the reduced
// density matrix be built on whichever side of the cut is smaller.
double entropy_of_region(const StateVector& psi, const Region& region);
EntropySample entropy_sample(const StateVector& psi, const Region& region, double time);

// Squared commutator C_r(t) = 1/2 <[W(t),V_r]^dag [W(t),V_r]> and the OTOC
// F = <psi0| V W(t) V W(t) |psi0>, from four evolution branches
//   u = W(t) V |psi0>,  w = V W(t) |psi0>,  C = 1/2 |u - w|^2,  F = <u|w>,
// so C >= 0 exactly and C = 1 - Re F up to propagation error. W(t) is never
// formed as a matrix.
CommutatorSample squared_commutator_pure(const Propagator& propagator, PauliKind w_kind,
                                         int w_site, PauliKind v_kind, int v_site,
                                         const StateVector& psi0, double t);

// Infinite-temperature ensemble: C = 1/2 2^-N Tr([Wt,V]^dag [Wt,V]).
double squared_commutator_infT(const HeisenbergOperator& wt, PauliKind v_kind, int v_site);

// |Phi(t)> = W(t)|psi0> = e^{+iHt} W e^{-iHt} |psi0>; unit norm for Pauli W.
StateVector operator_state(const Propagator& propagator, PauliKind w_kind, int w_site,
                           const StateVector& psi0, double t);

EntropySample operator_state_entropy(const Propagator& propagator, PauliKind w_kind,
                                     int w_site, const StateVector& psi0, double t,
                                     const Region& region);

// Running time average by the trapezoidal rule: out[i] = (1/t_i) integral_0^{t_i} y dt,
// with out[0] = y[0]. Times must be strictly increasing.
std::vector<double> time_average(const std::vector<double>& times,
                                 const std::vector<double>& values);

// Trapezoidal mean of y over samples with t in [t_lo, t_hi].
double window_average(const std::vector<double>& times, const std::vector<double>& values,
                      double t_lo, double t_hi);

// 1/2 sum_i |lambda_i(rho - 1/d)|.
double trace_distance_to_maximally_mixed(const DensityMatrix& rho);

} // namespace scramble
