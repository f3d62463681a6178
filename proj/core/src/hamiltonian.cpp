#include "scramble/hamiltonian.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <vector>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

std::string format_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

HamiltonianSpec HamiltonianSpec::local(int n_qubits) {
    HamiltonianSpec s;
    s.family = HamiltonianFamily::Local;
    s.n_qubits = n_qubits;
    s.validate();
    return s;
}

HamiltonianSpec HamiltonianSpec::powerlaw(int n_qubits, double alpha, bool kac_normalized) {
    HamiltonianSpec s;
    if (std::isinf(alpha) && alpha > 0) {
        s.family = HamiltonianFamily::Local;
    } else {
        s.family = HamiltonianFamily::Powerlaw;
        s.alpha = alpha;
        s.kac_normalized = kac_normalized;
    }
    s.n_qubits = n_qubits;
    s.validate();
    return s;
}

HamiltonianSpec HamiltonianSpec::fast_scrambler(int n_qubits, double gamma) {
    HamiltonianSpec s;
    s.family = HamiltonianFamily::FastScrambler;
    s.n_qubits = n_qubits;
    s.gamma = gamma;
    s.validate();
    return s;
}

std::string HamiltonianSpec::label() const {
    switch (family) {
        case HamiltonianFamily::Local:
            return "local";
        case HamiltonianFamily::Powerlaw:
            return "powerlaw-a" + format_param(alpha) + (kac_normalized ? "-kac" : "-unit");
        case HamiltonianFamily::FastScrambler:
            return gamma == 0.5 ? std::string("fast-scrambler")
                                : "fast-scrambler-g" + format_param(gamma);
    }
    return "unknown";
}

void HamiltonianSpec::validate() const {
    if (n_qubits < 2) throw config_error("hamiltonian: n_qubits must be >= 2");
    if (!std::isfinite(j_coupling) || !std::isfinite(h_x) || !std::isfinite(h_z))
        throw config_error("hamiltonian: J, h_x, h_z must be finite");
    if (family == HamiltonianFamily::Powerlaw) {
        if (std::isnan(alpha) || alpha < 0)
            throw config_error("hamiltonian: alpha must be >= 0");
    }
    if (family == HamiltonianFamily::FastScrambler) {
        // gamma = +infinity is the vanishing all-to-all limit; -infinity diverges.
        if (std::isnan(gamma) || gamma == -std::numeric_limits<double>::infinity())
            throw config_error("hamiltonian: gamma must be a real number");
    }
}

double kac_constant(double alpha, int n_qubits) {
    if (n_qubits < 2) throw std::invalid_argument("kac_constant: n_qubits must be >= 2");
    if (std::isnan(alpha) || alpha < 0) throw std::invalid_argument("kac_constant: alpha must be >= 0");
    const int n = n_qubits;
    if (std::isinf(alpha)) return 1.0; // only the N-1 unit nearest-neighbor terms survive
    double sum = 0.0;
    for (int d = n - 1; d >= 1; --d) sum += static_cast<double>(n - d) / std::pow(d, alpha);
    return sum / (n - 1);
}

Eigen::MatrixXd coupling_matrix(const HamiltonianSpec& spec) {
    spec.validate();
    const int n = spec.n_qubits;
    Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
    auto set_pair = [&](int m, int k, double v) {
        j(m, k) = v;
        j(k, m) = v;
    };
    switch (spec.family) {
        case HamiltonianFamily::Local:
            for (int m = 0; m + 1 < n; ++m) set_pair(m, m + 1, spec.j_coupling);
            break;
        case HamiltonianFamily::Powerlaw: {
            const double kappa = spec.kac_normalized ? kac_constant(spec.alpha, n) : 1.0;
            for (int m = 0; m < n; ++m)
                for (int k = m + 1; k < n; ++k)
                    set_pair(m, k, spec.j_coupling / (kappa * std::pow(k - m, spec.alpha)));
            break;
        }
        case HamiltonianFamily::FastScrambler: {
            const double all_to_all = spec.j_coupling / std::pow(n, spec.gamma);
            for (int m = 0; m < n; ++m)
                for (int k = m + 1; k < n; ++k)
                    set_pair(m, k, all_to_all + (k - m == 1 ? spec.j_coupling : 0.0));
            break;
        }
    }
    return j;
}

Eigen::VectorXd hamiltonian_diagonal(const HamiltonianSpec& spec) {
    const Eigen::MatrixXd j = coupling_matrix(spec);
    const int n = spec.n_qubits;
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXd diag(dim);
    std::vector<double> z(n);
    for (Eigen::Index b = 0; b < dim; ++b) {
        for (int m = 0; m < n; ++m) z[m] = (b >> m) & 1 ? -1.0 : 1.0;
        double v = 0.0;
        for (int m = 0; m < n; ++m) {
            double coupled = 0.0;
            for (int k = m + 1; k < n; ++k) coupled += j(m, k) * z[k];
            v -= z[m] * (coupled + spec.h_z);
        }
        diag(b) = v;
    }
    return diag;
}

HamiltonianMatrix::HamiltonianMatrix(HamiltonianSpec spec, Eigen::MatrixXd entries)
    : spec_(std::move(spec)), entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() ||
        entries_.rows() != (Eigen::Index{1} << spec_.n_qubits))
        throw std::invalid_argument("hamiltonian matrix dimension must be 2^n_qubits");
}

double HamiltonianMatrix::hermiticity_error() const {
    return (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
}

namespace {

HamiltonianMatrix assemble(const HamiltonianSpec& spec) {
    const int n = spec.n_qubits;
    if (n > 14)
        throw resource_limit_error("dense hamiltonian limited to 14 qubits; use HamiltonianAction");
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    h.diagonal() = hamiltonian_diagonal(spec);
    for (Eigen::Index b = 0; b < dim; ++b)
        for (int m = 0; m < n; ++m) h(b ^ (Eigen::Index{1} << m), b) = -spec.h_x;
    return HamiltonianMatrix(spec, std::move(h));
}

} // namespace

HamiltonianMatrix build_powerlaw_ising(const HamiltonianSpec& spec) {
    if (spec.family == HamiltonianFamily::FastScrambler)
        throw config_error("build_powerlaw_ising: family must be Local or Powerlaw");
    return assemble(spec);
}

HamiltonianMatrix build_fast_scrambler(const HamiltonianSpec& spec) {
    if (spec.family != HamiltonianFamily::FastScrambler)
        throw config_error("build_fast_scrambler: family must be FastScrambler");
    return assemble(spec);
}

HamiltonianMatrix build_hamiltonian(const HamiltonianSpec& spec) {
    return spec.family == HamiltonianFamily::FastScrambler ? build_fast_scrambler(spec)
                                                           : build_powerlaw_ising(spec);
}

HamiltonianAction::HamiltonianAction(const HamiltonianSpec& spec)
    : spec_(spec), diagonal_(hamiltonian_diagonal(spec)), flip_(-spec.h_x) {}

void HamiltonianAction::apply(const Eigen::VectorXcd& in, Eigen::VectorXcd& out) const {
    const Eigen::Index dim = diagonal_.size();
    if (in.size() != dim) throw std::invalid_argument("state dimension mismatch");
    out.resize(dim);
    out.array() = diagonal_.array() * in.array();
    if (flip_ == 0.0) return;
    const int n = spec_.n_qubits;
    for (int m = 0; m < n; ++m) {
        const Eigen::Index mask = Eigen::Index{1} << m;
        for (Eigen::Index b = 0; b < dim; ++b) {
            if (b & mask) continue;
            out(b) += flip_ * in(b | mask);
            out(b | mask) += flip_ * in(b);
        }
    }
}

Eigen::VectorXcd HamiltonianAction::apply(const Eigen::VectorXcd& in) const {
    Eigen::VectorXcd out;
    apply(in, out);
    return out;
}

double HamiltonianAction::expectation(const StateVector& psi) const {
    if (psi.dim() != dim()) throw std::invalid_argument("state dimension mismatch");
    return psi.amplitudes().dot(apply(psi.amplitudes())).real();
}

} // namespace scramble
