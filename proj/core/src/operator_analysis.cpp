#include "scramble/operator_analysis.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "scramble/errors.hpp"
#include "scramble/operator_kernels.hpp"

namespace scramble {

namespace {

constexpr int kMaxDecomposeQubits = 7;

void check_site(int site, int n_qubits) {
    if (site < 1 || site > n_qubits) throw std::out_of_range("site out of range");
}

} // namespace

PauliString::PauliString(std::uint64_t code, int n_qubits) : code(code), n_qubits(n_qubits) {
    if (n_qubits < 1 || n_qubits > 30) throw std::invalid_argument("n_qubits must be in 1..30");
    if (code >> (2 * n_qubits))
        throw std::invalid_argument("string code has letters past the last site");
}

PauliString PauliString::identity(int n_qubits) { return PauliString(0, n_qubits); }

PauliString PauliString::single(PauliKind p, int site, int n_qubits) {
    check_site(site, n_qubits);
    return PauliString(static_cast<std::uint64_t>(p) << (2 * (site - 1)), n_qubits);
}

PauliKind PauliString::kind_at(int site) const {
    check_site(site, n_qubits);
    return static_cast<PauliKind>((code >> (2 * (site - 1))) & 3);
}

int PauliString::rightmost_site() const {
    if (code == 0) return 0;
    return (std::bit_width(code) + 1) / 2;
}

int PauliString::weight() const {
    int w = 0;
    for (std::uint64_t c = code; c != 0; c >>= 2) w += (c & 3) != 0;
    return w;
}

std::string PauliString::label() const {
    std::string out(static_cast<std::size_t>(n_qubits), 'I');
    for (int m = 1; m <= n_qubits; ++m)
        out[static_cast<std::size_t>(m - 1)] = pauli_char(kind_at(m));
    return out;
}

std::uint64_t PauliString::x_mask() const {
    std::uint64_t mask = 0;
    for (int m = 0; m < n_qubits; ++m) {
        const auto letter = (code >> (2 * m)) & 3;
        if (letter == 1 || letter == 2) mask |= std::uint64_t{1} << m;
    }
    return mask;
}

std::uint64_t PauliString::z_mask() const {
    std::uint64_t mask = 0;
    for (int m = 0; m < n_qubits; ++m) {
        const auto letter = (code >> (2 * m)) & 3;
        if (letter == 2 || letter == 3) mask |= std::uint64_t{1} << m;
    }
    return mask;
}

int PauliString::y_count() const {
    int c = 0;
    for (std::uint64_t v = code; v != 0; v >>= 2) c += (v & 3) == 2;
    return c;
}

Eigen::MatrixXcd pauli_string_matrix(const PauliString& s) {
    const Eigen::Index dim = Eigen::Index{1} << s.n_qubits;
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(dim, dim);
    for (int m = 1; m <= s.n_qubits; ++m) {
        const PauliKind p = s.kind_at(m);
        if (p != PauliKind::Identity) apply_pauli_left(out, p, m);
    }
    return out;
}

std::complex<double> OperatorExpansion::coefficient(const PauliString& s) const {
    if (s.n_qubits != n_qubits) throw std::invalid_argument("string length mismatch");
    return coefficients(static_cast<Eigen::Index>(s.code));
}

double OperatorExpansion::total_weight() const { return coefficients.squaredNorm(); }

OperatorExpansion pauli_decompose(const HeisenbergOperator& op) {
    const int n = op.n_qubits();
    if (n > kMaxDecomposeQubits)
        throw resource_limit_error("explicit decomposition limited to " +
                                   std::to_string(kMaxDecomposeQubits) + " qubits, got " +
                                   std::to_string(n));
    const Eigen::Index dim = op.dim();
    const Eigen::MatrixXcd& w = op.entries();
    OperatorExpansion expansion;
    expansion.n_qubits = n;
    expansion.coefficients.resize(Eigen::Index{1} << (2 * n));

    // c = 2^-N Tr(S W): every string touches each column once, at the row the
    // string's X/Y letters select; the phase is i^{#Y} (-1)^{popcount(c & zmask)}.
    constexpr std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(expansion.coefficients.size());
         ++code) {
        const PauliString s(code, n);
        const std::uint64_t xm = s.x_mask();
        const std::uint64_t zm = s.z_mask();
        const std::complex<double> base = i_pow[s.y_count() & 3];
        std::complex<double> sum = 0;
        for (std::uint64_t c = 0; c < static_cast<std::uint64_t>(dim); ++c) {
            const int sign = std::popcount(c & zm) & 1 ? -1 : 1;
            const std::complex<double> entry =
                w(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ xm));
            sum += static_cast<double>(sign) * entry;
        }
        expansion.coefficients(static_cast<Eigen::Index>(code)) =
            base * std::ldexp(1.0, -n) * sum;
    }
    return expansion;
}

double OperatorDensityProfile::density(int ell) const {
    if (ell < 0 || ell > n_qubits) throw std::out_of_range("ell out of range");
    return ell == 0 ? p0 : p[static_cast<std::size_t>(ell - 1)];
}

double OperatorDensityProfile::total() const {
    double t = p0;
    for (double v : p) t += v;
    return t;
}

OperatorDensityProfile operator_density_profile(const HeisenbergOperator& op) {
    const int n = op.n_qubits();
    OperatorDensityProfile profile;
    profile.time = op.time();
    profile.n_qubits = n;
    profile.p.resize(static_cast<std::size_t>(n));
    double q_prev = std::norm(std::ldexp(1.0, -n) * op.entries().trace());
    profile.p0 = q_prev;
    for (int ell = 1; ell <= n; ++ell) {
        const double q =
            ell == n ? std::ldexp(op.entries().squaredNorm(), -n)
                     : std::ldexp(partial_trace_operator(op.entries(), n, ell).squaredNorm(),
                                  -ell);
        profile.p[static_cast<std::size_t>(ell - 1)] = q - q_prev;
        q_prev = q;
    }
    return profile;
}

OperatorDensityProfile profile_from_expansion(const OperatorExpansion& expansion,
                                              double time) {
    const int n = expansion.n_qubits;
    OperatorDensityProfile profile;
    profile.time = time;
    profile.n_qubits = n;
    profile.p.assign(static_cast<std::size_t>(n), 0.0);
    profile.p0 = std::norm(expansion.coefficients(0));
    for (std::uint64_t code = 1;
         code < static_cast<std::uint64_t>(expansion.coefficients.size()); ++code) {
        const int ell = PauliString(code, n).rightmost_site();
        profile.p[static_cast<std::size_t>(ell - 1)] +=
            std::norm(expansion.coefficients(static_cast<Eigen::Index>(code)));
    }
    return profile;
}

double operator_size(const OperatorDensityProfile& profile) {
    double l = 0.0;
    for (int ell = 1; ell <= profile.n_qubits; ++ell)
        l += ell * profile.p[static_cast<std::size_t>(ell - 1)];
    return l;
}

double haar_operator_size(int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    const double strings = std::ldexp(1.0, 2 * n_qubits) - 1.0;
    return n_qubits * (1.0 + 1.0 / strings) - 1.0 / 3.0;
}

double haar_density(int ell, int n_qubits) {
    if (n_qubits < 1) throw std::invalid_argument("n_qubits must be >= 1");
    if (ell < 1 || ell > n_qubits) throw std::out_of_range("ell out of range");
    return 3.0 * std::ldexp(1.0, 2 * (ell - 1)) / (std::ldexp(1.0, 2 * n_qubits) - 1.0);
}

double average_squared_commutator(const HeisenbergOperator& op, int site) {
    check_site(site, op.n_qubits());
    const Eigen::MatrixXcd& w = op.entries();
    Eigen::MatrixXcd g = w;
    for (PauliKind p : {PauliKind::X, PauliKind::Y, PauliKind::Z}) {
        Eigen::MatrixXcd conj = w;
        apply_pauli_left(conj, p, site);
        apply_pauli_right(conj, p, site);
        g += conj;
    }
    g *= 0.25;
    return std::ldexp(w.squaredNorm() - g.squaredNorm(), -op.n_qubits());
}

} // namespace scramble
