#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace scramble {

// The single-qubit Pauli operators {1, X, Y, Z}. The numeric values double
// as base-4 digits when encoding Pauli strings.
enum class PauliKind : std::uint8_t { Identity = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(PauliKind p) {
    switch (p) {
        case PauliKind::Identity: return '1';
        case PauliKind::X: return 'X';
        case PauliKind::Y: return 'Y';
        case PauliKind::Z: return 'Z';
    }
    return '?';
}

inline PauliKind pauli_from_string(const std::string& s) {
    if (s == "1" || s == "I" || s == "Identity") return PauliKind::Identity;
    if (s == "X") return PauliKind::X;
    if (s == "Y") return PauliKind::Y;
    if (s == "Z") return PauliKind::Z;
    throw std::invalid_argument("unknown Pauli kind '" + s + "'");
}

// The six single-qubit Pauli eigenstates, used as product-state descriptors.
enum class PauliEigenstate { XPlus, XMinus, YPlus, YMinus, ZPlus, ZMinus };

// Amplitudes (on |0>, |1>) of a single-qubit Pauli eigenstate.
// Convention: Z|0> = +|0>.
inline std::array<std::complex<double>, 2> eigenstate_amplitudes(PauliEigenstate e) {
    using namespace std::complex_literals;
    const double s = 1.0 / std::sqrt(2.0);
    switch (e) {
        case PauliEigenstate::XPlus: return {s, s};
        case PauliEigenstate::XMinus: return {s, -s};
        case PauliEigenstate::YPlus: return {s, 1i * s};
        case PauliEigenstate::YMinus: return {s, -1i * s};
        case PauliEigenstate::ZPlus: return {1.0, 0.0};
        case PauliEigenstate::ZMinus: return {0.0, 1.0};
    }
    throw std::invalid_argument("unsupported eigenstate descriptor");
}

inline PauliEigenstate eigenstate_from_string(const std::string& s) {
    if (s == "X+") return PauliEigenstate::XPlus;
    if (s == "X-") return PauliEigenstate::XMinus;
    if (s == "Y+") return PauliEigenstate::YPlus;
    if (s == "Y-") return PauliEigenstate::YMinus;
    if (s == "Z+") return PauliEigenstate::ZPlus;
    if (s == "Z-") return PauliEigenstate::ZMinus;
    throw std::invalid_argument("unknown eigenstate descriptor '" + s +
                                "' (expected one of X+/X-/Y+/Y-/Z+/Z-)");
}

inline std::string eigenstate_name(PauliEigenstate e) {
    switch (e) {
        case PauliEigenstate::XPlus: return "X+";
        case PauliEigenstate::XMinus: return "X-";
        case PauliEigenstate::YPlus: return "Y+";
        case PauliEigenstate::YMinus: return "Y-";
        case PauliEigenstate::ZPlus: return "Z+";
        case PauliEigenstate::ZMinus: return "Z-";
    }
    return "?";
}

} // namespace scramble
