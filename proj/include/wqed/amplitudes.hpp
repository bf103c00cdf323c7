#pragma once

#include <complex>
#include <utility>

#include "wqed/params.hpp"

namespace wqed {

// The Raman-shifted companions of a photon frequency.
struct ShiftedFrequencies {
    double omega = 0.0;
    double omega_tilde = 0.0;  // omega - omega13, photon after storage
    double omega_bar = 0.0;    // omega + omega13, photon after release
};

ShiftedFrequencies shifted_frequencies(const SystemParams4LS& p, double omega);

// Internal state of the three-level emitter: coupled ground or shelved.
enum class AtomState { g, s };

// All five single-photon reflection amplitudes evaluated at one frequency.
struct ReflectionSet {
    std::complex<double> r11;  // elastic, emitter in 1
    std::complex<double> r13;  // Raman 1 -> 3, photon drops by omega13
    std::complex<double> r33;  // elastic, emitter in 3, on the 3 <-> 2 line
    std::complex<double> r31;  // Raman 3 -> 1, photon gains omega13
    std::complex<double> R3;   // elastic, emitter in 3, on the 3 <-> 4 line
};

// Closed-form reflection coefficients for a photon of frequency omega.
// Parameters are validated on entry; zero coupling reduces every family
// to the bare mirror.
std::pair<std::complex<double>, std::complex<double>> reflect_from_ground(
    const SystemParams4LS& p, double omega);
std::complex<double> reflect_from_meta_resonant(const SystemParams4LS& p,
                                                double omega);
std::pair<std::complex<double>, std::complex<double>> reflect_from_meta_raman(
    const SystemParams4LS& p, double omega);
std::complex<double> reflect_3ls(const SystemParams3LS& p, AtomState atom,
                                 double omega);

ReflectionSet reflection_set(const SystemParams4LS& p, double omega);

namespace detail {

// Raw closed forms on plain numbers: no validation, callable in tight
// quadrature loops and reusable by the storage module, whose branches are
// the same Lambda configuration with relabeled levels.
std::pair<std::complex<double>, std::complex<double>> ground_amplitudes(
    double gamma, double gamma_prime, double omega12, double omega32, double a,
    double omega);
std::pair<std::complex<double>, std::complex<double>> raman_amplitudes(
    double gamma, double gamma_prime, double omega12, double omega32, double a,
    double omega);
std::complex<double> elastic_two_level_amplitude(double gamma, double gamma_prime,
                                                 double transition, double a,
                                                 double omega);

}  // namespace detail

}  // namespace wqed
