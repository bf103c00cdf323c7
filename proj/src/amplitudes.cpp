#include "wqed/amplitudes.hpp"

#include <cmath>

#include "wqed/errors.hpp"
#include "wqed/phase.hpp"

namespace wqed {

namespace detail {

namespace {

const std::complex<double> I{0.0, 1.0};

}  // namespace

// Lambda configuration: incoming photon omega on the 1 <-> 2 line, emitter
// starting in 1. Elastic return keeps the frequency; the Raman branch
// shifts it down to omega - (omega12 - omega32) and parks the emitter in 3.
// Both share the denominator of the dressed resonance.
std::pair<std::complex<double>, std::complex<double>> ground_amplitudes(
    double gamma, double gamma_prime, double omega12, double omega32, double a,
    double omega) {
    if (gamma == 0.0) return {mirror_amplitude(omega, a), 0.0};
    const double omega13 = omega12 - omega32;
    const std::complex<double> e2w = phase_factor(2.0 * omega * a);
    const std::complex<double> e2wt = phase_factor(2.0 * (omega - omega13) * a);
    const std::complex<double> ig2 = I * gamma / 2.0;
    const std::complex<double> den =
        omega12 - I * gamma_prime / 2.0 - omega + ig2 * (e2wt + e2w - 2.0);
    const std::complex<double> r11 =
        e2w * (-omega12 + I * gamma_prime / 2.0 + omega -
               ig2 * (e2wt - std::conj(e2w))) /
        den;
    const std::complex<double> r13 = ig2 * (e2w - 1.0) * (e2wt - 1.0) / den;
    return {r11, r13};
}

// Same Lambda configuration entered from level 3 on the 3 <-> 2 line: the
// elastic branch stays at omega, the inverse Raman branch releases the
// photon at omega + omega13 and returns the emitter to 1. Obtained from
// ground_amplitudes by swapping the roles of the two stable levels.
std::pair<std::complex<double>, std::complex<double>> raman_amplitudes(
    double gamma, double gamma_prime, double omega12, double omega32, double a,
    double omega) {
    if (gamma == 0.0) return {mirror_amplitude(omega, a), 0.0};
    const double omega13 = omega12 - omega32;
    const std::complex<double> e2w = phase_factor(2.0 * omega * a);
    const std::complex<double> e2wb = phase_factor(2.0 * (omega + omega13) * a);
    const std::complex<double> ig2 = I * gamma / 2.0;
    const std::complex<double> den =
        omega32 - I * gamma_prime / 2.0 - omega + ig2 * (e2wb + e2w - 2.0);
    const std::complex<double> r33 =
        e2w * (-omega32 + I * gamma_prime / 2.0 + omega -
               ig2 * (e2wb - std::conj(e2w))) /
        den;
    const std::complex<double> r31 = ig2 * (e2w - 1.0) * (e2wb - 1.0) / den;
    return {r33, r31};
}

// Plain two-level reflection in front of the wall; also covers the
// 3 <-> 4 line of the four-level emitter, which has no second decay path.
std::complex<double> elastic_two_level_amplitude(double gamma, double gamma_prime,
                                                 double transition, double a,
                                                 double omega) {
    if (gamma == 0.0) return mirror_amplitude(omega, a);
    const std::complex<double> e2w = phase_factor(2.0 * omega * a);
    const std::complex<double> d{transition - omega, -gamma_prime / 2.0};
    const std::complex<double> ig2 = I * gamma / 2.0;
    return (-d * e2w + ig2 * (1.0 - e2w)) / (d - ig2 * (1.0 - e2w));
}

}  // namespace detail

ShiftedFrequencies shifted_frequencies(const SystemParams4LS& p, double omega) {
    require_valid(p);
    return {omega, omega - p.omega13(), omega + p.omega13()};
}

std::pair<std::complex<double>, std::complex<double>> reflect_from_ground(
    const SystemParams4LS& p, double omega) {
    require_valid(p);
    return detail::ground_amplitudes(p.gamma, p.gamma_prime, p.omega12, p.omega32,
                                     p.a, omega);
}

std::complex<double> reflect_from_meta_resonant(const SystemParams4LS& p,
                                                double omega) {
    require_valid(p);
    return detail::elastic_two_level_amplitude(p.gamma, p.gamma_prime, p.omega34,
                                               p.a, omega);
}

std::pair<std::complex<double>, std::complex<double>> reflect_from_meta_raman(
    const SystemParams4LS& p, double omega) {
    require_valid(p);
    return detail::raman_amplitudes(p.gamma, p.gamma_prime, p.omega12, p.omega32,
                                    p.a, omega);
}

std::complex<double> reflect_3ls(const SystemParams3LS& p, AtomState atom,
                                 double omega) {
    require_valid(p);
    if (atom == AtomState::s) return mirror_amplitude(omega, p.a);
    return detail::elastic_two_level_amplitude(p.gamma, p.gamma_prime, p.omega_eg,
                                               p.a, omega);
}

ReflectionSet reflection_set(const SystemParams4LS& p, double omega) {
    require_valid(p);
    ReflectionSet s;
    auto g = detail::ground_amplitudes(p.gamma, p.gamma_prime, p.omega12, p.omega32,
                                       p.a, omega);
    s.r11 = g.first;
    s.r13 = g.second;
    auto m = detail::raman_amplitudes(p.gamma, p.gamma_prime, p.omega12, p.omega32,
                                      p.a, omega);
    s.r33 = m.first;
    s.r31 = m.second;
    s.R3 = detail::elastic_two_level_amplitude(p.gamma, p.gamma_prime, p.omega34,
                                               p.a, omega);
    return s;
}

}  // namespace wqed
