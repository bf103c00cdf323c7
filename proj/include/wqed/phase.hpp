#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace wqed {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// e^{i x} with the argument reduced to (-pi, pi] first. Plain exp(i x)
// loses precision once x reaches a few thousand radians, and the phase
// conditions here are exact statements modulo 2 pi.
inline std::complex<double> phase_factor(double x) {
    return std::polar(1.0, std::remainder(x, two_pi));
}

// Round trip to the wall and back with no emitter in the way.
inline std::complex<double> mirror_amplitude(double omega, double a) {
    return -phase_factor(2.0 * omega * a);
}

// |x - target| modulo 2 pi, in radians.
inline double phase_distance(double x, double target) {
    return std::abs(std::remainder(x - target, two_pi));
}

}  // namespace wqed
