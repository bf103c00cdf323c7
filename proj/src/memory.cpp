#include "wqed/memory.hpp"

#include <cmath>
#include <string>

#include "wqed/amplitudes.hpp"
#include "wqed/errors.hpp"

namespace wqed {

namespace {

constexpr double kNormTol = 1e-6;

}  // namespace

double MatterQubit::norm_sq() const {
    return std::norm(alpha) + std::norm(beta);
}

StoreResult store(const MemoryParams& mp, std::complex<double> alpha,
                  std::complex<double> beta) {
    require_valid(mp);
    const double n = std::norm(alpha) + std::norm(beta);
    if (std::abs(n - 1.0) > kNormTol)
        throw InvalidParams("store: photonic qubit weight " + std::to_string(n) +
                            " is not 1");
    const auto b0 = detail::ground_amplitudes(mp.gamma, mp.gamma_prime,
                                              mp.omega_e0g, mp.omega_es, mp.a,
                                              mp.omega_e0g);
    const auto b1 = detail::ground_amplitudes(mp.gamma, mp.gamma_prime,
                                              mp.omega_e1g, mp.omega_es, mp.a,
                                              mp.omega_e1g);
    StoreResult out;
    out.qubit.alpha = alpha * b0.second;
    out.qubit.beta = beta * b1.second;
    out.c_photon_freq = mp.omega_es;
    return out;
}

PhotonQubit retrieve(const MemoryParams& mp, const MatterQubit& q) {
    require_valid(mp);
    const auto b0 = detail::raman_amplitudes(mp.gamma, mp.gamma_prime,
                                             mp.omega_e0g, mp.omega_es, mp.a,
                                             mp.omega_es);
    const auto b1 = detail::raman_amplitudes(mp.gamma, mp.gamma_prime,
                                             mp.omega_e1g, mp.omega_es, mp.a,
                                             mp.omega_es);
    PhotonQubit out;
    out.alpha = q.alpha * b0.second;
    out.beta = q.beta * b1.second;
    return out;
}

double round_trip_fidelity(const MemoryParams& mp, std::complex<double> alpha,
                           std::complex<double> beta) {
    const auto stored = store(mp, alpha, beta);
    const auto back = retrieve(mp, stored.qubit);
    return std::norm(std::conj(alpha) * back.alpha +
                     std::conj(beta) * back.beta);
}

}  // namespace wqed
