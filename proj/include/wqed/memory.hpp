#pragma once

#include <complex>

#include "wqed/params.hpp"

namespace wqed {

// Matter-side qubit left behind by storage: amplitudes on the two
// metastable levels. Carries weight at most 1; parasitic decay is the
// only sink.
struct MatterQubit {
    std::complex<double> alpha{0.0, 0.0};  // on s0
    std::complex<double> beta{0.0, 0.0};   // on s1

    double norm_sq() const;
};

struct StoreResult {
    MatterQubit qubit;
    // Both branches release their auxiliary photon at this one frequency,
    // so nothing in the field records which branch fired.
    double c_photon_freq = 0.0;
};

// Map a frequency-encoded photonic qubit alpha on omega_e0g plus beta on
// omega_e1g onto the metastable pair. Each branch is the trapping step of
// the protocol with the upper line relabeled to its own transition and the
// storage line to omega_es, driven at its own resonance. Ideal parameters
// store (-alpha, -beta): the shared -1 is a global phase and is reported,
// not cancelled. The input must be normalized to 1 within 1e-6.
StoreResult store(const MemoryParams& mp, std::complex<double> alpha,
                  std::complex<double> beta);

// Photon-side qubit produced by retrieval, amplitudes on the two rails.
struct PhotonQubit {
    std::complex<double> alpha{0.0, 0.0};  // on omega_e0g
    std::complex<double> beta{0.0, 0.0};   // on omega_e1g
};

// Send the auxiliary photon back in and release the stored excitation.
// retrieve(store(alpha, beta)) returns (alpha, beta) exactly when
// gamma_prime is zero: the two -1 trap factors cancel.
PhotonQubit retrieve(const MemoryParams& mp, const MatterQubit& q);

// Squared overlap of input and output qubits after a full store and
// retrieve cycle. Insensitive to the global phase.
double round_trip_fidelity(const MemoryParams& mp, std::complex<double> alpha,
                           std::complex<double> beta);

}  // namespace wqed
