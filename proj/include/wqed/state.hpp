#pragma once

#include <complex>
#include <vector>

namespace wqed {

// Which protocol slot a photon was injected in. Labels are bookkeeping:
// terms are kept distinguishable by label order, and any physical
// indistinguishability is handled at extraction time.
enum class PhotonLabel { A, B, C };

struct Photon {
    PhotonLabel label;
    double frequency = 0.0;
};

// One branch of the protocol superposition: a labeled photon frequency
// tuple plus the emitter's stable level. amplitude is the raw product of
// reflection coefficients along the path; normalized_amplitude has the
// trivial propagation phase of each leg divided out, so on the phase
// conditions it exposes the gate's conditional sign directly. Both add
// under merging.
struct Term {
    std::vector<Photon> photons;  // in injection order
    int emitter_state = 1;        // stable level, 1 or 3
    // Index of the photon parked on the storage line, -1 if none. Each
    // branch of the path expansion knows which inelastic event produced
    // it, so the parked photon is tracked explicitly rather than guessed
    // from its frequency.
    int stored = -1;
    std::complex<double> amplitude{0.0, 0.0};
    std::complex<double> normalized_amplitude{0.0, 0.0};
};

struct MultiPhotonState {
    std::vector<Term> terms;
    double freq_tol = 1e-9;  // frequencies closer than this are the same mode

    // Merge t into an existing term with the same emitter state and the
    // same labeled frequency tuple, or append it. Terms with negligible
    // amplitude are dropped.
    void add(Term t);

    double norm_sq() const;  // sum of |amplitude|^2 over terms
};

}  // namespace wqed
