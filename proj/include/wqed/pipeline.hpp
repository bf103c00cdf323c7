#pragma once

#include <complex>

#include "wqed/amplitudes.hpp"
#include "wqed/params.hpp"
#include "wqed/state.hpp"

namespace wqed {

struct ProtocolOptions {
    // Multiply the control pass on emitter-1 branches by the bare mirror
    // phase instead of 1. Normalized amplitudes are invariant under this
    // flag; raw amplitudes pick up the extra phase.
    bool c_trivial_phase = false;
};

// True when frequency sits closer to the storage line than to either
// qubit rail.
bool is_raman_band(const SystemParams4LS& p, double frequency);

// The four bounces of the controlled-phase protocol. Each step scatters
// one labeled photon off the emitter-mirror system and branches the state:
// a photon meeting the emitter in 1 splits into elastic and Raman legs; a
// photon meeting it in 3 reflects elastically off the far-detuned upper
// line when it is in the qubit band, and splits into stay and release legs
// on the storage line when it is in the Raman band.
MultiPhotonState step1_trap(const SystemParams4LS& p, double omega_A);
MultiPhotonState step2_phase(const SystemParams4LS& p, const MultiPhotonState& state,
                             double omega_B);
MultiPhotonState step3_retrieve_A(const SystemParams4LS& p,
                                  const MultiPhotonState& state);
MultiPhotonState step4_retrieve_B(const SystemParams4LS& p,
                                  const MultiPhotonState& state, double omega_C,
                                  const ProtocolOptions& opt = {});

MultiPhotonState run_protocol(const SystemParams4LS& p, double omega_A,
                              double omega_B, double omega_C,
                              const ProtocolOptions& opt = {});

// Conditional amplitudes of the two-qubit gate on the computational basis.
struct TruthTable {
    std::complex<double> t00, t01, t10, t11;

    std::complex<double> entry(int i, int j) const;
};

// Run the protocol on all four rail combinations with the control photon
// on the storage line, and read off the coherent amplitude that returns
// every photon to the expected output mode.
TruthTable truth_table(const SystemParams4LS& p, const ProtocolOptions& opt = {});

// Which way the externally driven pi/2 rotation pair is ordered in the
// three-level scheme. Both orders disentangle the atom; they place the
// conditional minus sign on different basis entries.
enum class RotationConvention { plus_first, minus_first };

// Reflection amplitudes of one photon pass, normalized to the bare mirror
// phase: rows are the photon rails (0 and 1), columns the atom states.
struct PhotonAtomTable {
    std::complex<double> amp[2][2];

    std::complex<double> entry(int rail, AtomState atom) const;
};

PhotonAtomTable three_ls_photon_atom_gate(const SystemParams3LS& p);

struct PhotonPhotonResult {
    TruthTable table;
    double atom_entropy = 0.0;  // residual atom entanglement, ideally 0
    std::complex<double> cz_invariant{0.0, 0.0};  // t00 t11 / (t01 t10)
};

// Photon-photon gate via the atom ancilla: bounce, rotate, bounce, rotate
// back, bounce again. Throws AtomNotDisentangled when the atom keeps more
// than 1e-9 of entanglement entropy across the four basis runs.
PhotonPhotonResult three_ls_photon_photon_gate(
    const SystemParams3LS& p,
    RotationConvention convention = RotationConvention::plus_first);

}  // namespace wqed
