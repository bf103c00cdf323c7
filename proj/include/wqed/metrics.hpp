#pragma once

#include <vector>

#include "wqed/params.hpp"
#include "wqed/pipeline.hpp"
#include "wqed/quadrature.hpp"

namespace wqed {

// Gaussian pulse in frequency with unit squared weight:
//   g^2(omega) = exp(-(omega - center)^2 / sigma^2) / (sigma sqrt(pi)).
// delta_t is the temporal duration; sigma = 1 / (2 delta_t).
struct PulseSpec {
    double center = 0.0;
    double sigma = 0.0;
    double delta_t = 0.0;

    static PulseSpec from_delta_t(double center, double delta_t);

    double amplitude(double omega) const;  // g
    double weight(double omega) const;     // g^2
};

struct GateMetrics {
    double fidelity = 0.0;
    double leakage = 0.0;
    // Largest change in either number when the per-axis point count is
    // doubled. Small values certify the grid.
    double grid_residual = 0.0;
};

// Pulse-averaged conditional-phase fidelity and leakage: wave packets of
// duration delta_t on the resonant rail (photons A and B) and on the
// storage line (photon C), pushed through the four-bounce protocol.
//
// Leakage is the linear probability missing from the returned state,
// 1 - N with N the squared norm of the final three-photon amplitude. The
// doubly squared variant 1 - N^2 is deliberately not reported; see the
// README note on this definition.
//
// Throws PulseOverlap when the pulse bandwidth reaches the Raman-shifted
// branch (omega13 < 20 sigma) and GridNotConverged when doubling the grid
// moves either number by more than 1e-4.
GateMetrics fidelity_4ls(const SystemParams4LS& p, double delta_t,
                         const QuadratureGrid& grid = {},
                         const ProtocolOptions& opt = {});

// Same fidelity from the explicit two-axis tensor quadrature instead of
// factored single-axis moments. Diagnostic only: the two routes agree to
// quadrature accuracy exactly when the branch bookkeeping is consistent.
double fidelity_4ls_tensor(const SystemParams4LS& p, double delta_t,
                           const QuadratureGrid& grid = {},
                           const ProtocolOptions& opt = {});

// Pulse-averaged fidelity and leakage of the three-level photon-photon
// gate, one axis per photon collapsed to a single quadrature by symmetry.
GateMetrics fidelity_3ls(const SystemParams3LS& p, double delta_t,
                         const QuadratureGrid& grid = {});

struct SweepRow {
    double delta_t = 0.0;
    double purcell = 0.0;  // gamma / gamma_prime; +inf encodes lossless
    double fidelity = 0.0;
    double leakage = 0.0;
    double grid_residual = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

// Cartesian sweep over pulse durations and Purcell factors, delta_t major.
// Rows are evaluated concurrently and returned in input order. A purcell
// value of +inf selects gamma_prime = 0 exactly; finite values override
// gamma_prime = gamma / purcell.
SweepResult fidelity_sweep(const SystemParams4LS& p,
                           const std::vector<double>& delta_ts,
                           const std::vector<double>& purcells,
                           const QuadratureGrid& grid = {},
                           const ProtocolOptions& opt = {});
SweepResult fidelity_sweep(const SystemParams3LS& p,
                           const std::vector<double>& delta_ts,
                           const std::vector<double>& purcells,
                           const QuadratureGrid& grid = {});

// Leakage versus Purcell factor at fixed pulse duration.
SweepResult leakage_sweep_4ls(const SystemParams4LS& p, double delta_t,
                              const std::vector<double>& purcells,
                              const QuadratureGrid& grid = {},
                              const ProtocolOptions& opt = {});

}  // namespace wqed
