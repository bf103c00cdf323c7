#pragma once

#include <array>
#include <string>
#include <vector>

namespace wqed {

// Four-level emitter side coupled to a semi-infinite waveguide, mirror at
// distance a. Levels 1 and 3 are stable; 2 and 4 decay into the guide at
// rate gamma and out of it at rate gamma_prime. Units: hbar = c = 1, all
// frequencies angular.
//
//        --- 4
//   2 ---
//        --- 3      omega34 = omega12, omega13 = omega12 - omega32 > 0
//   1 ---
//
// The two qubit rails are omega1 = omega12 (resonant) and omega0 (far
// detuned). detuning_floor, cond_tol and node_floor are validation knobs;
// their defaults match the protocol's operating regime.
struct SystemParams4LS {
    double gamma = 1.0;
    double gamma_prime = 0.0;
    double omega12 = 0.0;
    double omega32 = 0.0;
    double omega34 = 0.0;
    double a = 0.0;
    double omega0 = 0.0;
    double omega1 = 0.0;

    double detuning_floor = 100.0;  // min |detuning| in units of gamma
    double cond_tol = 1e-9;         // phase condition tolerance, radians
    double node_floor = 0.1;        // min |e^{2 i omega1 a} - 1|

    // Raman shift between the two stable levels.
    double omega13() const { return omega12 - omega32; }
};

// Two-level-plus-shelf emitter (ground, excited, and a decoupled state
// addressed externally). Only g <-> e couples to the guide.
struct SystemParams3LS {
    double gamma = 1.0;
    double gamma_prime = 0.0;
    double omega_eg = 0.0;
    double a = 0.0;
    double omega0 = 0.0;
    double omega1 = 0.0;  // must equal omega_eg

    double detuning_floor = 100.0;
    double cond_tol = 1e-9;
    double node_floor = 0.1;
};

// Double-Lambda storage medium: two independent branches (g, e_i, s_i),
// branch i trapping a photon at omega_ei_g and releasing one at omega_es.
struct MemoryParams {
    double gamma = 1.0;
    double gamma_prime = 0.0;
    double omega_e0g = 0.0;
    double omega_e1g = 0.0;
    double omega_es = 0.0;
    double a = 0.0;

    double detuning_floor = 100.0;
    double cond_tol = 1e-9;
    double node_floor = 0.1;
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;  // measured violation; 0 when satisfied exactly
    bool advisory = false;  // advisory rows report state but do not veto ok()
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool gate_conditions_met = false;

    bool ok() const;
    std::string summary() const;  // one line per check
};

ValidationReport validate_params(const SystemParams4LS& p);
ValidationReport validate_params(const SystemParams3LS& p);
ValidationReport validate_memory_params(const MemoryParams& mp);

// Throw InvalidParams carrying the report summary when not ok.
void require_valid(const SystemParams4LS& p);
void require_valid(const SystemParams3LS& p);
void require_valid(const MemoryParams& mp);

// omega32 and omega0 adjusted so both protocol phase conditions hold
// exactly at fixed mirror distance:
//   2 (omega12 + omega32) a = 2 pi n1
//   2 omega0 a = (2 n0 + 1) pi
struct ConditionSolution {
    double a = 0.0;
    double omega32 = 0.0;
    double omega0 = 0.0;
    long n1 = 0;
    long n0 = 0;
    std::array<double, 2> residuals{};  // trap condition, omega0 condition
};

// Nearest-integer adjustment of the targets. Throws NoValidSolution when
// the adjusted frequencies go nonpositive or violate the detuning floor.
ConditionSolution solve_gate_conditions(double omega12, double omega32_target,
                                        double omega0_target, double a_target,
                                        double gamma = 1.0,
                                        double detuning_floor = 100.0);

}  // namespace wqed
