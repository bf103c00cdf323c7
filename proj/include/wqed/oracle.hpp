#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "wqed/params.hpp"

namespace wqed {

// One single-excitation scattering boundary-value problem in matrix form,
// built directly from the stationary Schroedinger equation: delta jump
// conditions at the emitter, the emitter amplitude equation, and the hard
// wall condition per open channel. Solved numerically, with no reference
// to the closed-form reflection coefficients, so it can serve as an
// independent check on them.
struct LinearScatterProblem {
    Eigen::MatrixXcd lhs;
    Eigen::VectorXcd rhs;
    std::vector<std::string> unknowns;

    struct Solution {
        Eigen::VectorXcd coeffs;
        double condition_number = 0.0;
        double residual = 0.0;  // |lhs x - rhs|
    };

    // Dense LU solve with an SVD condition estimate. Throws SingularSystem
    // when the condition number exceeds 1e12.
    Solution solve() const;
};

// Photon omega on the emitter in level 1: two coupled outgoing channels,
// elastic (emitter stays in 1) and Raman (emitter ends in 3, photon at
// omega - omega13). Unknowns: a1L, b1R, b1L, a3L, b3R, b3L, e2.
LinearScatterProblem ground_scatter_problem(const SystemParams4LS& p, double omega);

// Photon omega on the emitter in level 3, driving 3 <-> 4: one elastic
// channel. Unknowns: aL, bR, bL, e4.
LinearScatterProblem meta_resonant_scatter_problem(const SystemParams4LS& p, double omega);

// Photon omega on the emitter in level 3, driving 3 <-> 2: elastic channel
// plus inverse Raman channel back to level 1 at omega + omega13.
// Unknowns: a3L, b3R, b3L, a1L, b1R, b1L, e2.
LinearScatterProblem meta_raman_scatter_problem(const SystemParams4LS& p, double omega);

// Photon omega on the two-level transition of the three-level emitter.
// Unknowns: aL, bR, bL, e.
LinearScatterProblem three_ls_scatter_problem(const SystemParams3LS& p, double omega);

// Reflection coefficients read off the solved problems. The optional diag
// pointer receives the full solution for inspection.
std::pair<std::complex<double>, std::complex<double>> oracle_reflect_from_ground(
    const SystemParams4LS& p, double omega,
    LinearScatterProblem::Solution* diag = nullptr);

std::complex<double> oracle_reflect_from_meta(
    const SystemParams4LS& p, double omega,
    LinearScatterProblem::Solution* diag = nullptr);

std::pair<std::complex<double>, std::complex<double>> oracle_reflect_raman(
    const SystemParams4LS& p, double omega,
    LinearScatterProblem::Solution* diag = nullptr);

std::complex<double> oracle_reflect_3ls(
    const SystemParams3LS& p, double omega,
    LinearScatterProblem::Solution* diag = nullptr);

}  // namespace wqed
