#include "wqed/oracle.hpp"

#include <cmath>

#include "wqed/errors.hpp"
#include "wqed/phase.hpp"

namespace wqed {

namespace {

const std::complex<double> I{0.0, 1.0};

// Jump conditions for a delta coupling of strength V = sqrt(gamma / 2):
//   right movers: -i (b_R - a_R) + V e = 0
//   left movers:  +i (b_L - a_L) + V e = 0
// where a_* live on the incoming side (x < 0) and b_* between emitter and
// wall (0 < x < a). The emitter equation uses the field averaged across
// the discontinuity, (a_R + a_L + b_R + b_L) / 2.

void add_channel(Eigen::MatrixXcd& A, Eigen::VectorXcd& b, int row0, int col0,
                 double k, double a, double V, int ecol, bool incoming) {
    // col0 + 0: aL, col0 + 1: bR, col0 + 2: bL. The incoming right mover
    // has fixed unit amplitude and lands on the right-hand side.
    A(row0 + 0, col0 + 1) = -I;
    A(row0 + 0, ecol) = V;
    if (incoming) b(row0 + 0) = -I;
    A(row0 + 1, col0 + 2) = I;
    A(row0 + 1, col0 + 0) = -I;
    A(row0 + 1, ecol) = V;
    // Hard wall at x = a: the field vanishes there.
    A(row0 + 2, col0 + 1) = phase_factor(k * a);
    A(row0 + 2, col0 + 2) = phase_factor(-k * a);
}

// Emitter amplitude equation (detuning) e + V avg_field = 0, with the
// incoming unit amplitude moved to the right-hand side. The + sign on V
// must match the + sign in the jump rows; flipping only one of them turns
// decay into gain.
void add_emitter_row(Eigen::MatrixXcd& A, Eigen::VectorXcd& b, int row,
                     std::complex<double> detuning, double V, int ecol,
                     const std::vector<int>& field_cols, bool incoming) {
    A(row, ecol) = detuning;
    for (int c : field_cols) A(row, c) = V / 2.0;
    if (incoming) b(row) = -V / 2.0;
}

LinearScatterProblem one_channel_problem(double gamma, double gamma_prime,
                                         double transition, double omega, double a,
                                         std::vector<std::string> names) {
    const double V = std::sqrt(gamma / 2.0);
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(4, 4);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(4);
    add_channel(A, b, 0, 0, omega, a, V, 3, true);
    add_emitter_row(A, b, 3, {transition - omega, -gamma_prime / 2.0}, V, 3,
                    {0, 1, 2}, true);
    return {std::move(A), std::move(b), std::move(names)};
}

}  // namespace

LinearScatterProblem::Solution LinearScatterProblem::solve() const {
    Solution s;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(lhs);
    const auto& sv = svd.singularValues();
    s.condition_number = sv(0) / sv(sv.size() - 1);
    if (!(s.condition_number < 1e12))
        throw SingularSystem("scattering system condition number " +
                             std::to_string(s.condition_number));
    s.coeffs = lhs.partialPivLu().solve(rhs);
    s.residual = (lhs * s.coeffs - rhs).norm();
    return s;
}

LinearScatterProblem ground_scatter_problem(const SystemParams4LS& p, double omega) {
    require_valid(p);
    const double V = std::sqrt(p.gamma / 2.0);
    const double k1 = omega;                 // emitter in 1, elastic channel
    const double k3 = omega - p.omega13();   // emitter in 3, shifted photon
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(7, 7);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(7);
    add_channel(A, b, 0, 0, k1, p.a, V, 6, true);
    add_channel(A, b, 3, 3, k3, p.a, V, 6, false);
    add_emitter_row(A, b, 6, {p.omega12 - omega, -p.gamma_prime / 2.0}, V, 6,
                    {0, 1, 2, 3, 4, 5}, true);
    return {std::move(A), std::move(b),
            {"a1L", "b1R", "b1L", "a3L", "b3R", "b3L", "e2"}};
}

LinearScatterProblem meta_resonant_scatter_problem(const SystemParams4LS& p,
                                                   double omega) {
    require_valid(p);
    return one_channel_problem(p.gamma, p.gamma_prime, p.omega34, omega, p.a,
                               {"aL", "bR", "bL", "e4"});
}

LinearScatterProblem meta_raman_scatter_problem(const SystemParams4LS& p,
                                                double omega) {
    require_valid(p);
    const double V = std::sqrt(p.gamma / 2.0);
    const double k3 = omega;                 // incoming on the 3 <-> 2 line
    const double k1 = omega + p.omega13();   // released back to level 1
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(7, 7);
    Eigen::VectorXcd b = Eigen::VectorXcd::Zero(7);
    add_channel(A, b, 0, 0, k3, p.a, V, 6, true);
    add_channel(A, b, 3, 3, k1, p.a, V, 6, false);
    add_emitter_row(A, b, 6, {p.omega32 - omega, -p.gamma_prime / 2.0}, V, 6,
                    {0, 1, 2, 3, 4, 5}, true);
    return {std::move(A), std::move(b),
            {"a3L", "b3R", "b3L", "a1L", "b1R", "b1L", "e2"}};
}

LinearScatterProblem three_ls_scatter_problem(const SystemParams3LS& p, double omega) {
    require_valid(p);
    return one_channel_problem(p.gamma, p.gamma_prime, p.omega_eg, omega, p.a,
                               {"aL", "bR", "bL", "e"});
}

namespace {

LinearScatterProblem::Solution solve_with_diag(const LinearScatterProblem& prob,
                                               LinearScatterProblem::Solution* diag) {
    auto s = prob.solve();
    if (diag) *diag = s;
    return s;
}

}  // namespace

std::pair<std::complex<double>, std::complex<double>> oracle_reflect_from_ground(
    const SystemParams4LS& p, double omega, LinearScatterProblem::Solution* diag) {
    auto s = solve_with_diag(ground_scatter_problem(p, omega), diag);
    return {s.coeffs(0), s.coeffs(3)};
}

std::complex<double> oracle_reflect_from_meta(const SystemParams4LS& p, double omega,
                                              LinearScatterProblem::Solution* diag) {
    auto s = solve_with_diag(meta_resonant_scatter_problem(p, omega), diag);
    return s.coeffs(0);
}

std::pair<std::complex<double>, std::complex<double>> oracle_reflect_raman(
    const SystemParams4LS& p, double omega, LinearScatterProblem::Solution* diag) {
    auto s = solve_with_diag(meta_raman_scatter_problem(p, omega), diag);
    return {s.coeffs(0), s.coeffs(3)};
}

std::complex<double> oracle_reflect_3ls(const SystemParams3LS& p, double omega,
                                        LinearScatterProblem::Solution* diag) {
    auto s = solve_with_diag(three_ls_scatter_problem(p, omega), diag);
    return s.coeffs(0);
}

}  // namespace wqed
