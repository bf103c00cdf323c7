#include "wqed/params.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "wqed/errors.hpp"
#include "wqed/phase.hpp"

namespace wqed {

namespace {

constexpr double kRelTol = 1e-9;

bool close_rel(double x, double y) {
    return std::abs(x - y) <= kRelTol * std::max({1.0, std::abs(x), std::abs(y)});
}

void push(std::vector<ValidationCheck>& v, std::string name, bool pass,
          double residual, bool advisory = false) {
    v.push_back({std::move(name), pass, residual, advisory});
}

void check_nonnegative(std::vector<ValidationCheck>& v, const char* name, double x) {
    push(v, name, x >= 0.0, x >= 0.0 ? 0.0 : -x);
}

void check_positive(std::vector<ValidationCheck>& v, const char* name, double x) {
    push(v, name, x > 0.0, x > 0.0 ? 0.0 : -x);
}

// |e^{2 i omega a} - 1|; small near a field node of the standing wave.
double node_gap(double omega, double a) {
    return std::abs(phase_factor(2.0 * omega * a) - 1.0);
}

}  // namespace

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.advisory && !c.pass) return false;
    return true;
}

std::string ValidationReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
        if (c.advisory) os << " (advisory)";
        if (!c.pass) os << "  residual=" << c.residual;
        os << '\n';
    }
    os << "gate_conditions_met=" << (gate_conditions_met ? "true" : "false") << '\n';
    return os.str();
}

ValidationReport validate_params(const SystemParams4LS& p) {
    ValidationReport r;
    auto& v = r.checks;

    check_nonnegative(v, "gamma_nonnegative", p.gamma);
    check_nonnegative(v, "gamma_prime_nonnegative", p.gamma_prime);
    check_positive(v, "mirror_distance_positive", p.a);
    check_positive(v, "omega12_positive", p.omega12);
    check_positive(v, "omega32_positive", p.omega32);
    check_positive(v, "omega0_positive", p.omega0);

    push(v, "omega1_matches_omega12", close_rel(p.omega1, p.omega12),
         std::abs(p.omega1 - p.omega12));
    push(v, "omega34_matches_omega12", close_rel(p.omega34, p.omega12),
         std::abs(p.omega34 - p.omega12));

    // Level 3 sits below level 2's partner: the Raman shift must be positive.
    const double shift = p.omega13();
    push(v, "raman_shift_positive", shift > 0.0, shift > 0.0 ? 0.0 : -shift);

    const double floor_abs = p.detuning_floor * p.gamma;
    const double d32 = std::abs(p.omega32 - p.omega12);
    push(v, "omega32_detuning_floor", d32 >= floor_abs, std::max(0.0, floor_abs - d32));
    const double d0 = std::abs(p.omega0 - p.omega12);
    push(v, "omega0_detuning_floor", d0 >= floor_abs, std::max(0.0, floor_abs - d0));

    const double gap = node_gap(p.omega1, p.a);
    push(v, "emitter_off_node", gap > p.node_floor, std::max(0.0, p.node_floor - gap));

    // The two protocol phase conditions. Reported, not enforced: off
    // condition the amplitudes are still well defined, only the gate
    // tables degrade.
    const double res_trap = phase_distance(2.0 * (p.omega12 + p.omega32) * p.a, 0.0);
    push(v, "condition_trap_phase", res_trap < p.cond_tol, res_trap, true);
    const double res0 = phase_distance(2.0 * p.omega0 * p.a, std::numbers::pi);
    push(v, "condition_omega0_phase", res0 < p.cond_tol, res0, true);
    r.gate_conditions_met = res_trap < p.cond_tol && res0 < p.cond_tol;

    return r;
}

ValidationReport validate_params(const SystemParams3LS& p) {
    ValidationReport r;
    auto& v = r.checks;

    check_nonnegative(v, "gamma_nonnegative", p.gamma);
    check_nonnegative(v, "gamma_prime_nonnegative", p.gamma_prime);
    check_positive(v, "mirror_distance_positive", p.a);
    check_positive(v, "omega_eg_positive", p.omega_eg);
    check_positive(v, "omega0_positive", p.omega0);

    push(v, "omega1_matches_omega_eg", close_rel(p.omega1, p.omega_eg),
         std::abs(p.omega1 - p.omega_eg));

    const double floor_abs = p.detuning_floor * p.gamma;
    const double d0 = std::abs(p.omega0 - p.omega_eg);
    push(v, "omega0_detuning_floor", d0 >= floor_abs, std::max(0.0, floor_abs - d0));

    // Both rails must sit at a field antinode; the scheme has no working
    // point away from these conditions, so they are hard here.
    const double res_eg = phase_distance(2.0 * p.omega_eg * p.a, std::numbers::pi);
    push(v, "condition_omega_eg_phase", res_eg < p.cond_tol, res_eg);
    const double res0 = phase_distance(2.0 * p.omega0 * p.a, std::numbers::pi);
    push(v, "condition_omega0_phase", res0 < p.cond_tol, res0);
    r.gate_conditions_met = res_eg < p.cond_tol && res0 < p.cond_tol;

    return r;
}

ValidationReport validate_memory_params(const MemoryParams& mp) {
    ValidationReport r;
    auto& v = r.checks;

    check_nonnegative(v, "gamma_nonnegative", mp.gamma);
    check_nonnegative(v, "gamma_prime_nonnegative", mp.gamma_prime);
    check_positive(v, "mirror_distance_positive", mp.a);
    check_positive(v, "omega_e0g_positive", mp.omega_e0g);
    check_positive(v, "omega_e1g_positive", mp.omega_e1g);
    check_positive(v, "omega_es_positive", mp.omega_es);

    const double floor_abs = mp.detuning_floor * mp.gamma;
    const double dbr = std::abs(mp.omega_e0g - mp.omega_e1g);
    push(v, "rail_separation_floor", dbr >= floor_abs, std::max(0.0, floor_abs - dbr));

    // Released photon frequency omega_i - omega_es must stay positive.
    const double sh0 = mp.omega_e0g - mp.omega_es;
    const double sh1 = mp.omega_e1g - mp.omega_es;
    push(v, "branch0_shift_positive", sh0 > 0.0, sh0 > 0.0 ? 0.0 : -sh0);
    push(v, "branch1_shift_positive", sh1 > 0.0, sh1 > 0.0 ? 0.0 : -sh1);

    // Trapping condition per branch, hard: storage needs full conversion.
    const double res0 = phase_distance(2.0 * (mp.omega_e0g + mp.omega_es) * mp.a, 0.0);
    push(v, "branch0_trap_phase", res0 < mp.cond_tol, res0);
    const double res1 = phase_distance(2.0 * (mp.omega_e1g + mp.omega_es) * mp.a, 0.0);
    push(v, "branch1_trap_phase", res1 < mp.cond_tol, res1);

    const double gap0 = node_gap(mp.omega_e0g, mp.a);
    push(v, "branch0_off_node", gap0 > mp.node_floor, std::max(0.0, mp.node_floor - gap0));
    const double gap1 = node_gap(mp.omega_e1g, mp.a);
    push(v, "branch1_off_node", gap1 > mp.node_floor, std::max(0.0, mp.node_floor - gap1));

    r.gate_conditions_met = res0 < mp.cond_tol && res1 < mp.cond_tol;
    return r;
}

namespace {

template <typename P>
void require_valid_impl(const P& p, ValidationReport (*f)(const P&)) {
    ValidationReport r = f(p);
    if (!r.ok()) throw InvalidParams("parameter validation failed:\n" + r.summary());
}

}  // namespace

void require_valid(const SystemParams4LS& p) { require_valid_impl(p, validate_params); }
void require_valid(const SystemParams3LS& p) { require_valid_impl(p, validate_params); }
void require_valid(const MemoryParams& mp) { require_valid_impl(mp, validate_memory_params); }

ConditionSolution solve_gate_conditions(double omega12, double omega32_target,
                                        double omega0_target, double a_target,
                                        double gamma, double detuning_floor) {
    if (!(omega12 > 0.0) || !(omega32_target > 0.0) || !(omega0_target > 0.0) ||
        !(a_target > 0.0))
        throw NoValidSolution("solve_gate_conditions: inputs must be positive");

    const double pi = std::numbers::pi;
    ConditionSolution s;
    s.a = a_target;

    // Trap condition: (omega12 + omega32) a must be an integer times pi.
    s.n1 = std::lround((omega12 + omega32_target) * a_target / pi);
    s.omega32 = static_cast<double>(s.n1) * pi / a_target - omega12;

    // omega0 condition: 2 omega0 a an odd multiple of pi.
    s.n0 = std::lround((2.0 * omega0_target * a_target / pi - 1.0) / 2.0);
    s.omega0 = (2.0 * static_cast<double>(s.n0) + 1.0) * pi / (2.0 * a_target);

    s.residuals[0] = phase_distance(2.0 * (omega12 + s.omega32) * a_target, 0.0);
    s.residuals[1] = phase_distance(2.0 * s.omega0 * a_target, pi);

    if (!(s.omega32 > 0.0))
        throw NoValidSolution("adjusted omega32 is nonpositive");
    if (!(s.omega0 > 0.0))
        throw NoValidSolution("adjusted omega0 is nonpositive");

    const double floor_abs = detuning_floor * gamma;
    if (std::abs(s.omega32 - omega12) < floor_abs)
        throw NoValidSolution("adjusted omega32 violates the detuning floor");
    if (std::abs(s.omega0 - omega12) < floor_abs)
        throw NoValidSolution("adjusted omega0 violates the detuning floor");

    // At sane magnitudes the rounding construction is exact to well below
    // this; if it is not, the requested scales are outside float range.
    if (s.residuals[0] > 1e-12 || s.residuals[1] > 1e-12)
        throw NoValidSolution("phase residuals exceed 1e-12 at these magnitudes");

    return s;
}

}  // namespace wqed
