#include <complex>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wqed/errors.hpp"
#include "wqed/oracle.hpp"
#include "wqed/phase.hpp"

using namespace wqed;
using namespace wqed::testing;
using cplx = std::complex<double>;

namespace {

// Second operating point, deliberately off both phase conditions, to pin
// the oracle away from any special geometry.
SystemParams4LS offgrid_4ls() {
    SystemParams4LS p;
    p.gamma = 2.0;
    p.gamma_prime = 0.5;
    p.omega12 = 700.0;
    p.omega32 = 300.0;
    p.omega34 = p.omega1 = p.omega12;
    p.omega0 = 420.0;
    p.a = 0.8;
    return p;
}

SystemParams3LS tight_3ls() {
    SystemParams3LS p;
    p.gamma = 3.0;
    p.gamma_prime = 1.1;
    p.a = 0.31;
    p.omega_eg = 89.0 * kPi / (2.0 * p.a);
    p.omega1 = p.omega_eg;
    p.omega0 = p.omega_eg + 30.0 * kPi / p.a;
    return p;
}

bool near(cplx z, double re, double im, double tol = 1e-10) {
    return std::abs(z - cplx(re, im)) < tol;
}

}  // namespace

TEST_CASE("oracle matches frozen values at the reference point") {
    auto p = reference_4ls(0.05);
    auto [r11, r13] = oracle_reflect_from_ground(p, p.omega1 + 0.3);
    CHECK(near(r11, 3.347666947937600e-02, -1.284701606018458e-01));
    CHECK(near(r13, -9.660733642696115e-01, -1.584656608043390e-01));

    auto [r33, r31] = oracle_reflect_raman(p, p.omega32 - 0.7);
    CHECK(near(r33, 1.190965692717173e-01, 2.727881404599855e-01));
    CHECK(near(r31, -8.784544309815625e-01, 3.427309877975150e-01));

    cplx R3 = oracle_reflect_from_meta(p, p.omega12 + 2.1);
    CHECK(near(R3, 7.507949703530941e-01, -6.454233542662923e-01));
}

TEST_CASE("oracle matches frozen values off the phase conditions") {
    auto p = offgrid_4ls();
    CHECK_FALSE(validate_params(p).gate_conditions_met);

    auto [r11, r13] = oracle_reflect_from_ground(p, 701.3);
    CHECK(near(r11, -1.518223877667904e-01, -1.060900652697761e-02));
    CHECK(near(r13, -5.469045309501517e-01, -7.097725386749046e-01));

    auto [r33, r31] = oracle_reflect_raman(p, 302.2);
    CHECK(near(r33, -9.083579914978298e-01, 3.129201078230036e-01));
    CHECK(near(r31, 2.322665100137166e-01, 2.539881519113433e-02));

    cplx R3 = oracle_reflect_from_meta(p, 699.1);
    CHECK(near(R3, -9.744382489520651e-01, -1.784541183343787e-01));
}

TEST_CASE("oracle matches frozen three level values") {
    SystemParams3LS g3 = reference_3ls();
    g3.gamma_prime = 0.2;
    cplx rg = oracle_reflect_3ls(g3, g3.omega_eg + 1.234);
    CHECK(near(rg, 1.971010358963883e-01, -9.025051524106877e-01));

    auto g4 = tight_3ls();
    cplx rg4 = oracle_reflect_3ls(g4, g4.omega_eg - 3.24);
    CHECK(near(rg4, 2.943280026305108e-01, -7.551813624577333e-01));
}

TEST_CASE("oracle solutions satisfy their own linear systems") {
    auto p = reference_4ls(0.3);
    for (double w : {p.omega1 + 0.1, p.omega32 - 2.0, p.omega0 + 1.0}) {
        LinearScatterProblem::Solution diag;
        oracle_reflect_from_ground(p, w, &diag);
        CHECK(diag.residual < 1e-10);
        CHECK(diag.condition_number < 1e12);
        oracle_reflect_raman(p, w - p.omega13(), &diag);
        CHECK(diag.residual < 1e-10);
        oracle_reflect_from_meta(p, w, &diag);
        CHECK(diag.residual < 1e-10);
    }
    auto p3 = reference_3ls(0.1);
    LinearScatterProblem::Solution diag;
    oracle_reflect_3ls(p3, p3.omega_eg + 0.4, &diag);
    CHECK(diag.residual < 1e-10);
}

TEST_CASE("oracle problems expose labeled unknowns") {
    auto p = reference_4ls();
    auto prob = ground_scatter_problem(p, p.omega1 + 1.0);
    CHECK(prob.unknowns.size() == 7);
    CHECK(prob.lhs.rows() == 7);
    CHECK(prob.unknowns[0] == "a1L");
    CHECK(prob.unknowns[6] == "e2");
    auto meta = meta_resonant_scatter_problem(p, p.omega1 + 1.0);
    CHECK(meta.unknowns.size() == 4);
}

TEST_CASE("oracle conserves photon flux without parasitic loss") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto p = random_accepted_4ls(rng, false);
        const double w = probe_frequency(rng, p);
        auto [r11, r13] = oracle_reflect_from_ground(p, w);
        CHECK(std::abs(std::norm(r11) + std::norm(r13) - 1.0) < 1e-10);
        auto [r33, r31] = oracle_reflect_raman(p, w - p.omega13());
        CHECK(std::abs(std::norm(r33) + std::norm(r31) - 1.0) < 1e-10);
        CHECK(std::abs(std::abs(oracle_reflect_from_meta(p, w)) - 1.0) < 1e-10);
    }
    std::mt19937 rng3(13);
    for (int i = 0; i < 60; ++i) {
        auto p3 = random_accepted_3ls(rng3, false);
        const double w = probe_frequency(rng3, p3);
        CHECK(std::abs(std::abs(oracle_reflect_3ls(p3, w)) - 1.0) < 1e-10);
    }
}

TEST_CASE("oracle flux deficit is nonnegative with parasitic loss") {
    std::mt19937 rng(17);
    for (int i = 0; i < 60; ++i) {
        auto p = random_accepted_4ls(rng, true);
        const double w = probe_frequency(rng, p);
        auto [r11, r13] = oracle_reflect_from_ground(p, w);
        CHECK(std::norm(r11) + std::norm(r13) <= 1.0 + 1e-10);
        auto [r33, r31] = oracle_reflect_raman(p, w - p.omega13());
        CHECK(std::norm(r33) + std::norm(r31) <= 1.0 + 1e-10);
        CHECK(std::abs(oracle_reflect_from_meta(p, w)) <= 1.0 + 1e-10);
    }
}

TEST_CASE("oracle reduces to the bare mirror at zero coupling") {
    auto p = reference_4ls();
    p.gamma = 0.0;
    for (double w : {p.omega1 + 0.7, p.omega32 - 1.3, p.omega0 + 0.2}) {
        auto [r11, r13] = oracle_reflect_from_ground(p, w);
        CHECK(std::abs(r11 - mirror_amplitude(w, p.a)) < 1e-12);
        CHECK(std::abs(r13) < 1e-12);
        auto [r33, r31] = oracle_reflect_raman(p, w);
        CHECK(std::abs(r33 - mirror_amplitude(w, p.a)) < 1e-12);
        CHECK(std::abs(r31) < 1e-12);
        CHECK(std::abs(oracle_reflect_from_meta(p, w) - mirror_amplitude(w, p.a)) <
              1e-12);
    }
    auto p3 = reference_3ls();
    p3.gamma = 0.0;
    const double w3 = p3.omega_eg + 0.9;
    CHECK(std::abs(oracle_reflect_3ls(p3, w3) - mirror_amplitude(w3, p3.a)) < 1e-12);
}

TEST_CASE("oracle reports a singular system at the decoupled resonance") {
    auto p = reference_4ls();
    p.gamma = 0.0;
    CHECK_THROWS_AS(oracle_reflect_from_ground(p, p.omega12), SingularSystem);
}

TEST_CASE("oracle hits the known resonance anchors") {
    // Full Raman conversion on the resonant rail at the antinode.
    auto p = reference_4ls();
    auto [r11, r13] = oracle_reflect_from_ground(p, p.omega1);
    CHECK(std::abs(r11) < 1e-10);
    CHECK(std::abs(r13 + 1.0) < 1e-10);

    // The lossy resonance value with the emitter at an antinode.
    auto pl = reference_4ls(0.05);
    auto [r11l, r13l] = oracle_reflect_from_ground(pl, pl.omega1);
    const double s2 = std::sin(pl.omega1 * pl.a) * std::sin(pl.omega1 * pl.a);
    const double expected = -1.0 / (1.0 + pl.gamma_prime / (4.0 * pl.gamma * s2));
    CHECK(std::abs(r13l - expected) < 1e-10);

    // Elastic pi phase from level 3 on the resonant rail. The floor knob
    // is widened so the fixed geometry stays accepted at large gamma.
    for (double g : {0.1, 1.0, 10.0, 100.0}) {
        auto pg = reference_4ls();
        pg.gamma = g;
        pg.detuning_floor = 1.0;
        CHECK(std::abs(oracle_reflect_from_meta(pg, pg.omega1) + 1.0) < 1e-10);
    }

    // Two level resonance with loss.
    auto p3 = reference_3ls(0.3);
    cplx rg = oracle_reflect_3ls(p3, p3.omega_eg);
    const double exp3 = -(2.0 * p3.gamma - p3.gamma_prime) /
                        (2.0 * p3.gamma + p3.gamma_prime);
    CHECK(std::abs(rg - exp3) < 1e-10);
}
