#include <cmath>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wqed/errors.hpp"
#include "wqed/params.hpp"
#include "wqed/phase.hpp"

using namespace wqed;
using namespace wqed::testing;

TEST_CASE("reference parameter sets validate cleanly") {
    CHECK(validate_params(reference_4ls()).ok());
    CHECK(validate_params(reference_4ls()).gate_conditions_met);
    CHECK(validate_params(reference_4ls(0.05)).ok());
    CHECK(validate_params(reference_3ls()).ok());
    CHECK(validate_params(reference_3ls()).gate_conditions_met);
    CHECK(validate_memory_params(reference_memory()).ok());
    CHECK(validate_memory_params(reference_memory(0.1)).ok());
}

TEST_CASE("4ls validation rejects bad inputs") {
    auto p = reference_4ls();
    p.gamma = -1.0;
    CHECK_FALSE(validate_params(p).ok());

    p = reference_4ls();
    p.a = 0.0;
    CHECK_FALSE(validate_params(p).ok());

    p = reference_4ls();
    p.omega1 = p.omega12 + 1.0;
    CHECK_FALSE(validate_params(p).ok());

    p = reference_4ls();
    p.omega34 = p.omega12 * 1.001;
    CHECK_FALSE(validate_params(p).ok());

    // Level ordering: the Raman shift must be positive.
    p = reference_4ls();
    p.omega32 = p.omega12 + 150.0;
    CHECK_FALSE(validate_params(p).ok());

    // Detuning floors scale with gamma.
    p = reference_4ls();
    p.omega32 = p.omega12 - 50.0;
    CHECK_FALSE(validate_params(p).ok());
    p.gamma = 0.4;
    CHECK(validate_params(p).ok());

    p = reference_4ls();
    p.omega0 = p.omega12 - 99.0;
    CHECK_FALSE(validate_params(p).ok());

    // Emitter on a field node of the resonant rail.
    p = reference_4ls();
    p.omega12 = 320.0 * kPi;
    p.omega34 = p.omega1 = p.omega12;
    p.omega32 = 180.0 * kPi;
    CHECK_FALSE(validate_params(p).ok());
    auto rep = validate_params(p);
    bool found = false;
    for (const auto& c : rep.checks)
        if (c.name == "emitter_off_node") {
            found = true;
            CHECK_FALSE(c.pass);
        }
    CHECK(found);
}

TEST_CASE("gamma zero is accepted and waives the detuning floors") {
    auto p = reference_4ls();
    p.gamma = 0.0;
    p.omega32 = p.omega12 - 1.0;
    p.omega0 = p.omega12 - 2.5;
    auto rep = validate_params(p);
    CHECK(rep.ok());
}

TEST_CASE("phase conditions are advisory for the 4ls") {
    auto p = reference_4ls();
    p.omega32 = 190.0 * kPi + 0.3;  // breaks the trap condition only
    auto rep = validate_params(p);
    CHECK(rep.ok());
    CHECK_FALSE(rep.gate_conditions_met);
}

TEST_CASE("3ls validation enforces both phase conditions") {
    auto p = reference_3ls();
    CHECK(validate_params(p).ok());

    p.omega0 = p.omega0 + 0.01;
    CHECK_FALSE(validate_params(p).ok());

    p = reference_3ls();
    p.a *= 1.0 + 1e-6;
    CHECK_FALSE(validate_params(p).ok());

    p = reference_3ls();
    p.omega1 = p.omega_eg * (1.0 + 1e-6);
    CHECK_FALSE(validate_params(p).ok());

    // Large mirror distance: the condition-preserving omega0 grid is finer
    // than the detuning floor, so the floor can fail while the phase holds.
    p = SystemParams3LS{};
    p.gamma = 1.0;
    p.a = 5.0;
    p.omega_eg = 4001.0 * kPi / 10.0;
    p.omega1 = p.omega_eg;
    p.omega0 = p.omega_eg + kPi / p.a;
    CHECK(phase_distance(2.0 * p.omega0 * p.a, kPi) < 1e-9);
    CHECK_FALSE(validate_params(p).ok());
}

TEST_CASE("memory validation enforces per-branch trapping") {
    auto mp = reference_memory();
    CHECK(validate_memory_params(mp).ok());

    mp.omega_es = 190.0 * kPi + 0.2;
    CHECK_FALSE(validate_memory_params(mp).ok());

    mp = reference_memory();
    mp.omega_e1g = mp.omega_e0g;  // rails collapse
    CHECK_FALSE(validate_memory_params(mp).ok());

    mp = reference_memory();
    mp.omega_es = 650.0 * kPi;  // above omega_e0g: released frequency negative
    CHECK_FALSE(validate_memory_params(mp).ok());
}

TEST_CASE("require_valid throws with the report attached") {
    auto p = reference_4ls();
    p.a = -1.0;
    CHECK_THROWS_AS(require_valid(p), InvalidParams);
    try {
        require_valid(p);
    } catch (const InvalidParams& e) {
        CHECK(std::string(e.what()).find("mirror_distance_positive") !=
              std::string::npos);
    }
}

TEST_CASE("solve_gate_conditions reproduces the frozen worked example") {
    auto s = solve_gate_conditions(1000.0, 600.0, 800.0, 1.0);
    CHECK(s.n1 == 509);
    CHECK(s.n0 == 254);
    CHECK(s.omega32 == doctest::Approx(599.070660677204614).epsilon(1e-14));
    CHECK(s.omega0 == doctest::Approx(799.535330338602307).epsilon(1e-14));
    CHECK(s.residuals[0] <= 1e-12);
    CHECK(s.residuals[1] <= 1e-12);
    CHECK(s.a == 1.0);
}

TEST_CASE("solve_gate_conditions output validates as gate ready") {
    auto s = solve_gate_conditions(1000.0, 600.0, 800.0, 1.0);
    SystemParams4LS p;
    p.gamma = 1.0;
    p.omega12 = 1000.0;
    p.omega32 = s.omega32;
    p.omega34 = p.omega1 = p.omega12;
    p.omega0 = s.omega0;
    p.a = s.a;
    auto rep = validate_params(p);
    CHECK(rep.ok());
    CHECK(rep.gate_conditions_met);
}

TEST_CASE("solve_gate_conditions rejects floor violations") {
    // Adjusted rails land within the detuning floor of omega12.
    CHECK_THROWS_AS(solve_gate_conditions(kPi, kPi, kPi / 2.0, 1.0),
                    NoValidSolution);
    CHECK_THROWS_AS(solve_gate_conditions(-1.0, 600.0, 800.0, 1.0),
                    NoValidSolution);
    CHECK_THROWS_AS(solve_gate_conditions(1000.0, 600.0, 800.0, 0.0),
                    NoValidSolution);
}

TEST_CASE("solve_gate_conditions residuals stay tiny across random targets") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 500; ++i) {
        const double omega12 = 400.0 + 1600.0 * u(rng);
        const double w32t = omega12 - (150.0 + 400.0 * u(rng));
        const double w0t = omega12 + (150.0 + 400.0 * u(rng));
        const double a = 0.05 + 1.5 * u(rng);
        ConditionSolution s;
        try {
            s = solve_gate_conditions(omega12, w32t, w0t, a);
        } catch (const NoValidSolution&) {
            continue;  // a target can legitimately round into the floor
        }
        CHECK(s.residuals[0] <= 1e-12);
        CHECK(s.residuals[1] <= 1e-12);
        // The adjustment never moves a target by more than half a grid step.
        CHECK(std::abs(s.omega32 - w32t) <= kPi / (2.0 * a) + 1e-9);
        CHECK(std::abs(s.omega0 - w0t) <= kPi / (2.0 * a) + 1e-9);
    }
}
