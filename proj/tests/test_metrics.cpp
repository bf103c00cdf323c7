#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "wqed/errors.hpp"
#include "wqed/metrics.hpp"
#include "wqed/quadrature.hpp"

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool rows_equal(const wqed::SweepRow& a, const wqed::SweepRow& b) {
    return a.delta_t == b.delta_t && a.purcell == b.purcell &&
           a.fidelity == b.fidelity && a.leakage == b.leakage &&
           a.grid_residual == b.grid_residual;
}

}  // namespace

TEST_CASE("gauss legendre rule matches its polynomial exactness degree") {
    const auto [x, w] = wqed::gauss_legendre_rule(5);
    double total = 0.0;
    double p8 = 0.0;
    for (int i = 0; i < 5; ++i) {
        total += w[i];
        p8 += w[i] * std::pow(x[i], 8);
        CHECK(x[i] == doctest::Approx(-x[4 - i]).epsilon(1e-14));
    }
    CHECK(std::abs(total - 2.0) < 1e-14);
    // Degree 8 lies inside the 5-point exactness window (degree 9).
    CHECK(std::abs(p8 - 2.0 / 9.0) < 1e-14);
}

TEST_CASE("integration axis carries the full pulse weight") {
    const auto pulse = wqed::PulseSpec::from_delta_t(100.0, 10.0);
    CHECK(pulse.sigma == doctest::Approx(0.05));
    CHECK(pulse.weight(100.0) ==
          doctest::Approx(pulse.amplitude(100.0) * pulse.amplitude(100.0)));

    wqed::QuadratureGrid grid;
    for (const auto scheme :
         {wqed::QuadScheme::gauss_legendre, wqed::QuadScheme::trapezoid}) {
        grid.scheme = scheme;
        const auto ax = wqed::grid_axis(pulse.center, pulse.sigma, grid);
        REQUIRE(ax.nodes.size() == 301);
        double mass = 0.0;
        for (std::size_t i = 0; i < ax.nodes.size(); ++i) {
            mass += ax.weights[i] * pulse.weight(ax.nodes[i]);
        }
        CHECK(std::abs(mass - 1.0) < 1e-12);
    }
}

TEST_CASE("quadrature grid validation rejects bad shapes") {
    wqed::QuadratureGrid grid;
    grid.points_per_dim = 300;
    CHECK_THROWS_AS(wqed::grid_axis(0.0, 1.0, grid), wqed::InvalidParams);
    grid.points_per_dim = 49;
    CHECK_THROWS_AS(wqed::grid_axis(0.0, 1.0, grid), wqed::InvalidParams);
    grid.points_per_dim = 301;
    grid.half_width = 0.0;
    CHECK_THROWS_AS(wqed::grid_axis(0.0, 1.0, grid), wqed::InvalidParams);
    grid.half_width = 6.0;
    CHECK_THROWS_AS(wqed::grid_axis(0.0, 0.0, grid), wqed::InvalidParams);
}

TEST_CASE("frozen fidelity and leakage at the reference geometry") {
    struct Anchor {
        double purcell;
        double fidelity;
        double leakage;
    };
    const Anchor anchors[] = {
        {10.0, 0.736621137834, 0.257390234496},
        {20.0, 0.855074340988, 0.138690337721},
        {40.0, 0.921407632072, 0.072063920551},
    };
    double previous = 0.0;
    for (const auto& anchor : anchors) {
        const auto p = wqed::testing::reference_4ls(1.0 / anchor.purcell);
        const auto m = wqed::fidelity_4ls(p, 10.0);
        CHECK(std::abs(m.fidelity - anchor.fidelity) < 1e-9);
        CHECK(std::abs(m.leakage - anchor.leakage) < 1e-9);
        CHECK(m.fidelity > previous);
        previous = m.fidelity;
    }

    const auto lossless = wqed::fidelity_4ls(wqed::testing::reference_4ls(0.0), 10.0);
    CHECK(std::abs(lossless.fidelity - 0.993018131186) < 1e-9);
    CHECK(lossless.fidelity > previous);
    CHECK(lossless.leakage >= 0.0);
    CHECK(lossless.leakage < 1e-9);

    // The lossless ceiling is exact: long pulses push the fidelity to 1.
    const auto longpulse = wqed::fidelity_4ls(wqed::testing::reference_4ls(0.0), 50.0);
    CHECK(longpulse.fidelity > 0.999);
    CHECK(longpulse.fidelity <= 1.0);
}

TEST_CASE("frozen pulse duration series rises monotonically") {
    struct Anchor {
        double delta_t;
        double fidelity;
        double leakage;
    };
    const Anchor anchors[] = {
        {1.0, 0.469599992717, 0.130895818213},
        {2.0, 0.729873561990, 0.136498878961},
        {5.0, 0.837789789927, 0.138401770255},
        {10.0, 0.855074340988, 0.138690337721},
        {20.0, 0.859477966840, 0.138763207852},
        {50.0, 0.860717021366, 0.138783664693},
    };
    const auto p = wqed::testing::reference_4ls(0.05);
    double previous = 0.0;
    for (const auto& anchor : anchors) {
        const auto m = wqed::fidelity_4ls(p, anchor.delta_t);
        CHECK(std::abs(m.fidelity - anchor.fidelity) < 1e-9);
        CHECK(std::abs(m.leakage - anchor.leakage) < 1e-9);
        CHECK(m.fidelity > previous);
        previous = m.fidelity;
    }
}

TEST_CASE("frozen leakage series decreases in the purcell factor") {
    const double frozen[] = {0.446802503422, 0.257390234496, 0.138690337721,
                             0.072063920551, 0.048670290556, 0.036741524514,
                             0.029508737185};
    const std::vector<double> purcells = {5.0,  10.0, 20.0, 40.0,
                                          60.0, 80.0, 100.0};
    const auto result =
        wqed::leakage_sweep_4ls(wqed::testing::reference_4ls(0.0), 10.0, purcells);
    REQUIRE(result.rows.size() == purcells.size());
    for (std::size_t i = 0; i < purcells.size(); ++i) {
        const auto& row = result.rows[i];
        CHECK(row.delta_t == 10.0);
        CHECK(row.purcell == purcells[i]);
        CHECK(std::abs(row.leakage - frozen[i]) < 1e-9);
        if (i > 0) {
            CHECK(row.leakage < result.rows[i - 1].leakage);
        }
        CHECK(row.fidelity >= 0.0);
        CHECK(row.fidelity <= 1.0);
        CHECK(row.leakage >= 0.0);
        CHECK(row.leakage <= 1.0);
    }
    CHECK(result.rows.back().leakage < 0.10);
}

TEST_CASE("control pass phase flag shifts the frozen fidelity") {
    const auto p = wqed::testing::reference_4ls(0.05);
    wqed::ProtocolOptions opt;
    opt.c_trivial_phase = true;
    const auto flagged = wqed::fidelity_4ls(p, 10.0, {}, opt);
    CHECK(std::abs(flagged.fidelity - 0.855063652625) < 1e-9);
    const auto plain = wqed::fidelity_4ls(p, 10.0);
    CHECK(flagged.fidelity != plain.fidelity);
    CHECK(std::abs(flagged.fidelity - plain.fidelity) < 1e-3);
}

TEST_CASE("trapezoid and gauss legendre agree on the defaults") {
    const auto p = wqed::testing::reference_4ls(0.05);
    wqed::QuadratureGrid trap;
    trap.scheme = wqed::QuadScheme::trapezoid;
    const auto a = wqed::fidelity_4ls(p, 10.0);
    const auto b = wqed::fidelity_4ls(p, 10.0, trap);
    CHECK(std::abs(a.fidelity - b.fidelity) < 1e-8);
    CHECK(std::abs(a.leakage - b.leakage) < 1e-8);
}

TEST_CASE("tensor route matches the factored route") {
    const auto p = wqed::testing::reference_4ls(0.05);
    wqed::QuadratureGrid grid;
    grid.points_per_dim = 151;
    const auto factored = wqed::fidelity_4ls(p, 10.0, grid);
    const double tensor = wqed::fidelity_4ls_tensor(p, 10.0, grid);
    CHECK(std::abs(factored.fidelity - tensor) < 1e-8);

    wqed::ProtocolOptions opt;
    opt.c_trivial_phase = true;
    const auto factored_flag = wqed::fidelity_4ls(p, 10.0, grid, opt);
    const double tensor_flag = wqed::fidelity_4ls_tensor(p, 10.0, grid, opt);
    CHECK(std::abs(factored_flag.fidelity - tensor_flag) < 1e-8);
}

TEST_CASE("grid refinement is stable on the defaults") {
    const auto p = wqed::testing::reference_4ls(0.05);
    const auto base = wqed::fidelity_4ls(p, 10.0);
    CHECK(base.grid_residual < 1e-5);

    wqed::QuadratureGrid doubled;
    doubled.points_per_dim = 603;
    const auto fine = wqed::fidelity_4ls(p, 10.0, doubled);
    CHECK(std::abs(base.fidelity - fine.fidelity) < 1e-5);
    CHECK(std::abs(base.leakage - fine.leakage) < 1e-5);
}

TEST_CASE("wide sparse grid fails the refinement check") {
    const auto p = wqed::testing::reference_4ls(0.05);
    wqed::QuadratureGrid sparse;
    sparse.half_width = 60.0;
    sparse.points_per_dim = 51;
    CHECK_THROWS_AS(wqed::fidelity_4ls(p, 10.0, sparse),
                    wqed::GridNotConverged);
}

TEST_CASE("pulse bandwidth overlapping the raman branch is rejected") {
    const auto p = wqed::testing::reference_4ls(0.05);
    // omega13 = 120 pi; a 20 sigma band reaches it below delta_t ~ 0.0265.
    CHECK_THROWS_AS(wqed::fidelity_4ls(p, 0.02), wqed::PulseOverlap);
    CHECK_NOTHROW(wqed::fidelity_4ls(p, 0.03));
}

TEST_CASE("nonpositive durations and purcell factors are rejected") {
    const auto p = wqed::testing::reference_4ls(0.05);
    CHECK_THROWS_AS(wqed::fidelity_4ls(p, 0.0), wqed::InvalidParams);
    CHECK_THROWS_AS(wqed::fidelity_4ls(p, -1.0), wqed::InvalidParams);
    CHECK_THROWS_AS(wqed::fidelity_sweep(p, {10.0}, {0.0}),
                    wqed::InvalidParams);
    CHECK_THROWS_AS(wqed::fidelity_sweep(p, {10.0}, {-5.0}),
                    wqed::InvalidParams);
    CHECK_THROWS_AS(wqed::fidelity_3ls(wqed::testing::reference_3ls(0.0), 0.0),
                    wqed::InvalidParams);
}

TEST_CASE("sweep rows keep input order and rerun identically") {
    const auto p = wqed::testing::reference_4ls(0.0);
    const std::vector<double> delta_ts = {2.0, 10.0};
    const std::vector<double> purcells = {10.0, kInf, 20.0};
    const auto first = wqed::fidelity_sweep(p, delta_ts, purcells);
    REQUIRE(first.rows.size() == 6);
    for (std::size_t i = 0; i < first.rows.size(); ++i) {
        CHECK(first.rows[i].delta_t == delta_ts[i / purcells.size()]);
        CHECK(first.rows[i].purcell == purcells[i % purcells.size()]);
        CHECK(first.rows[i].fidelity >= 0.0);
        CHECK(first.rows[i].fidelity <= 1.0);
        CHECK(first.rows[i].leakage >= 0.0);
        CHECK(first.rows[i].leakage <= 1.0);
        if (std::isinf(first.rows[i].purcell)) {
            CHECK(first.rows[i].leakage < 1e-9);
        }
    }
    const auto second = wqed::fidelity_sweep(p, delta_ts, purcells);
    REQUIRE(second.rows.size() == first.rows.size());
    for (std::size_t i = 0; i < first.rows.size(); ++i) {
        CHECK(rows_equal(first.rows[i], second.rows[i]));
    }
}

TEST_CASE("empty sweep inputs give empty results") {
    const auto p = wqed::testing::reference_4ls(0.0);
    CHECK(wqed::fidelity_sweep(p, {}, {10.0}).rows.empty());
    CHECK(wqed::fidelity_sweep(p, {10.0}, std::vector<double>{}).rows.empty());
    CHECK(wqed::leakage_sweep_4ls(p, 10.0, {}).rows.empty());
}

TEST_CASE("frozen three level series") {
    struct Anchor {
        double purcell;
        double fidelity;
        double leakage;
    };
    const Anchor anchors[] = {
        {10.0, 0.904980478064, 0.090600787357},
        {20.0, 0.949558679847, 0.047534480163},
        {40.0, 0.973092206291, 0.024356994649},
        {100.0, 0.987634357602, 0.009888576386},
    };
    double previous_f = 0.0;
    double previous_l = 1.0;
    for (const auto& anchor : anchors) {
        const auto p = wqed::testing::reference_3ls(1.0 / anchor.purcell);
        const auto m = wqed::fidelity_3ls(p, 10.0);
        CHECK(std::abs(m.fidelity - anchor.fidelity) < 1e-9);
        CHECK(std::abs(m.leakage - anchor.leakage) < 1e-9);
        CHECK(m.fidelity > previous_f);
        CHECK(m.leakage < previous_l);
        previous_f = m.fidelity;
        previous_l = m.leakage;
    }

    const auto lossless = wqed::fidelity_3ls(wqed::testing::reference_3ls(0.0), 10.0);
    CHECK(std::abs(lossless.fidelity - 0.997510831462) < 1e-9);
    CHECK(lossless.leakage >= 0.0);
    CHECK(lossless.leakage < 1e-9);
    CHECK(lossless.grid_residual < 1e-5);
}

TEST_CASE("three level sweep overload matches single evaluations") {
    const auto p = wqed::testing::reference_3ls(0.0);
    const std::vector<double> purcells = {10.0, 20.0};
    const auto sweep = wqed::fidelity_sweep(p, {10.0}, purcells);
    REQUIRE(sweep.rows.size() == 2);
    for (std::size_t i = 0; i < purcells.size(); ++i) {
        auto q = p;
        q.gamma_prime = q.gamma / purcells[i];
        const auto single = wqed::fidelity_3ls(q, 10.0);
        CHECK(sweep.rows[i].fidelity == single.fidelity);
        CHECK(sweep.rows[i].leakage == single.leakage);
        CHECK(sweep.rows[i].grid_residual == single.grid_residual);
    }
}
