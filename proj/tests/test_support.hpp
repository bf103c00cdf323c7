#pragma once

// Shared fixtures for the test binaries. The random samplers live in the
// library (wqed/sampling.hpp) so the oracle-check subcommand can reuse
// them; these aliases keep the test call sites short.

#include <numbers>

#include "wqed/config.hpp"
#include "wqed/params.hpp"
#include "wqed/sampling.hpp"

namespace wqed::testing {

inline constexpr double kPi = std::numbers::pi;

using sampling::probe_frequency;
using sampling::random_accepted_3ls;
using sampling::random_accepted_4ls;
using sampling::random_accepted_memory;

// Reference operating point used across the suites: strongly detuned rails,
// resonant rail on a field antinode, both phase conditions met exactly.
inline SystemParams4LS reference_4ls(double gamma_prime = 0.0) {
    SystemParams4LS p = default_params_4ls();
    p.gamma_prime = gamma_prime;
    return p;
}

inline SystemParams3LS reference_3ls(double gamma_prime = 0.0) {
    SystemParams3LS p = default_params_3ls();
    p.gamma_prime = gamma_prime;
    return p;
}

inline MemoryParams reference_memory(double gamma_prime = 0.0) {
    MemoryParams mp = default_params_memory();
    mp.gamma_prime = gamma_prime;
    return mp;
}

}  // namespace wqed::testing
