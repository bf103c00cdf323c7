#include "wqed/sampling.hpp"

#include <cmath>
#include <numbers>

namespace wqed::sampling {

namespace {
constexpr double kPi = std::numbers::pi;
}

SystemParams4LS random_accepted_4ls(std::mt19937& rng, bool lossy) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        SystemParams4LS p;
        p.gamma = std::pow(10.0, -1.0 + 2.0 * u(rng));
        p.gamma_prime = lossy ? p.gamma * (0.05 + 0.95 * u(rng)) : 0.0;
        p.omega12 = p.gamma * (500.0 + 1500.0 * u(rng));
        p.omega32 = p.omega12 - p.gamma * (150.0 + 450.0 * u(rng));
        p.omega34 = p.omega12;
        p.omega1 = p.omega12;
        const double d0 = p.gamma * (150.0 + 350.0 * u(rng));
        p.omega0 = u(rng) < 0.5 ? p.omega12 - d0 : p.omega12 + d0;
        p.a = (0.02 + u(rng)) / p.gamma;
        if (validate_params(p).ok()) {
            return p;
        }
    }
}

SystemParams3LS random_accepted_3ls(std::mt19937& rng, bool lossy) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        SystemParams3LS p;
        p.gamma = std::pow(10.0, -1.0 + 2.0 * u(rng));
        p.gamma_prime = lossy ? p.gamma * (0.05 + 0.95 * u(rng)) : 0.0;
        p.a = (0.1 + 1.4 * u(rng)) / p.gamma;
        const double target = p.gamma * (400.0 + 1600.0 * u(rng));
        const long n = std::lround((2.0 * target * p.a / kPi - 1.0) / 2.0);
        p.omega_eg = (2.0 * static_cast<double>(n) + 1.0) * kPi / (2.0 * p.a);
        p.omega1 = p.omega_eg;
        // Shift by an integer number of pi / a so the omega0 condition
        // holds too, and by enough of them to clear the detuning floor.
        const long j =
            static_cast<long>(std::ceil(p.detuning_floor * p.gamma * p.a / kPi)) +
            1;
        p.omega0 = p.omega_eg + static_cast<double>(j) * kPi / p.a;
        if (validate_params(p).ok()) {
            return p;
        }
    }
}

// With omega_es at x pi / a both rails sit at (n_i - x) pi / a, which
// meets each branch trap condition exactly; the fractional part of x
// keeps the rails off the mirror nodes.
MemoryParams random_accepted_memory(std::mt19937& rng, bool lossy) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (;;) {
        MemoryParams mp;
        mp.gamma = std::pow(10.0, -1.0 + 2.0 * u(rng));
        mp.gamma_prime = lossy ? mp.gamma * (0.01 + 0.3 * u(rng)) : 0.0;
        mp.a = (0.02 + 0.3 * u(rng)) / mp.gamma;
        const double step = kPi / mp.a;
        const double x = 2.0 + static_cast<double>(static_cast<int>(8 * u(rng))) +
                         0.1 + 0.8 * u(rng);
        mp.omega_es = x * step;
        const long dn =
            static_cast<long>(std::ceil(100.0 * mp.gamma * mp.a / kPi)) + 1;
        const long n0 = static_cast<long>(std::ceil(2.0 * x)) + 1 +
                        static_cast<long>(3 * u(rng));
        const long n1 = n0 + dn + static_cast<long>(3 * u(rng));
        mp.omega_e0g = (static_cast<double>(n0) - x) * step;
        mp.omega_e1g = (static_cast<double>(n1) - x) * step;
        if (validate_memory_params(mp).ok()) {
            return mp;
        }
    }
}

double probe_frequency(std::mt19937& rng, const SystemParams4LS& p) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    std::uniform_real_distribution<double> broad(0.0, 1.0);
    switch (rng() % 4) {
        case 0:
            return p.omega1 + p.gamma * u(rng);
        case 1:
            return p.omega32 + p.gamma * u(rng);
        case 2:
            return p.omega0 + p.gamma * u(rng);
        default: {
            const double lo = p.omega32 - 20.0 * p.gamma;
            const double hi = p.omega12 + 20.0 * p.gamma;
            return lo + (hi - lo) * broad(rng);
        }
    }
}

double probe_frequency(std::mt19937& rng, const SystemParams3LS& p) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    return (rng() % 2 ? p.omega_eg : p.omega0) + p.gamma * u(rng);
}

}  // namespace wqed::sampling
