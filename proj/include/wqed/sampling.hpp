#pragma once

#include <random>

#include "wqed/params.hpp"

namespace wqed::sampling {

// Random parameter sets drawn by rejection against the validator, so the
// samplers stay honest about what counts as accepted. Used by the oracle
// agreement suite and by the randomized property tests.
SystemParams4LS random_accepted_4ls(std::mt19937& rng, bool lossy);
SystemParams3LS random_accepted_3ls(std::mt19937& rng, bool lossy);
MemoryParams random_accepted_memory(std::mt19937& rng, bool lossy);

// Probe frequencies biased toward the interesting neighborhoods (the
// rails) with a broadband tail.
double probe_frequency(std::mt19937& rng, const SystemParams4LS& p);
double probe_frequency(std::mt19937& rng, const SystemParams3LS& p);

}  // namespace wqed::sampling
