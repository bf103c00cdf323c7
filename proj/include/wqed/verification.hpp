#pragma once

#include <string>
#include <vector>

namespace wqed::verification {

// Worst observed disagreement between a closed-form amplitude family and
// the dense linear-system route over freshly sampled accepted parameters.
struct OracleAgreement {
    std::string family;
    int samples = 0;
    double max_deviation = 0.0;
};

// Run every family for the given sample count, alternating lossless and
// lossy parameter draws. Families: "ground" (r11, r13), "meta-resonant"
// (R3), "meta-raman" (r33, r31), "three-level" (rg). The two routes share
// nothing past the parameter struct, so agreement is evidence, not
// bookkeeping.
std::vector<OracleAgreement> oracle_agreement_suite(int samples_per_family,
                                                    unsigned seed);

}  // namespace wqed::verification
