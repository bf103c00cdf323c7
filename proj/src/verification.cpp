#include "wqed/verification.hpp"

#include <algorithm>
#include <complex>
#include <random>

#include "wqed/amplitudes.hpp"
#include "wqed/errors.hpp"
#include "wqed/oracle.hpp"
#include "wqed/sampling.hpp"

namespace wqed::verification {

namespace {

double pair_deviation(std::pair<std::complex<double>, std::complex<double>> a,
                      std::pair<std::complex<double>, std::complex<double>> b) {
    return std::max(std::abs(a.first - b.first), std::abs(a.second - b.second));
}

}  // namespace

std::vector<OracleAgreement> oracle_agreement_suite(int samples_per_family,
                                                    unsigned seed) {
    if (samples_per_family < 1) {
        throw InvalidParams("oracle_agreement_suite: samples must be >= 1");
    }
    std::mt19937 rng(seed);

    OracleAgreement ground{"ground", samples_per_family, 0.0};
    OracleAgreement meta{"meta-resonant", samples_per_family, 0.0};
    OracleAgreement raman{"meta-raman", samples_per_family, 0.0};
    OracleAgreement three{"three-level", samples_per_family, 0.0};

    for (int i = 0; i < samples_per_family; ++i) {
        const bool lossy = (i % 2) == 1;

        const SystemParams4LS p = sampling::random_accepted_4ls(rng, lossy);
        const double w4 = sampling::probe_frequency(rng, p);
        ground.max_deviation =
            std::max(ground.max_deviation,
                     pair_deviation(reflect_from_ground(p, w4),
                                    oracle_reflect_from_ground(p, w4)));
        meta.max_deviation =
            std::max(meta.max_deviation,
                     std::abs(reflect_from_meta_resonant(p, w4) -
                              oracle_reflect_from_meta(p, w4)));
        raman.max_deviation =
            std::max(raman.max_deviation,
                     pair_deviation(reflect_from_meta_raman(p, w4),
                                    oracle_reflect_raman(p, w4)));

        const SystemParams3LS q = sampling::random_accepted_3ls(rng, lossy);
        const double w3 = sampling::probe_frequency(rng, q);
        three.max_deviation =
            std::max(three.max_deviation,
                     std::abs(reflect_3ls(q, AtomState::g, w3) -
                              oracle_reflect_3ls(q, w3)));
    }

    return {ground, meta, raman, three};
}

}  // namespace wqed::verification
