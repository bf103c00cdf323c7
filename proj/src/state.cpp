#include "wqed/state.hpp"

#include <cmath>

namespace wqed {

namespace {

// Branches below this weight are numerical dust (e.g. the closed Raman leg
// at zero coupling) and never carry gate information.
constexpr double kDust = 1e-12;

}  // namespace

void MultiPhotonState::add(Term t) {
    if (std::abs(t.amplitude) < kDust && std::abs(t.normalized_amplitude) < kDust)
        return;
    for (auto& u : terms) {
        if (u.emitter_state != t.emitter_state || u.stored != t.stored ||
            u.photons.size() != t.photons.size())
            continue;
        bool same = true;
        for (std::size_t k = 0; k < u.photons.size(); ++k) {
            if (u.photons[k].label != t.photons[k].label ||
                std::abs(u.photons[k].frequency - t.photons[k].frequency) >
                    freq_tol) {
                same = false;
                break;
            }
        }
        if (!same) continue;
        u.amplitude += t.amplitude;
        u.normalized_amplitude += t.normalized_amplitude;
        return;
    }
    terms.push_back(std::move(t));
}

double MultiPhotonState::norm_sq() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::norm(t.amplitude);
    return s;
}

}  // namespace wqed
