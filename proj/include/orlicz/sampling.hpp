#pragma once

#include <algorithm>
#include <vector>

#include "orlicz/random.hpp"
#include "orlicz/spectrum.hpp"

namespace orlicz {

/// Random sparse spectrum: up to max_support distinct indices drawn from
/// [-band, band] (k = 0 allowed), complex amplitudes uniform in the box
/// [-amp, amp]^2, at least one entry guaranteed nonzero.
inline Spectrum random_spectrum(Rng& rng, int band, int max_support, double amp = 1.0) {
    const int size = std::max(1, rng.uniform_int(1, std::max(1, max_support)));
    std::vector<int> ks;
    for (int attempts = 0; static_cast<int>(ks.size()) < size && attempts < 16 * size;
         ++attempts) {
        const int k = rng.uniform_int(-band, band);
        if (std::find(ks.begin(), ks.end(), k) == ks.end()) ks.push_back(k);
    }
    Spectrum f;
    for (int k : ks) f.set(k, rng.complex_box(amp));
    if (f.empty()) f.set(rng.uniform_int(1, std::max(1, band)), {amp, 0.0});
    return f;
}

}  // namespace orlicz
