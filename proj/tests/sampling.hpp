// Random sub-arrangements of gallery members, shared by the property
// tests and the acceptance run. Fixed seed, so both see the same 200.
#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "freeline/gallery.hpp"

namespace freeline::sampling {

constexpr int kSamples = 200;
constexpr unsigned kSeed = 20240611;

// Keeps a random subset of at least three lines, in the original order.
inline Arrangement random_sub(std::mt19937& rng) {
    const auto& entries = gallery::list();
    const auto& e = entries[rng() % entries.size()];
    const auto a = gallery::build(e.name);
    const int d = a.degree();
    const int keep = 3 + static_cast<int>(rng() % static_cast<unsigned>(d - 2));
    std::vector<int> idx(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<std::size_t>(keep));
    std::sort(idx.begin(), idx.end());
    std::vector<Line> lines;
    for (int i : idx) lines.push_back(a.line(i));
    return Arrangement(a.field(), lines);
}

inline const std::vector<Arrangement>& samples() {
    static const std::vector<Arrangement> out = [] {
        std::mt19937 rng(kSeed);
        std::vector<Arrangement> v;
        for (int i = 0; i < kSamples; ++i) v.push_back(random_sub(rng));
        return v;
    }();
    return out;
}

}  // namespace freeline::sampling
