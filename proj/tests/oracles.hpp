#pragma once

// Test-only oracles, kept independent of the expansion-rewriting code paths
// they cross-check.

#include "thompson/analysis.hpp"
#include "thompson/corpus.hpp"

namespace thompson::testing {

// Piecewise-linear evaluation straight from the branch data: locate the
// source interval by fraction comparison and apply the affine map.
inline Fraction pl_eval(const TreeDiagram& d, const Fraction& x) {
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto [lo, hi] = word_interval(d.sources()[i]);
        if (lo <= x && x <= hi) {
            auto [tlo, thi] = word_interval(d.targets()[i]);
            return tlo + (x - lo) * ((thi - tlo) / (hi - lo));
        }
    }
    throw std::logic_error("pl_eval: no branch contains the input");
}

// Deterministic rational sample points in (0,1).
inline std::vector<Fraction> rational_samples(std::size_t n, std::uint64_t seed) {
    WordSampler s(seed);
    std::vector<Fraction> out;
    while (out.size() < n) {
        long den = 2 + static_cast<long>(s.raw() % 997);
        long num = 1 + static_cast<long>(s.raw() % static_cast<unsigned long>(den - 1));
        out.emplace_back(num, den);
    }
    return out;
}

// Rank over Q by Gaussian elimination.
inline std::size_t rank_of(std::vector<std::vector<Fraction>> m) {
    std::size_t rank = 0;
    std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Fraction factor = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= factor * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace thompson::testing
