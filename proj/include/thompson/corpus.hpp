#pragma once

#include <cstdint>
#include <random>

#include "thompson/wordcalc.hpp"

namespace thompson {

// Seed-reproducible random words over {x0^+-1, x1^+-1}.  Raw engine output is
// reduced by hand so corpora are stable across standard library versions.
class WordSampler {
  public:
    explicit WordSampler(std::uint64_t seed) : eng_(seed) {}

    GroupWord word(std::size_t max_len) {
        std::size_t len = 1 + static_cast<std::size_t>(eng_() % max_len);
        GroupWord w;
        for (std::size_t i = 0; i < len; ++i) {
            std::uint64_t r = eng_();
            w.push_back({static_cast<long>(r & 1),
                         (r & 2) ? 1L : -1L});
        }
        return normalize(w);
    }

    TreeDiagram element(std::size_t max_len) { return word_to_diagram(word(max_len)); }

    std::uint64_t raw() { return eng_(); }

  private:
    std::mt19937_64 eng_;
};

inline std::vector<GroupWord> corpus(std::uint64_t seed, std::size_t size,
                                     std::size_t max_len) {
    WordSampler s(seed);
    std::vector<GroupWord> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) out.push_back(s.word(max_len));
    return out;
}

}  // namespace thompson
