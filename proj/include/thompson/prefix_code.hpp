#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "thompson/bits.hpp"

namespace thompson {

// A complete prefix code is the leaf set of a full finite binary tree,
// listed in lexicographic (= left-to-right) order.

inline bool is_sorted_prefix_free(const std::vector<std::string>& code) {
    for (std::size_t i = 0; i + 1 < code.size(); ++i) {
        if (!(code[i] < code[i + 1])) return false;
        // In a sorted list a prefix violation always shows up adjacently.
        if (is_prefix(code[i], code[i + 1])) return false;
    }
    return true;
}

inline bool is_complete_code(const std::vector<std::string>& code) {
    if (code.empty()) return false;
    if (!is_sorted_prefix_free(code)) return false;
    std::size_t deepest = 0;
    for (const auto& w : code) deepest = std::max(deepest, w.size());
    Integer total = 0;
    for (const auto& w : code) total += pow2(deepest - w.size());
    return total == pow2(deepest);
}

inline void require_complete_code(const std::vector<std::string>& code,
                                  const char* what) {
    for (const auto& w : code)
        if (!is_bits(w)) throw std::domain_error(std::string(what) + ": non-binary word");
    if (!is_complete_code(code))
        throw std::domain_error(std::string(what) +
                                ": not a sorted complete prefix code");
}

// Coarsest common refinement: leaves of the union of the two trees.
inline std::vector<std::string> join_codes(const std::vector<std::string>& a,
                                           const std::vector<std::string>& b) {
    std::set<std::string> internal;
    auto add = [&internal](const std::vector<std::string>& c) {
        for (const auto& w : c)
            for (std::size_t i = 0; i < w.size(); ++i)
                internal.insert(w.substr(0, i));
    };
    add(a);
    add(b);
    std::vector<std::string> out;
    std::function<void(const std::string&)> walk = [&](const std::string& w) {
        if (internal.count(w)) {
            walk(w + '0');
            walk(w + '1');
        } else {
            out.push_back(w);
        }
    };
    walk("");
    return out;
}

// Index of the unique code word that is a prefix of w (|w| deep enough).
inline std::size_t prefix_index(const std::vector<std::string>& code,
                                const std::string& w) {
    auto it = std::upper_bound(code.begin(), code.end(), w);
    if (it != code.begin()) {
        --it;
        if (is_prefix(*it, w)) return static_cast<std::size_t>(it - code.begin());
    }
    if (it + 1 != code.end() && is_prefix(*(it + 1), w))
        return static_cast<std::size_t>(it + 1 - code.begin());
    throw std::logic_error("no code word is a prefix of " + w);
}

inline std::size_t max_word_length(const std::vector<std::string>& code) {
    std::size_t n = 0;
    for (const auto& w : code) n = std::max(n, w.size());
    return n;
}

// Index of the code word containing the given infinite expansion.
inline std::size_t branch_index(const std::vector<std::string>& code,
                                const Expansion& e) {
    return prefix_index(code, e.first(max_word_length(code) + 1));
}

}  // namespace thompson
