#pragma once

#include <string>
#include <vector>

#include "thompson/tree_diagram.hpp"

namespace thompson {

// A word in the generators x_0, x_1, x_2, ... composed left to right.
struct Letter {
    long index;
    long exp;
    friend bool operator==(const Letter&, const Letter&) = default;
};

using GroupWord = std::vector<Letter>;

// Merges adjacent letters with equal index and drops zero exponents.
inline GroupWord normalize(const GroupWord& w) {
    GroupWord out;
    for (const Letter& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().index == l.index) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

inline GroupWord invert(const GroupWord& w) {
    GroupWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->index, -it->exp});
    return out;
}

inline GroupWord concat(std::initializer_list<GroupWord> parts) {
    GroupWord out;
    for (const GroupWord& p : parts) out.insert(out.end(), p.begin(), p.end());
    return normalize(out);
}

inline TreeDiagram word_to_diagram(const GroupWord& w) {
    TreeDiagram acc;
    for (const Letter& l : w)
        acc = multiply(acc, power(generator(l.index), l.exp));
    return acc;
}

// Number of branch pairs of the reduced diagram; the proxy size measure.
inline std::size_t word_length(const TreeDiagram& d) { return d.size(); }

// Exponent of x_k in the positive word carrying a tree onto the right comb:
// counts the proper prefixes v of leaf k with an all-zero suffix whose
// subtree does not reach the rightmost leaf.
inline std::vector<long> leaf_exponents(const std::vector<std::string>& code) {
    std::vector<long> a(code.size(), 0);
    const std::string& last = code.back();
    for (std::size_t k = 0; k < code.size(); ++k) {
        const std::string& w = code[k];
        std::size_t zeros = 0;
        while (zeros < w.size() && w[w.size() - 1 - zeros] == '0') ++zeros;
        for (std::size_t d = w.size() - zeros; d < w.size(); ++d) {
            bool on_right_spine =
                last.size() >= d && last.compare(0, d, w, 0, d) == 0;
            if (!on_right_spine) ++a[k];
        }
    }
    return a;
}

// Positive word p with diagram (T, comb): product of x_k^{a_k}, k ascending.
inline GroupWord positive_word(const std::vector<std::string>& code) {
    GroupWord out;
    std::vector<long> a = leaf_exponents(code);
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] > 0) out.push_back({static_cast<long>(k), a[k]});
    return out;
}

// Normal form p q^{-1} over the infinite generating set: p and q positive
// with non-decreasing indices.
inline GroupWord diagram_to_normal_form(const TreeDiagram& d) {
    return concat({positive_word(d.sources()), invert(positive_word(d.targets()))});
}

// Rewrites x_k (k >= 2) as x0^{-(k-1)} x1 x0^{k-1}, leaving x0, x1 alone.
inline GroupWord expand_to_x01(const GroupWord& w) {
    GroupWord out;
    for (const Letter& l : w) {
        if (l.index <= 1) {
            out.push_back(l);
        } else {
            out.push_back({0, -(l.index - 1)});
            out.push_back({1, l.exp});
            out.push_back({0, l.index - 1});
        }
    }
    return normalize(out);
}

inline GroupWord diagram_to_word(const TreeDiagram& d) {
    return expand_to_x01(diagram_to_normal_form(d));
}

// --- text format -----------------------------------------------------------
// Whitespace-separated tokens x<k> or x<k>^<e>; "e" or "" is the empty word.

inline std::string to_string(const GroupWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (const Letter& l : w) {
        if (!out.empty()) out += ' ';
        out += "x" + std::to_string(l.index);
        if (l.exp != 1) out += "^" + std::to_string(l.exp);
    }
    return out;
}

inline GroupWord parse_word(const std::string& text) {
    GroupWord out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size()) break;
        std::size_t end = text.find(' ', pos);
        std::string tok =
            text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        pos = end == std::string::npos ? text.size() : end + 1;
        if (tok == "e") continue;
        if (tok.size() < 2 || tok[0] != 'x')
            throw ParseError("bad word token: " + tok);
        std::size_t caret = tok.find('^');
        std::string idx = tok.substr(1, caret == std::string::npos
                                            ? std::string::npos
                                            : caret - 1);
        if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad generator index: " + tok);
        long exp = 1;
        if (caret != std::string::npos) {
            std::string e = tok.substr(caret + 1);
            if (e.empty() ||
                e.find_first_not_of("0123456789-") != std::string::npos)
                throw ParseError("bad exponent: " + tok);
            exp = std::stol(e);
            if (exp == 0) throw ParseError("zero exponent: " + tok);
        }
        out.push_back({std::stol(idx), exp});
    }
    return normalize(out);
}

}  // namespace thompson
