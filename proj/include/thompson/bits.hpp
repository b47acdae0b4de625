#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "thompson/fraction.hpp"

namespace thompson {

// Finite binary words over {0,1} are plain strings; every parser validates
// the alphabet once at the boundary.

inline bool is_bits(const std::string& w) {
    return std::all_of(w.begin(), w.end(),
                       [](char c) { return c == '0' || c == '1'; });
}

inline bool all_of_digit(const std::string& w, char c) {
    return std::all_of(w.begin(), w.end(), [c](char x) { return x == c; });
}

inline bool is_prefix(const std::string& p, const std::string& w) {
    return w.size() >= p.size() && w.compare(0, p.size(), p) == 0;
}

inline std::string repeat(const std::string& s, std::size_t n) {
    std::string out;
    out.reserve(s.size() * n);
    for (std::size_t i = 0; i < n; ++i) out += s;
    return out;
}

inline std::string rotate_left(std::string s, std::size_t k) {
    if (s.empty()) return s;
    k %= s.size();
    std::rotate(s.begin(), s.begin() + k, s.end());
    return s;
}

inline std::string flip_bits(std::string w) {
    for (char& c : w) c = (c == '0') ? '1' : '0';
    return w;
}

// Value of the terminating expansion .w  =  int(w) / 2^|w|.
// Bits are folded in 64-bit chunks; long periodic words reach ~10^6 bits.
inline Fraction word_value(const std::string& w) {
    Integer num = 0;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t chunk = std::min<std::size_t>(64, w.size() - i);
        std::uint64_t v = 0;
        for (std::size_t k = 0; k < chunk; ++k)
            v = (v << 1) | static_cast<std::uint64_t>(w[i + k] == '1');
        num <<= chunk;
        num += v;
        i += chunk;
    }
    return Fraction(num, pow2(w.size()));
}

inline Fraction word_measure(const std::string& w) {
    return Fraction(1, pow2(w.size()));
}

// The standard dyadic interval [w] = [.w, .w + 2^{-|w|}].
inline std::pair<Fraction, Fraction> word_interval(const std::string& w) {
    Fraction lo = word_value(w);
    return {lo, lo + word_measure(w)};
}

// Smallest non-primitive period collapses: the shortest word r with w = r^k.
inline std::string primitive_root(const std::string& w) {
    for (std::size_t d = 1; d <= w.size() / 2; ++d) {
        if (w.size() % d != 0) continue;
        bool match = true;
        for (std::size_t i = d; i < w.size() && match; ++i)
            match = (w[i] == w[i - d]);
        if (match) return w.substr(0, d);
    }
    return w;
}

// Sibling words along the path to u; together with u they form a complete
// prefix code.
inline std::vector<std::string> copath(const std::string& u) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < u.size(); ++i) {
        std::string s = u.substr(0, i);
        s += (u[i] == '0') ? '1' : '0';
        out.push_back(std::move(s));
    }
    return out;
}

// The word of length k whose interval starts at the dyadic x = m/2^k.
inline std::string word_at(const Fraction& x, std::size_t k) {
    Integer m = numerator(Fraction(x * pow2(k)));
    std::string w(k, '0');
    for (std::size_t i = 0; i < k; ++i)
        if (bit_test(m, static_cast<unsigned>(k - 1 - i))) w[i] = '1';
    return w;
}

// Greedy left-to-right decomposition of a dyadic interval [a,b] into the
// minimal sequence of maximal standard dyadic intervals.
inline std::vector<std::string> decompose_interval(const Fraction& a,
                                                   const Fraction& b) {
    if (!is_dyadic(a) || !is_dyadic(b))
        throw std::domain_error("interval endpoints must be dyadic");
    if (a < 0 || b > 1 || a > b) throw std::domain_error("bad interval");
    std::vector<std::string> out;
    Fraction x = a;
    long guard = 0;
    while (x < b) {
        check_depth(++guard, "decompose_interval");
        for (std::size_t k = 0;; ++k) {
            check_depth(static_cast<long>(k), "decompose_interval");
            if (!is_integer(x * pow2(k))) continue;
            Fraction step(1, pow2(k));
            if (x + step > b) continue;
            out.push_back(word_at(x, k));
            x += step;
            break;
        }
    }
    return out;
}

// Right-comb code with t leaves: 0, 10, ..., 1^{t-2}0, 1^{t-1}.
inline std::vector<std::string> comb_code(std::size_t t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i + 1 < t; ++i)
        out.push_back(std::string(i, '1') + '0');
    out.push_back(std::string(t - 1, '1'));
    return out;
}

// Eventually periodic infinite binary sequence: pre . per per per ...
struct Expansion {
    std::string pre;
    std::string per;  // nonempty

    char at(std::size_t i) const {
        if (i < pre.size()) return pre[i];
        return per[(i - pre.size()) % per.size()];
    }

    std::string first(std::size_t n) const {
        std::string out(n, '0');
        for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
        return out;
    }

    bool starts_with(const std::string& w) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (at(i) != w[i]) return false;
        return true;
    }

    Expansion drop(std::size_t n) const {
        if (n <= pre.size()) return {pre.substr(n), per};
        return {"", rotate_left(per, (n - pre.size()) % per.size())};
    }
};

inline bool expansions_equal(const Expansion& a, const Expansion& b) {
    std::size_t pre = std::max(a.pre.size(), b.pre.size());
    std::size_t bound = pre + a.per.size() * b.per.size() + 1;
    for (std::size_t i = 0; i < bound; ++i)
        if (a.at(i) != b.at(i)) return false;
    return true;
}

}  // namespace thompson
