#pragma once

#include <vector>

#include "thompson/tree_diagram.hpp"

namespace thompson {

struct Interval {
    Fraction lo, hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted, pairwise disjoint closed intervals.
using IntervalSet = std::vector<Interval>;

inline Fraction measure(const IntervalSet& set) {
    Fraction total = 0;
    for (const Interval& iv : set) total += iv.hi - iv.lo;
    return total;
}

inline bool contains(const IntervalSet& set, const Fraction& x) {
    for (const Interval& iv : set)
        if (iv.lo <= x && x <= iv.hi) return true;
    return false;
}

// Maximal pointwise-fixed intervals plus isolated fixed points.
struct FixedSet {
    IntervalSet intervals;
    std::vector<Point> points;
};

// Per branch pair u -> v:
//   u == v            : the whole interval [u] is fixed;
//   u a proper prefix : unique fixed point .u s^inf  (v = u s);
//   v a proper prefix : unique fixed point .v s^inf  (u = v s);
//   otherwise         : no fixed point in [u].
inline FixedSet fixed_set(const TreeDiagram& f) {
    IntervalSet ivs;
    std::vector<Point> pts;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::string& u = f.sources()[i];
        const std::string& v = f.targets()[i];
        if (u == v) {
            auto [lo, hi] = word_interval(u);
            if (!ivs.empty() && ivs.back().hi == lo)
                ivs.back().hi = hi;  // merge adjacent fixed branches
            else
                ivs.push_back({lo, hi});
        } else if (is_prefix(u, v)) {
            pts.push_back(canonicalize(u, v.substr(u.size())));
        } else if (is_prefix(v, u)) {
            pts.push_back(canonicalize(v, u.substr(v.size())));
        }
    }
    std::sort(pts.begin(), pts.end(),
              [](const Point& a, const Point& b) { return a < b; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<Point> isolated;
    for (Point& p : pts) {
        Fraction x = to_fraction(p);
        if (!contains(ivs, x)) isolated.push_back(std::move(p));
    }
    return {std::move(ivs), std::move(isolated)};
}

inline bool fixes_neighborhood(const TreeDiagram& f, const Point& p) {
    if (p.is_zero() || p.is_one())
        throw std::domain_error("interior point required");
    Fraction x = to_fraction(p);
    for (const Interval& iv : fixed_set(f).intervals)
        if (iv.lo < x && x < iv.hi) return true;
    return false;
}

// Closure of the set of moved points: the complement of the interiors of the
// maximal fixed intervals.  Isolated fixed points stay inside the support.
inline IntervalSet support(const TreeDiagram& f) {
    IntervalSet fixed = fixed_set(f).intervals;
    IntervalSet out;
    Fraction prev = 0;
    for (const Interval& iv : fixed) {
        if (iv.lo > prev) out.push_back({prev, iv.lo});
        prev = iv.hi;
    }
    if (prev < 1) out.push_back({prev, Fraction(1)});
    return out;
}

// dist_H(f,g) = mu(Supp(f g^-1)) + mu(Supp(f^-1 g)).
inline Fraction hamming(const TreeDiagram& f, const TreeDiagram& g) {
    return measure(support(multiply(f, inverse(g)))) +
           measure(support(multiply(inverse(f), g)));
}

// For f fixing .p s^inf, the exponents (l, r) of a branch pair
// p s^l -> p s^r of some (possibly unreduced) representative, l minimal.
// Works for any presentation (p, s) of the point as long as the slope
// exponent at it is divisible by |s|.
inline std::pair<long, long> branch_exponents(const TreeDiagram& f,
                                              const std::string& p,
                                              const std::string& s) {
    Expansion e{p, s};
    std::size_t i = branch_index(f.sources(), e);
    long ulen = static_cast<long>(f.sources()[i].size());
    long vlen = static_cast<long>(f.targets()[i].size());
    long period = static_cast<long>(s.size());
    long slope = ulen - vlen;
    if (slope % period != 0)
        throw std::domain_error("slope exponent not divisible by period length");
    long l0 = std::max(0L, (ulen - static_cast<long>(p.size()) + period - 1) / period);
    long l = std::max(l0, slope / period);
    return {l, l - slope / period};
}

inline std::pair<long, long> find_periodic_branch(const TreeDiagram& f,
                                                  const Point& beta) {
    if (classify(beta) != 2)
        throw std::domain_error("find_periodic_branch needs a class-2 point");
    if (!(apply(f, beta) == beta))
        throw std::domain_error("element does not fix the point");
    return branch_exponents(f, beta.prefix(), beta.period());
}

}  // namespace thompson
