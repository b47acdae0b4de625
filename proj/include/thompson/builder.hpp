#pragma once

#include <string>
#include <vector>

#include "thompson/analysis.hpp"

namespace thompson {

// Infeasible branch constraint; `condition` names the violated compatibility
// requirement (2 = left extreme, 3 = right extreme, 4 = adjacency,
// 0 = structural).
struct ConstraintError : std::domain_error {
    int condition;
    ConstraintError(int cond, const std::string& msg)
        : std::domain_error("constraint condition " + std::to_string(cond) +
                            ": " + msg),
          condition(cond) {}
};

namespace detail {

// Splits the last word into a right comb with `extra + 1` leaves.
inline void comb_split_last(std::vector<std::string>& words, std::size_t extra) {
    std::string w = words.back();
    words.pop_back();
    for (const std::string& c : comb_code(extra + 1)) words.push_back(w + c);
}

// Canonical filler mapping the gap [a1,b1] onto [a2,b2].  At the extremes of
// [0,1] a maximal common head (0^k -> 0^k, resp. tail 1^k -> 1^k) is carved
// off first so that the filler is the identity near a shared endpoint of the
// unit interval; the remainders are matched piecewise after comb-splitting
// the side with fewer maximal dyadic pieces.
inline void fill_gap(Fraction a1, Fraction b1, Fraction a2, Fraction b2,
                     BranchPairs& out) {
    if (a1 == b1 && a2 == b2) return;
    BranchPairs tail;
    if (a1 == b1 || a2 == b2)
        throw ConstraintError(4, "gap present on one side only");
    if (a1 == a2 && b1 == b2) {
        for (const std::string& w : decompose_interval(a1, b1))
            out.emplace_back(w, w);
        return;
    }
    if (a1 == 0 && a2 == 0) {
        std::size_t k = 1;
        while (Fraction(1, pow2(k)) >= b1 || Fraction(1, pow2(k)) >= b2) {
            check_depth(static_cast<long>(k), "fill_gap");
            ++k;
        }
        std::string w(k, '0');
        out.emplace_back(w, w);
        a1 = a2 = Fraction(1, pow2(k));
    }
    if (b1 == 1 && b2 == 1) {
        std::size_t k = 1;
        while (Fraction(1) - Fraction(1, pow2(k)) <= a1 ||
               Fraction(1) - Fraction(1, pow2(k)) <= a2) {
            check_depth(static_cast<long>(k), "fill_gap");
            ++k;
        }
        std::string w(k, '1');
        tail.emplace_back(w, w);
        b1 = b2 = Fraction(1) - Fraction(1, pow2(k));
    }
    std::vector<std::string> ws = decompose_interval(a1, b1);
    std::vector<std::string> zs = decompose_interval(a2, b2);
    while (ws.size() < zs.size()) comb_split_last(ws, zs.size() - ws.size());
    while (zs.size() < ws.size()) comb_split_last(zs, ws.size() - zs.size());
    for (std::size_t i = 0; i < ws.size(); ++i)
        out.emplace_back(std::move(ws[i]), std::move(zs[i]));
    out.insert(out.end(), tail.begin(), tail.end());
}

}  // namespace detail

// Completes a partial set of branch pairs to full complete prefix codes,
// without reduction, so every specified pair survives literally.
inline BranchPairs assemble_branch_pairs(BranchPairs constraint) {
    if (constraint.empty()) return {{"", ""}};
    std::sort(constraint.begin(), constraint.end());
    for (const auto& [u, v] : constraint)
        if (!is_bits(u) || !is_bits(v))
            throw ConstraintError(0, "non-binary branch word");
    for (std::size_t i = 0; i + 1 < constraint.size(); ++i) {
        const auto& [u0, v0] = constraint[i];
        const auto& [u1, v1] = constraint[i + 1];
        if (u0 == u1 || is_prefix(u0, u1) || is_prefix(u1, u0))
            throw ConstraintError(0, "sources not prefix-free");
        if (!(v0 < v1) || is_prefix(v0, v1) || is_prefix(v1, v0))
            throw ConstraintError(0, "targets not prefix-free and increasing");
    }
    if (all_of_digit(constraint.front().first, '0') !=
        all_of_digit(constraint.front().second, '0'))
        throw ConstraintError(2, "exactly one side touches 0");
    if (all_of_digit(constraint.back().first, '1') !=
        all_of_digit(constraint.back().second, '1'))
        throw ConstraintError(3, "exactly one side touches 1");

    BranchPairs out;
    Fraction sprev = 0, tprev = 0;
    for (const auto& [u, v] : constraint) {
        auto [slo, shi] = word_interval(u);
        auto [tlo, thi] = word_interval(v);
        if ((sprev == slo) != (tprev == tlo))
            throw ConstraintError(4, "adjacency mismatch before " + u + "->" + v);
        detail::fill_gap(sprev, slo, tprev, tlo, out);
        out.emplace_back(u, v);
        sprev = shi;
        tprev = thi;
    }
    if ((sprev == 1) != (tprev == 1))
        throw ConstraintError(4, "adjacency mismatch at the right end");
    detail::fill_gap(sprev, Fraction(1), tprev, Fraction(1), out);
    std::sort(out.begin(), out.end());
    return out;
}

inline TreeDiagram from_branch_pairs(const BranchPairs& constraint) {
    return TreeDiagram::from_pairs(assemble_branch_pairs(constraint));
}

// The copy of f acting inside [u]: pairs u v_i -> u w_i plus identity
// branches on the complement of [u].
inline TreeDiagram copy_into(const TreeDiagram& f, const std::string& u) {
    if (!is_bits(u)) throw std::domain_error("non-binary word");
    BranchPairs pr;
    for (std::size_t i = 0; i < f.size(); ++i)
        pr.emplace_back(u + f.sources()[i], u + f.targets()[i]);
    for (const std::string& s : copath(u)) pr.emplace_back(s, s);
    return TreeDiagram::from_pairs(std::move(pr));
}

// Inverse of copy_into for elements supported in [u].
inline TreeDiagram extract_copy(const TreeDiagram& f, const std::string& u) {
    std::vector<std::string> code = copath(u);
    code.push_back(u);
    std::sort(code.begin(), code.end());
    BranchPairs pr = refine_pairs(f.pairs(), code);
    BranchPairs out;
    for (auto& [a, b] : pr) {
        if (is_prefix(u, a)) {
            if (!is_prefix(u, b))
                throw std::domain_error("element not supported in [" + u + "]");
            out.emplace_back(a.substr(u.size()), b.substr(u.size()));
        } else if (a != b) {
            throw std::domain_error("element not supported in [" + u + "]");
        }
    }
    return TreeDiagram::from_pairs(std::move(out));
}

// f (+) g = (f acting in [0]) * (g acting in [1]).
inline TreeDiagram oplus(const TreeDiagram& f, const TreeDiagram& g) {
    return multiply(copy_into(f, "0"), copy_into(g, "1"));
}

// Conjugation by t -> 1-t: complement every bit and reverse the order.
inline TreeDiagram mirror(const TreeDiagram& f) {
    BranchPairs pr;
    for (std::size_t i = 0; i < f.size(); ++i)
        pr.emplace_back(flip_bits(f.sources()[i]), flip_bits(f.targets()[i]));
    return TreeDiagram::from_pairs(std::move(pr));
}

// The canonical piecewise-dyadic homeomorphism [0,1] -> [a,b]: the right-comb
// subdivision with t leaves mapped onto the minimal sequence of maximal
// standard dyadic intervals covering [a,b].
struct RescaleMap {
    Fraction lo, hi;
    std::vector<std::string> pieces;  // decomposition of [a,b]
    std::vector<std::string> comb;    // right comb, same count

    static RescaleMap for_interval(const Fraction& a, const Fraction& b) {
        if (!is_dyadic(a) || !is_dyadic(b))
            throw std::domain_error("rescale target must have dyadic endpoints");
        if (!(0 <= a && a < b && b <= 1))
            throw std::domain_error("rescale target must satisfy 0 <= a < b <= 1");
        RescaleMap rm;
        rm.lo = a;
        rm.hi = b;
        rm.pieces = decompose_interval(a, b);
        rm.comb = comb_code(rm.pieces.size());
        return rm;
    }

    Point in(const Point& p) const {
        Expansion e = p.is_one() ? Expansion{"", "1"} : p.expansion();
        std::size_t i = branch_index(comb, e);
        Expansion tail = e.drop(comb[i].size());
        return canonicalize(pieces[i] + tail.pre, tail.per);
    }

    Point out(const Point& p) const {
        Fraction x = to_fraction(p);
        if (x < lo || x > hi)
            throw std::domain_error("point outside the rescale interval");
        Expansion e = (x == hi) ? p.left_expansion() : p.expansion();
        std::size_t i = branch_index(pieces, e);
        Expansion tail = e.drop(pieces[i].size());
        return canonicalize(comb[i] + tail.pre, tail.per);
    }
};

enum class Direction { in, out };

inline Point transport_point(const Fraction& a, const Fraction& b,
                             const Point& p, Direction dir) {
    RescaleMap rm = RescaleMap::for_interval(a, b);
    return dir == Direction::in ? rm.in(p) : rm.out(p);
}

// Injective homomorphism F -> F_[a,b] induced by the canonical rescaling map.
inline TreeDiagram rescale(const TreeDiagram& f, const Fraction& a,
                           const Fraction& b) {
    RescaleMap rm = RescaleMap::for_interval(a, b);
    BranchPairs pr = refine_pairs(f.pairs(), rm.comb);
    BranchPairs out;
    for (auto& [u, v] : pr) {
        std::size_t iu = prefix_index(rm.comb, u);
        std::size_t iv = prefix_index(rm.comb, v);
        out.emplace_back(rm.pieces[iu] + u.substr(rm.comb[iu].size()),
                         rm.pieces[iv] + v.substr(rm.comb[iv].size()));
    }
    for (const std::string& w : decompose_interval(Fraction(0), a))
        out.emplace_back(w, w);
    for (const std::string& w : decompose_interval(b, Fraction(1)))
        out.emplace_back(w, w);
    return TreeDiagram::from_pairs(std::move(out));
}

// Inverse of `rescale` for elements supported in [a,b].
inline TreeDiagram un_rescale(const TreeDiagram& f, const Fraction& a,
                              const Fraction& b) {
    RescaleMap rm = RescaleMap::for_interval(a, b);
    BranchPairs pr = refine_pairs(f.pairs(), rm.pieces);
    BranchPairs out;
    for (auto& [u, v] : pr) {
        bool src_in = false;
        for (std::size_t i = 0; i < rm.pieces.size() && !src_in; ++i)
            src_in = is_prefix(rm.pieces[i], u);
        if (!src_in) {
            if (u != v)
                throw std::domain_error("element not supported in the interval");
            continue;
        }
        std::size_t iu = prefix_index(rm.pieces, u);
        std::size_t iv = prefix_index(rm.pieces, v);
        out.emplace_back(rm.comb[iu] + u.substr(rm.pieces[iu].size()),
                         rm.comb[iv] + v.substr(rm.pieces[iv].size()));
    }
    return TreeDiagram::from_pairs(std::move(out));
}

}  // namespace thompson
