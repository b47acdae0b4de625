#pragma once

#include <map>
#include <string>
#include <vector>

#include "thompson/builder.hpp"
#include "thompson/wordcalc.hpp"

namespace thompson {

// A finite ordered set U of rational points of (0,1); the pointwise
// stabilizer of U in F is the subgroup the operations below work with.
struct StabilizerSpec {
    std::vector<Point> points;  // strictly increasing
    NaturalPartition partition;

    static StabilizerSpec of(std::vector<Point> pts) {
        StabilizerSpec s;
        s.partition = natural_partition(pts);
        std::sort(pts.begin(), pts.end(),
                  [](const Point& a, const Point& b) { return a < b; });
        s.points = std::move(pts);
        return s;
    }

    std::size_t m1() const { return partition.class1.size(); }
    std::size_t m2() const { return partition.class2.size(); }
    std::size_t rank() const { return 2 * m1() + m2() + 2; }
};

inline bool member(const TreeDiagram& f, const StabilizerSpec& U) {
    for (const Point& p : U.points)
        if (!(apply(f, p) == p)) return false;
    return true;
}

// Slope exponents at 0+, then per point in increasing order (class 1: left
// and right; class 2: right exponent divided by the period length), then 1-.
// A homomorphism onto Z^{2 m1 + m2 + 2}.
inline std::vector<long> signature(const TreeDiagram& f,
                                   const StabilizerSpec& U) {
    if (!member(f, U))
        throw std::domain_error("signature requires a stabilizer member");
    std::vector<long> out;
    out.push_back(slope_exponent(f, Point::zero(), Side::right));
    for (const Point& p : U.points) {
        if (classify(p) == 1) {
            out.push_back(slope_exponent(f, p, Side::left));
            out.push_back(slope_exponent(f, p, Side::right));
        } else {
            long e = slope_exponent(f, p, Side::right);
            long s = static_cast<long>(p.period().size());
            if (e % s != 0)
                throw std::logic_error("slope exponent not divisible by period");
            out.push_back(e / s);
        }
    }
    out.push_back(slope_exponent(f, Point::one(), Side::left));
    return out;
}

inline bool kernel_test(const TreeDiagram& f, const StabilizerSpec& U) {
    std::vector<long> sig = signature(f, U);
    return std::all_of(sig.begin(), sig.end(), [](long v) { return v == 0; });
}

// ---------------------------------------------------------------------------
// Standard position for a block of class-2 points: prefixes are lengthened
// until their intervals are pairwise disjoint, avoid 0 and 1 and are not
// adjacent; an inner conjugator then carries [P_j] onto the even leaf [v_2j]
// of the right comb with 2m+1 leaves.

struct StandardPosition {
    std::vector<std::string> prefixes;  // lengthened P_j, j = 1..m
    std::vector<std::string> periods;   // canonical s_j
    std::vector<std::string> leaves;    // v_1..v_{2m+1} (1-based via leaf())
    TreeDiagram to_standard;            // pairs P_j -> v_{2j}

    const std::string& leaf(std::size_t i) const { return leaves[i - 1]; }
    std::size_t m() const { return prefixes.size(); }

    // The image of the j-th point (1-based): .v_{2j} s_j^inf.
    Point std_point(std::size_t j) const {
        return canonicalize(leaf(2 * j), periods[j - 1]);
    }
};

inline StandardPosition standard_position(const std::vector<Point>& pts) {
    std::size_t m = pts.size();
    if (m == 0) throw std::logic_error("standard_position needs points");
    for (const Point& p : pts)
        if (classify(p) != 2)
            throw std::domain_error("standard position needs class-2 points");
    StandardPosition sp;
    sp.periods.reserve(m);
    for (const Point& p : pts) sp.periods.push_back(p.period());
    for (long k = 0;; ++k) {
        check_depth(k, "standard_position");
        std::vector<std::string> pref;
        pref.reserve(m);
        for (const Point& p : pts)
            pref.push_back(p.prefix() + repeat(p.period(), k));
        bool ok = true;
        for (const std::string& w : pref)
            if (all_of_digit(w, '0') || all_of_digit(w, '1')) ok = false;
        for (std::size_t j = 0; ok && j + 1 < m; ++j) {
            if (!(pref[j] < pref[j + 1]) || is_prefix(pref[j], pref[j + 1]) ||
                is_prefix(pref[j + 1], pref[j]))
                ok = false;
            else if (word_interval(pref[j]).second == word_value(pref[j + 1]))
                ok = false;  // adjacent intervals
        }
        if (!ok) continue;
        sp.prefixes = std::move(pref);
        break;
    }
    sp.leaves = comb_code(2 * m + 1);
    BranchPairs c;
    for (std::size_t j = 1; j <= m; ++j)
        c.emplace_back(sp.prefixes[j - 1], sp.leaf(2 * j));
    sp.to_standard = from_branch_pairs(c);
    return sp;
}

// Stable letter of the explicit generating set: shifts the period off the
// even leaf and feeds the two neighbouring odd leaves.
inline TreeDiagram stable_letter(const StandardPosition& sp, std::size_t j) {
    BranchPairs c;
    c.emplace_back(sp.leaf(2 * j - 1), sp.leaf(2 * j - 1) + "0");
    c.emplace_back(sp.leaf(2 * j) + sp.periods[j - 1], sp.leaf(2 * j));
    c.emplace_back(sp.leaf(2 * j + 1), sp.leaf(2 * j + 1) + "1");
    for (std::size_t k = 1; k <= 2 * sp.m() + 1; ++k)
        if (k != 2 * j - 1 && k != 2 * j && k != 2 * j + 1)
            c.emplace_back(sp.leaf(k), sp.leaf(k));
    return from_branch_pairs(c);
}

// Stable letter in halving form: fixes the outer halves of the neighbouring
// odd leaves and maps the inner halves into themselves.
inline TreeDiagram halving_letter(const StandardPosition& sp, std::size_t j) {
    BranchPairs c;
    c.emplace_back(sp.leaf(2 * j - 1) + "0", sp.leaf(2 * j - 1) + "0");
    c.emplace_back(sp.leaf(2 * j - 1) + "1", sp.leaf(2 * j - 1) + "10");
    c.emplace_back(sp.leaf(2 * j) + sp.periods[j - 1], sp.leaf(2 * j));
    c.emplace_back(sp.leaf(2 * j + 1) + "0", sp.leaf(2 * j + 1) + "01");
    c.emplace_back(sp.leaf(2 * j + 1) + "1", sp.leaf(2 * j + 1) + "1");
    for (std::size_t k = 1; k <= 2 * sp.m() + 1; ++k)
        if (k != 2 * j - 1 && k != 2 * j && k != 2 * j + 1)
            c.emplace_back(sp.leaf(k), sp.leaf(k));
    return from_branch_pairs(c);
}

// ---------------------------------------------------------------------------
// Generating sets.

struct NamedElement {
    std::string name;
    TreeDiagram element;
};

struct FactorLetter {
    std::string name;
    long exp;
};
using FactorWord = std::vector<FactorLetter>;

inline FactorWord fw_invert(const FactorWord& w) {
    FactorWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back({it->name, -it->exp});
    return out;
}

inline FactorWord fw_concat(std::initializer_list<FactorWord> parts) {
    FactorWord out;
    for (const FactorWord& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

struct CertEntry {
    std::string target;  // extended generator name
    FactorWord word;     // over the minimal generators
};

struct Block {
    Fraction lo, hi;                 // dyadic interval of the block
    std::vector<Point> local_points; // class-2 points transported into [0,1]
    std::size_t m = 0;
    StandardPosition std_pos;        // valid when m >= 1
};

struct GeneratorSet {
    std::vector<NamedElement> minimal;
    std::vector<NamedElement> extended;
    TreeDiagram conjugator;  // product of the lifted per-block conjugators
    std::vector<Block> blocks;

    const TreeDiagram& lookup(const std::string& name) const {
        for (const auto& g : minimal)
            if (g.name == name) return g.element;
        for (const auto& g : extended)
            if (g.name == name) return g.element;
        throw std::domain_error("unknown generator name: " + name);
    }
};

inline TreeDiagram evaluate(const FactorWord& w, const GeneratorSet& gens) {
    TreeDiagram acc;
    for (const FactorLetter& l : w)
        acc = multiply(acc, power(gens.lookup(l.name), l.exp));
    return acc;
}

namespace detail {

// Named generators of one block in its own [0,1] coordinates, in standard
// position (not yet conjugated back).
struct BlockGens {
    std::vector<NamedElement> minimal;   // x, y, g1..gm
    std::vector<NamedElement> extended;  // x0@i, x1@i, g1..gm
    std::vector<TreeDiagram> stable;     // g_j, 1-based j-1
};

inline BlockGens block_generators_std(const StandardPosition& sp) {
    BlockGens out;
    std::size_t m = sp.m();
    auto X = [&sp](std::size_t leafnum) {
        return copy_into(generator(0), sp.leaf(leafnum));
    };
    for (std::size_t j = 1; j <= m; ++j)
        out.stable.push_back(stable_letter(sp, j));
    // x and y interleave copies of x0 over every other odd leaf.
    TreeDiagram x, y;
    if (m % 2 == 1) {
        for (std::size_t i = 1; i <= (m + 1) / 2; ++i)
            x = multiply(x, X(4 * i - 3));
        for (std::size_t i = 1; i <= (m + 1) / 2; ++i)
            y = multiply(y, X(4 * i - 1));
    } else {
        for (std::size_t i = 1; i <= m / 2; ++i) x = multiply(x, X(4 * i - 3));
        x = multiply(x, X(2 * m - 1));
        for (std::size_t i = 1; i <= m / 2; ++i) y = multiply(y, X(4 * i - 1));
        y = multiply(y, X(2 * m + 1));
    }
    out.minimal.push_back({"x", x});
    out.minimal.push_back({"y", y});
    for (std::size_t j = 1; j <= m; ++j)
        out.minimal.push_back({"g" + std::to_string(j), out.stable[j - 1]});
    for (std::size_t i = 1; i <= m + 1; ++i) {
        out.extended.push_back(
            {"x0@" + std::to_string(i), copy_into(generator(0), sp.leaf(2 * i - 1))});
        out.extended.push_back(
            {"x1@" + std::to_string(i), copy_into(generator(1), sp.leaf(2 * i - 1))});
    }
    for (std::size_t j = 1; j <= m; ++j)
        out.extended.push_back({"g" + std::to_string(j), out.stable[j - 1]});
    return out;
}

// Certificate words over {x, y, g_j} for one block, block-local names.
inline std::vector<CertEntry> block_certificates(std::size_t m) {
    std::vector<CertEntry> out;
    auto L = [](const std::string& n, long e) { return FactorWord{{n, e}}; };
    auto g = [](std::size_t j) { return "g" + std::to_string(j); };
    if (m == 0) {
        out.push_back({"x0@1", L("x", 1)});
        out.push_back({"x1@1", L("y", 1)});
        return out;
    }
    // (x0)_[u] = fr^2 gr^-1 fr^-1 gr fr^-1 gl^-1 fl^-1 gl fl
    auto chain = [&](const FactorWord& fl, const FactorWord& fr,
                     const std::string& gl, const std::string& gr) {
        return fw_concat({fr, fr, L(gr, -1), fw_invert(fr), L(gr, 1),
                          fw_invert(fr), L(gl, -1), fw_invert(fl), L(gl, 1), fl});
    };
    // x0word is keyed by the copy index i = 1..m+1 (copy inside [v_{2i-1}]).
    // xrest / yrest hold the indices still to be divided out of xw / yw.
    std::map<std::size_t, FactorWord> x0word;
    FactorWord xw = L("x", 1), yw = L("y", 1);
    std::vector<std::size_t> xrest, yrest;
    if (m % 2 == 1) {
        for (std::size_t k = 2; k <= (m + 1) / 2; ++k) {
            x0word[2 * k - 1] = chain(xw, xw, g(2 * k - 1), g(2 * k - 2));
            xrest.push_back(2 * k - 1);
        }
        for (std::size_t k = 1; k <= (m - 1) / 2; ++k) {
            x0word[2 * k] = chain(yw, yw, g(2 * k), g(2 * k - 1));
            yrest.push_back(2 * k);
        }
    } else {
        FactorWord first = chain(L("x", 1), L("y", 1), g(m), g(m - 1));
        x0word[m] = first;
        xw = fw_concat({L("x", 1), fw_invert(first)});
        yw = fw_concat({L("y", 1), fw_invert(first)});
        for (std::size_t k = 2; k <= m / 2; ++k) {
            x0word[2 * k - 1] = chain(xw, xw, g(2 * k - 1), g(2 * k - 2));
            xrest.push_back(2 * k - 1);
        }
        for (std::size_t k = 1; k + 1 <= m / 2; ++k) {
            x0word[2 * k] = chain(yw, yw, g(2 * k), g(2 * k - 1));
            yrest.push_back(2 * k);
        }
    }
    {
        FactorWord w = xw;
        for (std::size_t i : xrest) w = fw_concat({w, fw_invert(x0word[i])});
        x0word[1] = w;
    }
    {
        FactorWord w = yw;
        for (std::size_t i : yrest) w = fw_concat({w, fw_invert(x0word[i])});
        x0word[m + 1] = w;
    }
    for (std::size_t i = 1; i <= m + 1; ++i)
        out.push_back({"x0@" + std::to_string(i), x0word[i]});
    for (std::size_t i = 1; i <= m + 1; ++i) {
        const FactorWord& c = x0word[i];
        if (i == 1) {
            // x1 = x0^-1 (x0+1)^-1 x0^2 with (x0+1) copy = conjugate by g1
            out.push_back({"x1@1",
                           fw_concat({fw_invert(c), L(g(1), -1), fw_invert(c),
                                      L(g(1), 1), c, c})});
        } else {
            out.push_back({"x1@" + std::to_string(i),
                           fw_concat({L(g(i - 1), -1), c, L(g(i - 1), 1)})});
        }
    }
    for (std::size_t j = 1; j <= m; ++j) out.push_back({g(j), L(g(j), 1)});
    return out;
}

}  // namespace detail

// Block decomposition of [0,1] at the class-1 points of U.
inline std::vector<std::pair<Fraction, Fraction>> block_ranges(
    const StabilizerSpec& U) {
    std::vector<Fraction> cuts{Fraction(0)};
    for (const Point& p : U.partition.class1) cuts.push_back(to_fraction(p));
    cuts.push_back(Fraction(1));
    std::vector<std::pair<Fraction, Fraction>> out;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        out.emplace_back(cuts[i], cuts[i + 1]);
    return out;
}

inline GeneratorSet generators(const StabilizerSpec& U) {
    GeneratorSet out;
    TreeDiagram total_conj;
    auto ranges = block_ranges(U);
    for (std::size_t b = 0; b < ranges.size(); ++b) {
        const Fraction lo = ranges[b].first;
        const Fraction hi = ranges[b].second;
        Block blk;
        blk.lo = lo;
        blk.hi = hi;
        for (const Point& p : U.partition.class2) {
            Fraction x = to_fraction(p);
            if (lo < x && x < hi)
                blk.local_points.push_back(transport_point(lo, hi, p, Direction::out));
        }
        blk.m = blk.local_points.size();
        std::string prefix = "b" + std::to_string(b) + ":";
        bool whole = (lo == 0 && hi == 1);
        auto lift = [&](const TreeDiagram& e) {
            return whole ? e : rescale(e, lo, hi);
        };
        if (blk.m == 0) {
            out.minimal.push_back({prefix + "x", lift(generator(0))});
            out.minimal.push_back({prefix + "y", lift(generator(1))});
            out.extended.push_back({prefix + "x0@1", lift(generator(0))});
            out.extended.push_back({prefix + "x1@1", lift(generator(1))});
        } else {
            blk.std_pos = standard_position(blk.local_points);
            TreeDiagram fin = blk.std_pos.to_standard;
            TreeDiagram fin_inv = inverse(fin);
            auto back = [&](const TreeDiagram& e) {
                return lift(multiply(multiply(fin, e), fin_inv));
            };
            detail::BlockGens bg = detail::block_generators_std(blk.std_pos);
            for (auto& ne : bg.minimal)
                out.minimal.push_back({prefix + ne.name, back(ne.element)});
            for (auto& ne : bg.extended)
                out.extended.push_back({prefix + ne.name, back(ne.element)});
            total_conj = multiply(total_conj, lift(fin));
        }
        out.blocks.push_back(std::move(blk));
    }
    out.conjugator = total_conj;
    return out;
}

inline std::vector<CertEntry> generation_certificates(const StabilizerSpec& U) {
    std::vector<CertEntry> out;
    auto ranges = block_ranges(U);
    for (std::size_t b = 0; b < ranges.size(); ++b) {
        auto [lo, hi] = ranges[b];
        std::size_t m = 0;
        for (const Point& p : U.partition.class2) {
            Fraction x = to_fraction(p);
            if (lo < x && x < hi) ++m;
        }
        std::string prefix = "b" + std::to_string(b) + ":";
        for (CertEntry e : detail::block_certificates(m)) {
            CertEntry qualified;
            qualified.target = prefix + e.target;
            for (FactorLetter& l : e.word)
                qualified.word.push_back({prefix + l.name, l.exp});
            out.push_back(std::move(qualified));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear factorization over the extended generating set.

namespace detail {

// Component of f inside one block, as an element in the block's own [0,1]
// coordinates.  `piece_code` is the concatenated decomposition of all blocks.
inline TreeDiagram block_component(const TreeDiagram& f,
                                   const std::vector<std::string>& piece_code,
                                   const std::vector<std::string>& own_pieces,
                                   const Fraction& lo, const Fraction& hi) {
    BranchPairs pr = refine_pairs(f.pairs(), piece_code);
    BranchPairs inside;
    for (auto& [u, v] : pr) {
        bool in = false;
        for (const auto& w : own_pieces)
            if (is_prefix(w, u)) {
                in = true;
                break;
            }
        if (!in) continue;
        bool vin = false;
        for (const auto& w : own_pieces)
            if (is_prefix(w, v)) {
                vin = true;
                break;
            }
        if (!vin)
            throw std::domain_error("stabilizer member does not preserve block");
        inside.emplace_back(u, v);
    }
    for (const auto& w : piece_code) {
        bool own = false;
        for (const auto& p : own_pieces)
            if (is_prefix(p, w) || is_prefix(w, p)) {
                own = true;
                break;
            }
        if (!own) inside.emplace_back(w, w);
    }
    TreeDiagram comp = TreeDiagram::from_pairs(std::move(inside));
    return (lo == 0 && hi == 1) ? comp : un_rescale(comp, lo, hi);
}

inline FactorWord factor_block(TreeDiagram h, const Block& blk,
                               const detail::BlockGens& bg,
                               const std::string& prefix) {
    FactorWord pre, mid, post;
    if (blk.m == 0) {
        GroupWord w = diagram_to_word(h);
        for (const Letter& l : w)
            mid.push_back({prefix + (l.index == 0 ? "x0@1" : "x1@1"), l.exp});
        return mid;
    }
    const StandardPosition& sp = blk.std_pos;
    h = conjugate(h, sp.to_standard);
    for (std::size_t j = 1; j <= blk.m; ++j) {
        Point beta = sp.std_point(j);
        if (!(apply(h, beta) == beta))
            throw std::domain_error("not a stabilizer member in standard position");
        auto [l, r] = branch_exponents(h, sp.leaf(2 * j), sp.periods[j - 1]);
        const TreeDiagram& gj = bg.stable[j - 1];
        h = multiply(multiply(power(gj, -l), h), power(gj, r));
        std::string name = prefix + "g" + std::to_string(j);
        if (l != 0) pre.push_back({name, l});
        if (r != 0) post.insert(post.begin(), {name, -r});
    }
    // h now lies in the direct product over the odd leaves
    BranchPairs pr = refine_pairs(h.pairs(), sp.leaves);
    for (std::size_t i = 1; i <= blk.m + 1; ++i) {
        const std::string& u = sp.leaf(2 * i - 1);
        BranchPairs local;
        for (auto& [a, b] : pr) {
            if (!is_prefix(u, a)) continue;
            if (!is_prefix(u, b))
                throw std::logic_error("block component escapes its leaf");
            local.emplace_back(a.substr(u.size()), b.substr(u.size()));
        }
        GroupWord w = diagram_to_word(TreeDiagram::from_pairs(std::move(local)));
        for (const Letter& l : w)
            mid.push_back({prefix + (l.index == 0 ? "x0@" : "x1@") +
                               std::to_string(i),
                           l.exp});
    }
    for (std::size_t j = 1; j <= blk.m; ++j) {
        const std::string& u = sp.leaf(2 * j);
        for (auto& [a, b] : pr)
            if (is_prefix(u, a) && a != b)
                throw std::logic_error("even leaf not fixed after stripping");
    }
    return fw_concat({pre, mid, post});
}

}  // namespace detail

inline FactorWord factor(const TreeDiagram& f, const StabilizerSpec& U,
                         const GeneratorSet& gens) {
    if (!member(f, U))
        throw std::domain_error("factor requires a stabilizer member");
    FactorWord out;
    std::vector<std::string> piece_code;
    std::vector<std::vector<std::string>> per_block;
    for (const Block& blk : gens.blocks) {
        per_block.push_back(decompose_interval(blk.lo, blk.hi));
        for (const auto& w : per_block.back()) piece_code.push_back(w);
    }
    for (std::size_t b = 0; b < gens.blocks.size(); ++b) {
        const Block& blk = gens.blocks[b];
        TreeDiagram local = detail::block_component(f, piece_code, per_block[b],
                                                    blk.lo, blk.hi);
        if (local.is_identity()) continue;
        detail::BlockGens bg;
        if (blk.m >= 1) bg = detail::block_generators_std(blk.std_pos);
        FactorWord part = detail::factor_block(local, blk, bg,
                                               "b" + std::to_string(b) + ":");
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline FactorWord factor(const TreeDiagram& f, const StabilizerSpec& U) {
    GeneratorSet gens = generators(U);
    return factor(f, U, gens);
}

// ---------------------------------------------------------------------------
// Ascending HNN structure over K = F^{m+1}.

struct HnnRow {
    std::size_t stable;  // j
    std::size_t block;   // i
    std::string base;    // "x0" or "x1"
    GroupWord computed;  // image in the i-th copy, normal form
    GroupWord claimed;
    bool agrees;
};

struct HnnReport {
    bool ascending = true;
    std::vector<HnnRow> rows;
    StandardPosition std_pos;
    std::vector<TreeDiagram> letters;
};

inline HnnReport hnn_check(const StabilizerSpec& U) {
    if (U.m1() != 0 || U.m2() == 0)
        throw std::domain_error("hnn_check needs a nonempty set of class-2 points");
    HnnReport rep;
    std::size_t m = U.m2();
    rep.std_pos = standard_position(U.points);
    const StandardPosition& sp = rep.std_pos;
    for (std::size_t j = 1; j <= m; ++j)
        rep.letters.push_back(halving_letter(sp, j));

    auto claimed_word = [&](std::size_t j, std::size_t i,
                            const std::string& base) -> GroupWord {
        if (i == j)
            return base == "x0" ? parse_word("x1 x0^-1") : parse_word("x1");
        if (i == j + 1)
            return base == "x0" ? parse_word("x0 x1^-1")
                                : parse_word("x1^2 x2^-1 x1^-1");
        return base == "x0" ? parse_word("x0") : parse_word("x1");
    };

    for (std::size_t j = 1; j <= m; ++j) {
        const TreeDiagram& t = rep.letters[j - 1];
        for (std::size_t i = 1; i <= m + 1; ++i) {
            for (const char* base : {"x0", "x1"}) {
                TreeDiagram gen =
                    copy_into(generator(base[1] - '0'), sp.leaf(2 * i - 1));
                TreeDiagram image = conjugate(gen, t);
                // ascending condition: support stays inside the odd leaves
                for (const Interval& iv : support(image)) {
                    bool inside = false;
                    for (std::size_t ii = 1; ii <= m + 1; ++ii) {
                        auto [lo, hi] = word_interval(sp.leaf(2 * ii - 1));
                        if (lo <= iv.lo && iv.hi <= hi) {
                            inside = true;
                            break;
                        }
                    }
                    if (!inside) rep.ascending = false;
                }
                HnnRow row;
                row.stable = j;
                row.block = i;
                row.base = base;
                row.claimed = claimed_word(j, i, base);
                TreeDiagram local = extract_copy(image, sp.leaf(2 * i - 1));
                row.computed = diagram_to_normal_form(local);
                row.agrees = (local == word_to_diagram(row.claimed));
                rep.rows.push_back(std::move(row));
            }
        }
    }
    return rep;
}

}  // namespace thompson
