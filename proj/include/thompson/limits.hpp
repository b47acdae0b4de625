#pragma once

#include <string>
#include <vector>

#include "thompson/stabilizer.hpp"

namespace thompson {

// Self-similar family of branch pairs accumulating at one infinite branch:
//   p u^j u_i -> q v^j v_i   for all j >= 0 and pattern pairs i != k,
//   p u^inf   -> q v^inf     (the infinite branch),
// where (u_k -> v_k) = (u -> v) is the designated recursion pair.
struct PeriodicTail {
    std::string src_prefix, src_period;  // p, u
    std::string dst_prefix, dst_period;  // q, v
    BranchPairs pattern;                 // complete codes on both sides
    std::size_t designated = 0;          // index of (u, v) in pattern

    Point source_point() const { return canonicalize(src_prefix, src_period); }
    Point target_point() const { return canonicalize(dst_prefix, dst_period); }

    bool is_trivial() const {
        if (src_prefix != dst_prefix || src_period != dst_period) return false;
        for (const auto& [a, b] : pattern)
            if (a != b) return false;
        return true;
    }
};

// An eventually periodic element of the group of tree diagrams with finitely
// many infinite branches: finitely many plain pairs plus periodic tails.
struct LimitDiagram {
    BranchPairs finite;
    std::vector<PeriodicTail> tails;
};

inline PeriodicTail make_tail(const std::string& p, const std::string& u,
                              const std::string& q, const std::string& v) {
    if (u.empty() || v.empty() || all_of_digit(u, '0') || all_of_digit(u, '1') ||
        all_of_digit(v, '0') || all_of_digit(v, '1'))
        throw std::domain_error("tail periods must contain both digits");
    PeriodicTail t;
    t.src_prefix = p;
    t.src_period = u;
    t.dst_prefix = q;
    t.dst_period = v;
    t.pattern = assemble_branch_pairs({{u, v}});
    for (std::size_t i = 0; i < t.pattern.size(); ++i)
        if (t.pattern[i].first == u && t.pattern[i].second == v) t.designated = i;
    return t;
}

inline void validate_limit(const LimitDiagram& L) {
    struct Item {
        std::string src, dst;
    };
    std::vector<Item> items;
    for (const auto& [u, v] : L.finite) items.push_back({u, v});
    for (const PeriodicTail& t : L.tails) {
        if (t.src_period.empty() || t.dst_period.empty() ||
            all_of_digit(t.src_period, '0') || all_of_digit(t.src_period, '1') ||
            all_of_digit(t.dst_period, '0') || all_of_digit(t.dst_period, '1'))
            throw std::domain_error("tail period must contain both digits");
        if (t.designated >= t.pattern.size() || t.designated == 0 ||
            t.designated + 1 == t.pattern.size())
            throw std::domain_error("designated pattern pair must be interior");
        if (t.pattern[t.designated].first != t.src_period ||
            t.pattern[t.designated].second != t.dst_period)
            throw std::domain_error("designated pair must be (period -> period)");
        std::vector<std::string> ps, pt;
        for (const auto& [a, b] : t.pattern) {
            ps.push_back(a);
            pt.push_back(b);
        }
        require_complete_code(ps, "tail pattern sources");
        require_complete_code(pt, "tail pattern targets");
        items.push_back({t.src_prefix, t.dst_prefix});
    }
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.src < b.src; });
    std::vector<std::string> srcs, dsts;
    for (const Item& it : items) {
        srcs.push_back(it.src);
        dsts.push_back(it.dst);
    }
    require_complete_code(srcs, "limit diagram sources");
    require_complete_code(dsts, "limit diagram targets");
}

inline LimitDiagram reverse(const LimitDiagram& L) {
    LimitDiagram out;
    for (const auto& [u, v] : L.finite) out.finite.emplace_back(v, u);
    std::sort(out.finite.begin(), out.finite.end());
    for (const PeriodicTail& t : L.tails) {
        PeriodicTail r;
        r.src_prefix = t.dst_prefix;
        r.src_period = t.dst_period;
        r.dst_prefix = t.src_prefix;
        r.dst_period = t.src_period;
        for (const auto& [a, b] : t.pattern) r.pattern.emplace_back(b, a);
        r.designated = t.designated;  // order-preserving, index survives
        out.tails.push_back(std::move(r));
    }
    return out;
}

// Exact image of a point under the limit homeomorphism.
inline Point eval_limit(const LimitDiagram& L, const Point& p) {
    Expansion e = p.expansion();
    for (const PeriodicTail& t : L.tails) {
        if (!e.starts_with(t.src_prefix)) continue;
        Expansion rest = e.drop(t.src_prefix.size());
        if (expansions_equal(rest, {"", t.src_period}))
            return t.target_point();  // the infinite branch
        long j = 0;
        while (rest.starts_with(t.src_period)) {
            rest = rest.drop(t.src_period.size());
            ++j;
            check_depth(j, "eval_limit");
        }
        std::vector<std::string> ps;
        for (const auto& [a, b] : t.pattern) ps.push_back(a);
        std::size_t i = branch_index(ps, rest);
        Expansion tail2 = rest.drop(ps[i].size());
        return canonicalize(t.dst_prefix +
                                repeat(t.dst_period, static_cast<std::size_t>(j)) +
                                t.pattern[i].second + tail2.pre,
                            tail2.per);
    }
    for (const auto& [u, v] : L.finite) {
        if (!e.starts_with(u)) continue;
        Expansion tail = e.drop(u.size());
        return canonicalize(v + tail.pre, tail.per);
    }
    throw std::logic_error("limit diagram branches do not cover the point");
}

// Finite element agreeing with L outside the per-tail neighbourhoods
// [p u^depth]: the self-similar families are unrolled `depth[t]` times and
// closed with the pair p u^depth -> q v^depth.
inline TreeDiagram truncate_limit(const LimitDiagram& L,
                                  const std::vector<long>& depth) {
    BranchPairs pr = L.finite;
    for (std::size_t ti = 0; ti < L.tails.size(); ++ti) {
        const PeriodicTail& t = L.tails[ti];
        long j = depth[ti];
        for (long a = 0; a < j; ++a) {
            std::string sp = t.src_prefix + repeat(t.src_period, a);
            std::string dp = t.dst_prefix + repeat(t.dst_period, a);
            for (std::size_t i = 0; i < t.pattern.size(); ++i) {
                if (i == t.designated) continue;
                pr.emplace_back(sp + t.pattern[i].first, dp + t.pattern[i].second);
            }
        }
        pr.emplace_back(t.src_prefix + repeat(t.src_period, j),
                        t.dst_prefix + repeat(t.dst_period, j));
    }
    return TreeDiagram::from_pairs(std::move(pr));
}

// Conjugator between the stabilizers of two class-2 points.  When the
// canonical prefixes agree the tail lives inside that prefix interval;
// otherwise a finite pre-conjugator carrying [p_a u^k] onto [p_b v^k] is
// folded into the same diagram.
inline LimitDiagram make_conjugator(const Point& alpha, const Point& beta) {
    if (classify(alpha) != 2 || classify(beta) != 2)
        throw std::domain_error("conjugator endpoints must be class-2 points");
    LimitDiagram L;
    if (alpha.prefix() == beta.prefix()) {
        L.tails.push_back(make_tail(alpha.prefix(), alpha.period(),
                                    beta.prefix(), beta.period()));
        for (const std::string& s : copath(alpha.prefix()))
            L.finite.emplace_back(s, s);
        std::sort(L.finite.begin(), L.finite.end());
        validate_limit(L);
        return L;
    }
    std::string pa, pb;
    for (long k = 0;; ++k) {
        check_depth(k, "make_conjugator");
        pa = alpha.prefix() + repeat(alpha.period(), k);
        pb = beta.prefix() + repeat(beta.period(), k);
        if (!all_of_digit(pa, '0') && !all_of_digit(pa, '1') &&
            !all_of_digit(pb, '0') && !all_of_digit(pb, '1'))
            break;
    }
    BranchPairs assembled = assemble_branch_pairs({{pa, pb}});
    for (auto& [u, v] : assembled)
        if (!(u == pa && v == pb)) L.finite.emplace_back(u, v);
    L.tails.push_back(make_tail(pa, alpha.period(), pb, beta.period()));
    validate_limit(L);
    return L;
}

// g^L = L^-1 g L as a finite element, for g fixing every tail source point.
// Off the target neighbourhoods the conjugate agrees with fl^-1 g fr for the
// truncations fl, fr at the branch exponents of g; inside them it is the
// single pair q v^m1 -> q v^m2.
inline TreeDiagram conjugate(const TreeDiagram& g, const LimitDiagram& L) {
    std::vector<long> m1, m2;
    for (const PeriodicTail& t : L.tails) {
        Point a = t.source_point();
        if (!(apply(g, a) == a))
            throw std::domain_error("element must fix every tail source point");
        auto [l, r] = branch_exponents(g, t.src_prefix, t.src_period);
        m1.push_back(l);
        m2.push_back(r);
    }
    TreeDiagram fl = truncate_limit(L, m1);
    TreeDiagram fr = truncate_limit(L, m2);
    TreeDiagram A = multiply(multiply(inverse(fl), g), fr);
    for (std::size_t ti = 0; ti < L.tails.size(); ++ti) {
        const PeriodicTail& t = L.tails[ti];
        std::string from = t.dst_prefix +
                           repeat(t.dst_period, static_cast<std::size_t>(m1[ti]));
        std::string to = t.dst_prefix +
                         repeat(t.dst_period, static_cast<std::size_t>(m2[ti]));
        std::vector<std::string> code = copath(from);
        code.push_back(from);
        std::sort(code.begin(), code.end());
        BranchPairs pr = refine_pairs(A.pairs(), code, /*both_sides=*/false);
        BranchPairs out;
        for (auto& [u, v] : pr)
            if (!is_prefix(from, u)) out.emplace_back(std::move(u), std::move(v));
        out.emplace_back(from, to);
        A = TreeDiagram::from_pairs(std::move(out));
    }
    return A;
}

// Finite approximation: agrees with L outside source neighbourhoods of
// measure at most 2^-m per tail, with images inside the matching depth-m
// target neighbourhoods.
inline TreeDiagram approximate(const LimitDiagram& L, long m) {
    if (m < 1) throw std::domain_error("approximation index must be >= 1");
    std::vector<long> depth;
    for (const PeriodicTail& t : L.tails) {
        long j = 0;
        while (static_cast<long>(t.src_prefix.size()) +
                       j * static_cast<long>(t.src_period.size()) < m ||
               static_cast<long>(t.dst_prefix.size()) +
                       j * static_cast<long>(t.dst_period.size()) < m)
            ++j;
        depth.push_back(j);
    }
    return truncate_limit(L, depth);
}

// Upper bound on dist_H(L, g): exact Hamming distance to a truncation deeper
// than every branch of g, plus the measures of the exceptional
// neighbourhoods of the truncation.
inline Fraction hamming_to_limit_bound(const LimitDiagram& L,
                                       const TreeDiagram& g) {
    std::size_t deepest = 1;
    for (const auto& w : g.sources()) deepest = std::max(deepest, w.size());
    for (const auto& w : g.targets()) deepest = std::max(deepest, w.size());
    std::vector<long> depth;
    for (const PeriodicTail& t : L.tails) {
        long j = 1;
        while (t.src_prefix.size() + static_cast<std::size_t>(j) * t.src_period.size() <=
                   deepest ||
               t.dst_prefix.size() + static_cast<std::size_t>(j) * t.dst_period.size() <=
                   deepest)
            ++j;
        depth.push_back(j);
    }
    Fraction bound = hamming(truncate_limit(L, depth), g);
    for (std::size_t ti = 0; ti < L.tails.size(); ++ti) {
        const PeriodicTail& t = L.tails[ti];
        if (t.is_trivial()) continue;
        bound += Fraction(1, pow2(t.src_prefix.size() +
                                  static_cast<std::size_t>(depth[ti]) *
                                      t.src_period.size()));
        bound += Fraction(1, pow2(t.dst_prefix.size() +
                                  static_cast<std::size_t>(depth[ti]) *
                                      t.dst_period.size()));
    }
    return bound;
}

// ---------------------------------------------------------------------------
// Conjugator bundles between stabilizers of equal type.

struct ConjugatorBundle {
    StabilizerSpec from, to;
    TreeDiagram pre;    // finite alignment element
    LimitDiagram full;  // pre with the class-2 pairs replaced by tails
};

inline TreeDiagram map_through(const ConjugatorBundle& b, const TreeDiagram& g) {
    if (!member(g, b.from))
        throw std::domain_error("conjugation input must stabilize the source set");
    return conjugate(g, b.full);
}

inline ConjugatorBundle reverse(const ConjugatorBundle& b) {
    return {b.to, b.from, inverse(b.pre), reverse(b.full)};
}

inline ConjugatorBundle conjugate_stabilizer(const StabilizerSpec& U,
                                             const StabilizerSpec& V) {
    if (U.partition.type_word != V.partition.type_word)
        throw std::domain_error("stabilizer types differ");
    ConjugatorBundle out;
    out.from = U;
    out.to = V;
    if (U.points.size() == V.points.size()) {
        bool equal = true;
        for (std::size_t i = 0; i < U.points.size(); ++i)
            if (!(U.points[i] == V.points[i])) equal = false;
        if (equal) {
            out.pre = TreeDiagram::identity();
            out.full.finite = {{"", ""}};
            return out;
        }
    }
    if (U.m1() == 0 && U.m2() == 1) {
        out.pre = TreeDiagram::identity();
        out.full = make_conjugator(U.points[0], V.points[0]);
        return out;
    }
    std::size_t deepest = 1;
    for (const Point& p : U.points)
        deepest = std::max(deepest, p.prefix().size() + p.period().size());
    for (const Point& p : V.points)
        deepest = std::max(deepest, p.prefix().size() + p.period().size());
    for (long n = 0;; ++n) {
        check_depth(n, "conjugate_stabilizer");
        std::vector<std::string> su, sv;
        std::vector<bool> tailflag;
        bool ok = true;
        for (std::size_t i = 0; i < U.points.size(); ++i) {
            const Point& pu = U.points[i];
            const Point& pv = V.points[i];
            if (classify(pu) == 1) {
                std::size_t d = deepest + static_cast<std::size_t>(n) + 1;
                su.push_back(pu.prefix() +
                             std::string(d - pu.prefix().size(), '0'));
                sv.push_back(pv.prefix() +
                             std::string(d - pv.prefix().size(), '0'));
                tailflag.push_back(false);
            } else {
                su.push_back(pu.prefix() +
                             repeat(pu.period(), static_cast<std::size_t>(n)));
                sv.push_back(pv.prefix() +
                             repeat(pv.period(), static_cast<std::size_t>(n)));
                tailflag.push_back(true);
            }
        }
        auto usable = [](const std::vector<std::string>& w) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (w[i].empty() || all_of_digit(w[i], '0') ||
                    all_of_digit(w[i], '1'))
                    return false;
                if (i + 1 < w.size()) {
                    if (!(w[i] < w[i + 1]) || is_prefix(w[i], w[i + 1]) ||
                        is_prefix(w[i + 1], w[i]))
                        return false;
                    if (word_interval(w[i]).second == word_value(w[i + 1]))
                        return false;
                }
            }
            return true;
        };
        if (!usable(su) || !usable(sv)) ok = false;
        if (!ok) continue;
        BranchPairs constraint;
        for (std::size_t i = 0; i < su.size(); ++i)
            constraint.emplace_back(su[i], sv[i]);
        BranchPairs assembled = assemble_branch_pairs(constraint);
        out.pre = TreeDiagram::from_pairs(assembled);
        for (std::size_t i = 0; i < su.size(); ++i) {
            if (!tailflag[i]) continue;
            std::size_t idx = 0;
            for (std::size_t a = 0; a < assembled.size(); ++a)
                if (assembled[a].first == su[i]) idx = a;
            assembled.erase(assembled.begin() + static_cast<long>(idx));
            out.full.tails.push_back(make_tail(su[i], U.points[i].period(),
                                               sv[i], V.points[i].period()));
        }
        out.full.finite = std::move(assembled);
        validate_limit(out.full);
        return out;
    }
}

// ---------------------------------------------------------------------------
// Text format: items separated by ';'; a tail is
//   tail p(u)->q(v){a->b;*u->v;c->d}
// with the designated pair starred.

inline std::string to_string(const LimitDiagram& L) {
    struct Item {
        std::string key, text;
    };
    std::vector<Item> items;
    for (const auto& [u, v] : L.finite) items.push_back({u, u + "->" + v});
    for (const PeriodicTail& t : L.tails) {
        std::string s = "tail " + t.src_prefix + "(" + t.src_period + ")->" +
                        t.dst_prefix + "(" + t.dst_period + "){";
        for (std::size_t i = 0; i < t.pattern.size(); ++i) {
            if (i) s += ';';
            if (i == t.designated) s += '*';
            s += t.pattern[i].first + "->" + t.pattern[i].second;
        }
        s += "}";
        items.push_back({t.src_prefix, s});
    }
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.key < b.key; });
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ';';
        out += items[i].text;
    }
    return out;
}

inline LimitDiagram parse_limit(const std::string& text) {
    LimitDiagram L;
    std::size_t pos = 0;
    auto fail = [](const std::string& msg) -> std::size_t {
        throw ParseError(msg);
    };
    while (pos < text.size()) {
        if (text.compare(pos, 5, "tail ") == 0) {
            std::size_t brace = text.find('{', pos);
            std::size_t close = text.find('}', pos);
            if (brace == std::string::npos || close == std::string::npos)
                fail("unterminated tail");
            std::string head = text.substr(pos + 5, brace - pos - 5);
            std::size_t arrow = head.find(")->");
            if (arrow == std::string::npos || head.back() != ')')
                fail("bad tail header");
            std::string left = head.substr(0, arrow + 1);
            std::string right = head.substr(arrow + 3);
            auto split = [&fail](const std::string& s)
                -> std::pair<std::string, std::string> {
                std::size_t open = s.find('(');
                if (open == std::string::npos || s.back() != ')')
                    fail("bad tail prefix(period)");
                return {s.substr(0, open), s.substr(open + 1, s.size() - open - 2)};
            };
            auto [p, u] = split(left);
            auto [q, v] = split(right);
            PeriodicTail t;
            t.src_prefix = p;
            t.src_period = u;
            t.dst_prefix = q;
            t.dst_period = v;
            std::string body = text.substr(brace + 1, close - brace - 1);
            std::size_t bpos = 0;
            bool saw_star = false;
            while (bpos <= body.size() && !body.empty()) {
                std::size_t semi = body.find(';', bpos);
                std::string item = body.substr(
                    bpos, semi == std::string::npos ? std::string::npos
                                                    : semi - bpos);
                bool star = !item.empty() && item[0] == '*';
                if (star) item = item.substr(1);
                std::size_t ar = item.find("->");
                if (ar == std::string::npos) fail("bad pattern pair: " + item);
                if (star) {
                    t.designated = t.pattern.size();
                    saw_star = true;
                }
                t.pattern.emplace_back(item.substr(0, ar), item.substr(ar + 2));
                if (semi == std::string::npos) break;
                bpos = semi + 1;
            }
            if (!saw_star) fail("tail without designated pair");
            L.tails.push_back(std::move(t));
            pos = close + 1;
            if (pos < text.size() && text[pos] == ';') ++pos;
        } else {
            std::size_t semi = text.find(';', pos);
            std::string item = text.substr(
                pos, semi == std::string::npos ? std::string::npos : semi - pos);
            std::size_t ar = item.find("->");
            if (ar == std::string::npos) fail("bad pair: " + item);
            std::string u = item.substr(0, ar), v = item.substr(ar + 2);
            if (!is_bits(u) || !is_bits(v)) fail("non-binary pair: " + item);
            L.finite.emplace_back(u, v);
            pos = semi == std::string::npos ? text.size() : semi + 1;
        }
    }
    std::sort(L.finite.begin(), L.finite.end());
    try {
        validate_limit(L);
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
    return L;
}

}  // namespace thompson
