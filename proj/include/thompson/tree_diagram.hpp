#pragma once

#include <string>
#include <utility>
#include <vector>

#include "thompson/point.hpp"
#include "thompson/prefix_code.hpp"

namespace thompson {

using BranchPairs = std::vector<std::pair<std::string, std::string>>;

// Removes common carets: adjacent pairs (w0 -> z0, w1 -> z1) collapse to
// (w -> z) until none remain.  The result is the unique reduced form.
inline void reduce_pairs(BranchPairs& pairs) {
    auto sibling = [](const std::string& a, const std::string& b) {
        return !a.empty() && a.size() == b.size() && a.back() == '0' &&
               b.back() == '1' && a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
            if (sibling(pairs[i].first, pairs[i + 1].first) &&
                sibling(pairs[i].second, pairs[i + 1].second)) {
                pairs[i].first.pop_back();
                pairs[i].second.pop_back();
                pairs.erase(pairs.begin() + static_cast<long>(i) + 1);
                changed = true;
                if (i > 0) --i;
            }
        }
    }
}

// An element of F: an order-preserving bijection between two complete prefix
// codes, stored reduced with positional pairing (sources[i] -> targets[i]).
class TreeDiagram {
  public:
    TreeDiagram() : src_{""}, dst_{""} {}  // identity

    static TreeDiagram identity() { return TreeDiagram(); }

    static TreeDiagram from_pairs(BranchPairs pairs) {
        std::sort(pairs.begin(), pairs.end());
        reduce_pairs(pairs);
        TreeDiagram d;
        d.src_.clear();
        d.dst_.clear();
        for (auto& [u, v] : pairs) {
            d.src_.push_back(std::move(u));
            d.dst_.push_back(std::move(v));
        }
        require_complete_code(d.src_, "sources");
        require_complete_code(d.dst_, "targets");
        if (d.src_.size() != d.dst_.size())
            throw std::domain_error("source/target size mismatch");
        return d;
    }

    static TreeDiagram generator(long i);

    const std::vector<std::string>& sources() const { return src_; }
    const std::vector<std::string>& targets() const { return dst_; }

    std::size_t size() const { return src_.size(); }
    bool is_identity() const { return src_.size() == 1; }

    BranchPairs pairs() const {
        BranchPairs out;
        out.reserve(src_.size());
        for (std::size_t i = 0; i < src_.size(); ++i)
            out.emplace_back(src_[i], dst_[i]);
        return out;
    }

    friend bool operator==(const TreeDiagram& a, const TreeDiagram& b) {
        return a.src_ == b.src_ && a.dst_ == b.dst_;
    }

  private:
    std::vector<std::string> src_, dst_;
};

inline TreeDiagram reduce(const BranchPairs& pairs) {
    return TreeDiagram::from_pairs(pairs);
}

inline TreeDiagram inverse(const TreeDiagram& a) {
    BranchPairs pr;
    pr.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        pr.emplace_back(a.targets()[i], a.sources()[i]);
    return TreeDiagram::from_pairs(std::move(pr));
}

// Composition left to right: apply(multiply(a,b), x) = apply(b, apply(a,x)).
// Both factors are refined over the join of a's targets and b's sources.
inline TreeDiagram multiply(const TreeDiagram& a, const TreeDiagram& b) {
    std::vector<std::string> mid = join_codes(a.targets(), b.sources());
    BranchPairs pr;
    pr.reserve(mid.size());
    for (const std::string& w : mid) {
        std::size_t ia = prefix_index(a.targets(), w);
        std::size_t ib = prefix_index(b.sources(), w);
        pr.emplace_back(a.sources()[ia] + w.substr(a.targets()[ia].size()),
                        b.targets()[ib] + w.substr(b.sources()[ib].size()));
    }
    return TreeDiagram::from_pairs(std::move(pr));
}

inline TreeDiagram power(const TreeDiagram& a, long e) {
    TreeDiagram base = e < 0 ? inverse(a) : a;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    TreeDiagram acc;
    while (n > 0) {
        if (n & 1) acc = multiply(acc, base);
        n >>= 1;
        if (n) base = multiply(base, base);
    }
    return acc;
}

// g^h = h^{-1} g h.
inline TreeDiagram conjugate(const TreeDiagram& g, const TreeDiagram& h) {
    return multiply(multiply(inverse(h), g), h);
}

inline TreeDiagram commutator(const TreeDiagram& a, const TreeDiagram& b) {
    return multiply(multiply(multiply(inverse(a), inverse(b)), a), b);
}

inline TreeDiagram TreeDiagram::generator(long i) {
    if (i < 0) throw std::domain_error("generator index must be >= 0");
    if (i == 0)
        return from_pairs({{"00", "0"}, {"01", "10"}, {"1", "11"}});
    // x_i is the copy of x_0 acting inside [1^i].
    std::string u(static_cast<std::size_t>(i), '1');
    BranchPairs pr{{u + "00", u + "0"}, {u + "01", u + "10"}, {u + "1", u + "11"}};
    for (const auto& s : copath(u)) pr.emplace_back(s, s);
    return from_pairs(std::move(pr));
}

inline TreeDiagram generator(long i) { return TreeDiagram::generator(i); }

// Exact image of a point: find the source branch containing its expansion,
// swap the prefix, re-canonicalize.
inline Point apply(const TreeDiagram& f, const Point& p) {
    Expansion e = p.expansion();
    std::size_t i = branch_index(f.sources(), e);
    Expansion tail = e.drop(f.sources()[i].size());
    return canonicalize(f.targets()[i] + tail.pre, tail.per);
}

enum class Side { left, right };

// log2 of the slope on the branch touching p from the given side.
inline long slope_exponent(const TreeDiagram& f, const Point& p, Side side) {
    if (side == Side::left && p.is_zero())
        throw std::domain_error("no left slope at 0");
    if (side == Side::right && p.is_one())
        throw std::domain_error("no right slope at 1");
    Expansion e = (side == Side::right) ? p.expansion() : p.left_expansion();
    std::size_t i = branch_index(f.sources(), e);
    return static_cast<long>(f.sources()[i].size()) -
           static_cast<long>(f.targets()[i].size());
}

// Splits pairs until no source (and, with both_sides, no target) is a proper
// prefix of a word in the given code.
inline BranchPairs refine_pairs(BranchPairs pairs,
                                const std::vector<std::string>& code,
                                bool both_sides = true) {
    bool changed = true;
    while (changed) {
        changed = false;
        BranchPairs next;
        next.reserve(pairs.size());
        for (auto& [u, v] : pairs) {
            bool split = false;
            for (const auto& w : code) {
                if ((u.size() < w.size() && is_prefix(u, w)) ||
                    (both_sides && v.size() < w.size() && is_prefix(v, w))) {
                    split = true;
                    break;
                }
            }
            if (split) {
                next.emplace_back(u + '0', v + '0');
                next.emplace_back(u + '1', v + '1');
                changed = true;
            } else {
                next.emplace_back(std::move(u), std::move(v));
            }
        }
        pairs = std::move(next);
    }
    return pairs;
}

// --- text format -----------------------------------------------------------
// Semicolon-separated pairs "u->v"; "e" is the identity.  Aliases x0, x1,
// x<k> resolve to generators.

inline BranchPairs parse_branch_pairs(const std::string& text) {
    BranchPairs out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t semi = text.find(';', pos);
        std::string item = text.substr(
            pos, semi == std::string::npos ? std::string::npos : semi - pos);
        std::size_t arrow = item.find("->");
        if (arrow == std::string::npos)
            throw ParseError("expected 'u->v' in element: " + item);
        std::string u = item.substr(0, arrow);
        std::string v = item.substr(arrow + 2);
        if (!is_bits(u) || !is_bits(v))
            throw ParseError("non-binary branch word: " + item);
        out.emplace_back(std::move(u), std::move(v));
        if (semi == std::string::npos) break;
        pos = semi + 1;
    }
    if (out.empty()) throw ParseError("empty element text");
    return out;
}

inline TreeDiagram parse_element(const std::string& text) {
    if (text == "e") return TreeDiagram::identity();
    if (text.size() >= 2 && text[0] == 'x' &&
        text.find("->") == std::string::npos) {
        std::string digits = text.substr(1);
        if (digits.find_first_not_of("0123456789") != std::string::npos ||
            digits.size() > 6)
            throw ParseError("bad generator alias: " + text);
        return generator(std::stol(digits));
    }
    BranchPairs pr = parse_branch_pairs(text);
    BranchPairs sorted = pr;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != pr)
        throw ParseError("element pairs must be sorted by source");
    try {
        return TreeDiagram::from_pairs(std::move(pr));
    } catch (const std::domain_error& e) {
        throw ParseError(e.what());
    }
}

inline std::string to_string(const TreeDiagram& d) {
    if (d.is_identity()) return "e";
    std::string out;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (i) out += ';';
        out += d.sources()[i];
        out += "->";
        out += d.targets()[i];
    }
    return out;
}

}  // namespace thompson
