#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "thompson/bits.hpp"

namespace thompson {

// A point of [0,1] with an exact eventually periodic binary expansion.
//
// Canonical storage is (prefix, period) with three shapes:
//   period == "0" : finite dyadic value .prefix, prefix has no trailing 0;
//   period == "1" : only for the value 1 (prefix empty);
//   otherwise     : rational non-dyadic value .prefix(period)^inf, period
//                    primitive with both digits, and the prefix is shortest
//                    (its last bit, if any, differs from the period's last).
class Point {
  public:
    static Point zero() { return Point("", "0"); }
    static Point one() { return Point("", "1"); }

    const std::string& prefix() const { return prefix_; }
    const std::string& period() const { return period_; }

    bool is_dyadic() const { return period_ == "0" || period_ == "1"; }
    bool is_one() const { return period_ == "1"; }
    bool is_zero() const { return period_ == "0" && prefix_.empty(); }

    Expansion expansion() const { return {prefix_, period_}; }

    // Expansion approaching the point from below (used for left slopes).
    // For a non-zero dyadic .w1 this is .w0111..., for 1 it is .111...
    Expansion left_expansion() const {
        if (!is_dyadic()) return expansion();
        if (is_zero()) throw std::domain_error("0 has no expansion from below");
        if (is_one()) return {"", "1"};
        std::string p = prefix_;  // canonical, ends in '1'
        p.back() = '0';
        return {p, "1"};
    }

    friend bool operator==(const Point& a, const Point& b) {
        return a.prefix_ == b.prefix_ && a.period_ == b.period_;
    }

  private:
    Point(std::string pre, std::string per)
        : prefix_(std::move(pre)), period_(std::move(per)) {}

    friend Point canonicalize(std::string, std::string);

    std::string prefix_;
    std::string period_;
};

// Canonical form of the value .prefix (period)^inf for an arbitrary nonempty
// period.  Single-digit periods collapse to the dyadic shapes.
inline Point canonicalize(std::string prefix, std::string period) {
    if (period.empty()) throw std::domain_error("empty period");
    if (!is_bits(prefix) || !is_bits(period))
        throw std::domain_error("binary words only");
    if (all_of_digit(period, '0')) {
        while (!prefix.empty() && prefix.back() == '0') prefix.pop_back();
        return Point(std::move(prefix), "0");
    }
    if (all_of_digit(period, '1')) {
        // .p 111... = .p + 2^{-|p|}: binary increment, then strip zeros.
        auto last0 = prefix.find_last_of('0');
        if (last0 == std::string::npos) return Point("", "1");
        prefix.resize(last0 + 1);
        prefix.back() = '1';
        return Point(std::move(prefix), "0");
    }
    period = primitive_root(period);
    while (!prefix.empty() && prefix.back() == period.back()) {
        prefix.pop_back();
        period = rotate_left(period, period.size() - 1);
    }
    return Point(std::move(prefix), std::move(period));
}

inline Point point_of(const Expansion& e) { return canonicalize(e.pre, e.per); }

inline Fraction to_fraction(const Point& p) {
    if (p.is_one()) return Fraction(1);
    if (p.is_dyadic()) return word_value(p.prefix());
    // .p s^inf = (int(p) + int(s)/(2^|s|-1)) / 2^|p|
    const std::string& s = p.period();
    Fraction tail(numerator(Fraction(word_value(s) * pow2(s.size()))),
                  pow2(s.size()) - 1);
    return Fraction(word_value(p.prefix()) * pow2(p.prefix().size()) + tail) /
           Fraction(pow2(p.prefix().size()));
}

// Base-2 long division.  The pre-period has length v2(den); after that the
// remainders are purely periodic, so the cycle closes at the first repeat of
// the remainder entering it.
inline Point from_fraction(const Fraction& f) {
    if (f < 0 || f > 1) throw std::domain_error("point outside [0,1]");
    if (f == 1) return Point::one();
    Integer num = numerator(f), den = denominator(f);
    std::size_t twos = 0;
    for (Integer d = den; (d & 1) == 0; d >>= 1) ++twos;
    Integer rem = num;
    auto step = [&rem, &den]() {
        rem <<= 1;
        if (rem >= den) {
            rem -= den;
            return '1';
        }
        return '0';
    };
    std::string prefix;
    for (std::size_t i = 0; i < twos; ++i) prefix += step();
    if (rem == 0) return canonicalize(prefix, "0");
    std::string period;
    Integer entry = rem;
    do {
        period += step();
    } while (rem != entry);
    return canonicalize(prefix, period);
}

inline std::strong_ordering compare(const Point& a, const Point& b) {
    Fraction fa = to_fraction(a), fb = to_fraction(b);
    if (fa < fb) return std::strong_ordering::less;
    if (fb < fa) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

inline bool operator<(const Point& a, const Point& b) {
    return compare(a, b) == std::strong_ordering::less;
}

// Class 1 = finite dyadic, class 2 = rational non-dyadic.
inline int classify(const Point& p) { return p.is_dyadic() ? 1 : 2; }

struct NaturalPartition {
    std::vector<Point> class1;
    std::vector<Point> class2;
    std::string type_word;  // over {1,2}, in increasing point order
};

inline NaturalPartition natural_partition(std::vector<Point> points) {
    for (const Point& p : points)
        if (p.is_zero() || p.is_one())
            throw std::domain_error("points must lie strictly inside (0,1)");
    std::sort(points.begin(), points.end(),
              [](const Point& a, const Point& b) { return a < b; });
    for (std::size_t i = 0; i + 1 < points.size(); ++i)
        if (points[i] == points[i + 1])
            throw std::domain_error("duplicate point in set");
    NaturalPartition out;
    for (Point& p : points) {
        if (classify(p) == 1) {
            out.type_word += '1';
            out.class1.push_back(std::move(p));
        } else {
            out.type_word += '2';
            out.class2.push_back(std::move(p));
        }
    }
    return out;
}

inline std::string to_string(const Point& p) {
    if (p.is_zero()) return "0/1";
    if (p.is_one()) return "1/1";
    if (p.is_dyadic()) return "." + p.prefix();
    return "." + p.prefix() + "(" + p.period() + ")";
}

inline Point parse_point(const std::string& text) {
    if (text.empty()) throw ParseError("empty point literal");
    if (text[0] != '.') {
        Fraction f = parse_fraction(text);
        if (f < 0 || f > 1) throw std::domain_error("point outside [0,1]");
        return from_fraction(f);
    }
    std::string body = text.substr(1);
    auto open = body.find('(');
    if (open == std::string::npos) {
        if (!is_bits(body)) throw ParseError("bad dyadic literal: " + text);
        return canonicalize(body, "0");
    }
    if (body.back() != ')') throw ParseError("unclosed period: " + text);
    std::string pre = body.substr(0, open);
    std::string per = body.substr(open + 1, body.size() - open - 2);
    if (!is_bits(pre) || !is_bits(per) || per.empty())
        throw ParseError("bad periodic literal: " + text);
    return canonicalize(pre, per);
}

}  // namespace thompson
