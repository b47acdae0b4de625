#include "doctest.h"
#include "oracles.hpp"
#include "thompson/point.hpp"

using namespace thompson;

TEST_CASE("from_fraction") {
    Point half = from_fraction(Fraction(1, 2));
    CHECK(half.is_dyadic());
    CHECK(half.prefix() == "1");

    Point third = from_fraction(Fraction(1, 3));
    CHECK(!third.is_dyadic());
    CHECK(third.prefix() == "");
    CHECK(third.period() == "01");

    Point seventh = from_fraction(Fraction(1, 7));
    CHECK(seventh.prefix() == "");
    CHECK(seventh.period() == "001");

    CHECK(from_fraction(Fraction(0)) == Point::zero());
    CHECK(from_fraction(Fraction(1)) == Point::one());
    CHECK_THROWS_AS(from_fraction(Fraction(3, 2)), std::domain_error);
}

TEST_CASE("to_fraction") {
    CHECK(to_fraction(parse_point(".1")) == Fraction(1, 2));
    CHECK(to_fraction(canonicalize("", "01")) == Fraction(1, 3));
    CHECK(to_fraction(canonicalize("10", "01")) == Fraction(7, 12));
    CHECK(to_fraction(Point::zero()) == 0);
    CHECK(to_fraction(Point::one()) == 1);
}

TEST_CASE("canonicalize") {
    CHECK(canonicalize("0", "10") == canonicalize("", "01"));
    CHECK(canonicalize("01", "1") == parse_point(".1"));
    CHECK(canonicalize("", "0101") == canonicalize("", "01"));
    // trailing zeros stripped, pure-one periods carried over
    CHECK(canonicalize("10", "0") == parse_point(".1"));
    CHECK(canonicalize("", "1") == Point::one());
    CHECK_THROWS_AS(canonicalize("", ""), std::domain_error);
}

TEST_CASE("compare and classify") {
    Point third = from_fraction(Fraction(1, 3));
    Point half = from_fraction(Fraction(1, 2));
    CHECK(third < half);
    CHECK(compare(canonicalize("", "01"), canonicalize("0", "10")) ==
          std::strong_ordering::equal);
    CHECK(half < canonicalize("", "10"));  // .(10) = 2/3

    CHECK(classify(half) == 1);
    CHECK(classify(third) == 2);
    CHECK(classify(from_fraction(Fraction(5, 7))) == 2);
}

TEST_CASE("natural_partition") {
    auto np = natural_partition(
        {from_fraction(Fraction(1, 2)), from_fraction(Fraction(1, 3))});
    CHECK(np.type_word == "21");
    CHECK(np.class1.size() == 1);
    CHECK(np.class2.size() == 1);
    CHECK(to_fraction(np.class2[0]) == Fraction(1, 3));

    CHECK(natural_partition({from_fraction(Fraction(1, 3))}).type_word == "2");
    CHECK(natural_partition({from_fraction(Fraction(1, 4)),
                             from_fraction(Fraction(1, 2))})
              .type_word == "11");
    CHECK_THROWS_AS(natural_partition({Point::zero()}), std::domain_error);
    CHECK_THROWS_AS(natural_partition({from_fraction(Fraction(1, 3)),
                                       from_fraction(Fraction(1, 3))}),
                    std::domain_error);
}

TEST_CASE("fraction round trips") {
    // exhaustive over small denominators
    for (long den = 1; den <= 64; ++den)
        for (long num = 0; num <= den; ++num) {
            Fraction f(num, den);
            CHECK(to_fraction(from_fraction(f)) == f);
        }
    // sampled with medium denominators
    WordSampler s(2024);
    for (int t = 0; t < 100; ++t) {
        long den = 2 + static_cast<long>(s.raw() % 4094);
        long num = static_cast<long>(s.raw() % static_cast<unsigned long>(den + 1));
        Fraction f(num, den);
        CHECK(to_fraction(from_fraction(f)) == f);
    }
    // spot checks with denominators up to 2^20 (expansions reach ~10^6 bits)
    for (int t = 0; t < 12; ++t) {
        long den = 2 + static_cast<long>(s.raw() % ((1L << 20) - 2));
        long num = static_cast<long>(s.raw() % static_cast<unsigned long>(den + 1));
        Fraction f(num, den);
        CHECK(to_fraction(from_fraction(f)) == f);
    }
}

TEST_CASE("canonical uniqueness") {
    WordSampler s(7);
    for (int t = 0; t < 300; ++t) {
        std::string pre, per;
        std::size_t plen = s.raw() % 6;
        std::size_t slen = 1 + s.raw() % 6;
        for (std::size_t i = 0; i < plen; ++i) pre += (s.raw() & 1) ? '1' : '0';
        for (std::size_t i = 0; i < slen; ++i) per += (s.raw() & 1) ? '1' : '0';
        Point p = canonicalize(pre, per);
        CHECK(p == from_fraction(to_fraction(p)));
    }
}

TEST_CASE("order agrees with fraction order") {
    auto xs = testing::rational_samples(60, 5);
    for (const Fraction& a : xs)
        for (const Fraction& b : xs)
            CHECK((from_fraction(a) < from_fraction(b)) == (a < b));
}

TEST_CASE("class 1 iff power-of-two denominator") {
    auto xs = testing::rational_samples(100, 6);
    for (const Fraction& a : xs)
        CHECK((classify(from_fraction(a)) == 1) == is_dyadic(a));
}

TEST_CASE("point text round trip") {
    for (const char* lit : {".1", ".101", ".(01)", ".0(101)", ".10(01)", "0/1",
                            "1/1"}) {
        Point p = parse_point(lit);
        CHECK(to_string(p) == lit);
        CHECK(parse_point(to_string(p)) == p);
    }
    CHECK(to_string(parse_point(".01(011)")) == ".0(101)");  // absorbed prefix
    CHECK(to_string(parse_point("7/12")) == ".10(01)");
    CHECK(to_string(parse_point(".10")) == ".1");  // normalized
    CHECK(to_string(parse_point("1/3")) == ".(01)");
    CHECK_THROWS_AS(parse_point(".2"), ParseError);
    CHECK_THROWS_AS(parse_point(".0(2)"), ParseError);
    CHECK_THROWS_AS(parse_point(""), ParseError);
    CHECK_THROWS_AS(parse_point("x"), ParseError);
}
