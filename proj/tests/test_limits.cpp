#include "doctest.h"
#include "oracles.hpp"
#include "thompson/corpus.hpp"
#include "thompson/limits.hpp"

using namespace thompson;
using thompson::testing::rational_samples;

namespace {
Point pt(long n, long d) { return from_fraction(Fraction(n, d)); }

TreeDiagram random_member(const GeneratorSet& gens, WordSampler& s,
                          std::size_t len) {
    TreeDiagram acc;
    for (std::size_t i = 0; i < len; ++i) {
        const NamedElement& ne = gens.extended[s.raw() % gens.extended.size()];
        acc = multiply(acc, (s.raw() & 1) ? ne.element : inverse(ne.element));
    }
    return acc;
}
}  // namespace

TEST_CASE("make_conjugator") {
    LimitDiagram L = make_conjugator(pt(1, 3), pt(1, 7));
    CHECK(L.tails.size() == 1);
    CHECK(L.tails[0].src_period == "01");
    CHECK(L.tails[0].dst_period == "001");
    CHECK(eval_limit(L, pt(1, 3)) == pt(1, 7));

    LimitDiagram Lid = make_conjugator(pt(1, 3), pt(1, 3));
    for (const Fraction& q : rational_samples(40, 3)) {
        Point p = from_fraction(q);
        CHECK(eval_limit(Lid, p) == p);
    }

    // different canonical prefixes force a folded finite pre-conjugator
    LimitDiagram L2 = make_conjugator(pt(1, 3), pt(2, 3));
    CHECK(eval_limit(L2, pt(1, 3)) == pt(2, 3));
    TreeDiagram a = approximate(L2, 10);
    for (long num = 1; num < 16; ++num) {
        Point p = pt(num, 16);
        CHECK(eval_limit(L2, p) == apply(a, p));
    }

    CHECK_THROWS_AS(make_conjugator(pt(1, 2), pt(1, 3)), std::domain_error);
}

TEST_CASE("shared-prefix conjugators act inside the prefix interval") {
    // 1/6 = .0(01) and 1/14 = .0(001) share the canonical prefix "0"
    LimitDiagram L = make_conjugator(pt(1, 6), pt(1, 14));
    REQUIRE(L.tails.size() == 1);
    CHECK(L.tails[0].src_prefix == "0");
    CHECK(L.tails[0].dst_prefix == "0");
    CHECK(eval_limit(L, pt(1, 6)) == pt(1, 14));
    for (const Fraction& q : rational_samples(40, 21)) {
        Fraction scaled = Fraction(1, 2) + q / 2;  // points of [1/2, 1]
        Point p = from_fraction(scaled);
        CHECK(eval_limit(L, p) == p);
    }
    TreeDiagram a = approximate(L, 9);
    for (const Interval& iv : support(a)) CHECK(iv.hi <= Fraction(1, 2));
}

TEST_CASE("eval_limit") {
    LimitDiagram L = make_conjugator(pt(1, 3), pt(1, 7));
    CHECK(eval_limit(L, Point::zero()) == Point::zero());
    CHECK(eval_limit(L, Point::one()) == Point::one());
    CHECK(eval_limit(L, pt(1, 2)) == apply(approximate(L, 10), pt(1, 2)));
}

TEST_CASE("conjugate") {
    LimitDiagram L = make_conjugator(pt(1, 3), pt(1, 7));
    CHECK(conjugate(TreeDiagram::identity(), L) == TreeDiagram::identity());

    TreeDiagram g = from_branch_pairs({{"0101", "01"}});
    TreeDiagram cg = conjugate(g, L);
    CHECK(apply(cg, pt(1, 7)) == pt(1, 7));
    CHECK(slope_exponent(cg, pt(1, 7), Side::right) == 3);
    CHECK(find_periodic_branch(cg, pt(1, 7)) == std::pair<long, long>(2, 1));
    CHECK(conjugate(cg, reverse(L)) == g);

    CHECK_THROWS_AS(conjugate(generator(0), L), std::domain_error);
}

TEST_CASE("conjugation is a homomorphism and preserves evaluation") {
    LimitDiagram L = make_conjugator(pt(1, 3), pt(1, 7));
    StabilizerSpec U = StabilizerSpec::of({pt(1, 3)});
    StabilizerSpec V = StabilizerSpec::of({pt(1, 7)});
    GeneratorSet gens = generators(U);
    WordSampler s(7);
    auto pts = rational_samples(15, 8);
    for (int t = 0; t < 25; ++t) {
        TreeDiagram a = random_member(gens, s, 6);
        TreeDiagram b = random_member(gens, s, 6);
        TreeDiagram ca = conjugate(a, L), cb = conjugate(b, L);
        CHECK(member(ca, V));
        CHECK(conjugate(multiply(a, b), L) == multiply(ca, cb));
        CHECK(conjugate(ca, reverse(L)) == a);
        // pointwise: conjugate agrees with L^-1 a L
        for (const Fraction& q : pts) {
            Point p = from_fraction(q);
            CHECK(apply(ca, p) ==
                  eval_limit(L, apply(a, eval_limit(reverse(L), p))));
        }
    }
}

TEST_CASE("conjugate_stabilizer") {
    StabilizerSpec U = StabilizerSpec::of({pt(1, 3)});
    StabilizerSpec V = StabilizerSpec::of({pt(1, 7)});
    ConjugatorBundle b = conjugate_stabilizer(U, V);
    CHECK(b.pre == TreeDiagram::identity());
    CHECK(b.full.tails.size() == 1);

    ConjugatorBundle bid = conjugate_stabilizer(U, U);
    CHECK(bid.pre == TreeDiagram::identity());
    CHECK(bid.full.tails.empty());
    WordSampler s(31);
    GeneratorSet gu = generators(U);
    for (int t = 0; t < 10; ++t) {
        TreeDiagram h = random_member(gu, s, 6);
        CHECK(map_through(bid, h) == h);
    }

    StabilizerSpec U2 = StabilizerSpec::of({pt(1, 3), pt(1, 2)});
    StabilizerSpec V2 = StabilizerSpec::of({pt(1, 7), pt(1, 2)});
    ConjugatorBundle b2 = conjugate_stabilizer(U2, V2);
    // tails live over disjoint intervals
    for (std::size_t i = 0; i < b2.full.tails.size(); ++i)
        for (std::size_t j = i + 1; j < b2.full.tails.size(); ++j) {
            auto [alo, ahi] = word_interval(b2.full.tails[i].dst_prefix);
            auto [blo, bhi] = word_interval(b2.full.tails[j].dst_prefix);
            CHECK((ahi <= blo || bhi <= alo));
        }
    GeneratorSet gu2 = generators(U2);
    for (int t = 0; t < 50; ++t) {
        TreeDiagram h = random_member(gu2, s, 8);
        TreeDiagram img = map_through(b2, h);
        CHECK(member(img, V2));
        CHECK(map_through(reverse(b2), img) == h);
    }
    // homomorphism onto the image
    for (int t = 0; t < 10; ++t) {
        TreeDiagram a = random_member(gu2, s, 6);
        TreeDiagram c = random_member(gu2, s, 6);
        CHECK(map_through(b2, multiply(a, c)) ==
              multiply(map_through(b2, a), map_through(b2, c)));
    }

    CHECK_THROWS_AS(conjugate_stabilizer(U, StabilizerSpec::of({pt(1, 2)})),
                    std::domain_error);

    // class-1 only: the bundle degenerates to a finite conjugator
    StabilizerSpec U1 = StabilizerSpec::of({pt(1, 4)});
    StabilizerSpec V1 = StabilizerSpec::of({pt(1, 2)});
    ConjugatorBundle b1 = conjugate_stabilizer(U1, V1);
    CHECK(b1.full.tails.empty());
    CHECK(to_fraction(apply(b1.pre, pt(1, 4))) == Fraction(1, 2));
    GeneratorSet gu1 = generators(U1);
    for (int t = 0; t < 20; ++t) {
        TreeDiagram h = random_member(gu1, s, 8);
        TreeDiagram img = map_through(b1, h);
        CHECK(member(img, V1));
        CHECK(map_through(reverse(b1), img) == h);
    }
}

TEST_CASE("approximate") {
    LimitDiagram Lid = make_conjugator(pt(1, 3), pt(1, 3));
    CHECK(approximate(Lid, 4) == TreeDiagram::identity());

    LimitDiagram L = make_conjugator(pt(1, 3), pt(1, 7));
    for (long m = 2; m <= 12; ++m) {
        Fraction d = hamming(approximate(L, m), approximate(L, m + 1));
        CHECK(d <= Fraction(4, pow2(static_cast<std::size_t>(m))));
    }
    // Cauchy bound across all pairs
    for (long m = 1; m <= 12; ++m)
        for (long n = m + 1; n <= 12; ++n)
            CHECK(hamming(approximate(L, m), approximate(L, n)) <=
                  Fraction(4, pow2(static_cast<std::size_t>(m))));
    // agreement with eval_limit outside the depth-m neighbourhoods
    for (long m = 1; m <= 12; ++m) {
        TreeDiagram am = approximate(L, m);
        Fraction radius(1, pow2(static_cast<std::size_t>(m)));
        for (const Fraction& q : rational_samples(25, 9 + m)) {
            if (boost::multiprecision::abs(q - Fraction(1, 3)) <= radius)
                continue;
            Point p = from_fraction(q);
            CHECK(apply(am, p) == eval_limit(L, p));
        }
    }
    CHECK_THROWS_AS(approximate(L, 0), std::domain_error);
}

TEST_CASE("hamming_to_limit_bound") {
    LimitDiagram Lid = make_conjugator(pt(1, 3), pt(1, 3));
    CHECK(hamming_to_limit_bound(Lid, TreeDiagram::identity()) == 0);

    LimitDiagram L = make_conjugator(pt(1, 3), pt(1, 7));
    Fraction prev(-1);
    for (long m = 1; m <= 12; ++m) {
        Fraction b = hamming_to_limit_bound(L, approximate(L, m));
        CHECK(b <= Fraction(4, pow2(static_cast<std::size_t>(m))));
        if (prev >= 0) CHECK(b <= prev);
        prev = b;
    }
}

TEST_CASE("limit text round trip") {
    LimitDiagram L = make_conjugator(pt(1, 3), pt(1, 7));
    std::string text = to_string(L);
    LimitDiagram L2 = parse_limit(text);
    CHECK(to_string(L2) == text);
    CHECK(conjugate(from_branch_pairs({{"0101", "01"}}), L2) ==
          conjugate(from_branch_pairs({{"0101", "01"}}), L));

    LimitDiagram L3 = make_conjugator(pt(1, 3), pt(2, 3));
    CHECK(to_string(parse_limit(to_string(L3))) == to_string(L3));

    CHECK_THROWS_AS(parse_limit("tail (01)->(001){00->0;01->001;10->01;11->1}"),
                    ParseError);  // no designated pair
    CHECK_THROWS_AS(parse_limit("garbage"), ParseError);
}
