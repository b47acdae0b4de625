#include "doctest.h"
#include "oracles.hpp"
#include "thompson/corpus.hpp"
#include "thompson/stabilizer.hpp"

using namespace thompson;
using thompson::testing::rank_of;

namespace {

StabilizerSpec spec_of(std::initializer_list<Fraction> fs) {
    std::vector<Point> pts;
    for (const Fraction& f : fs) pts.push_back(from_fraction(f));
    return StabilizerSpec::of(pts);
}

TreeDiagram random_member(const GeneratorSet& gens, WordSampler& s,
                          std::size_t len, bool minimal_only = false) {
    const auto& pool = minimal_only ? gens.minimal : gens.extended;
    TreeDiagram acc;
    for (std::size_t i = 0; i < len; ++i) {
        const NamedElement& ne = pool[s.raw() % pool.size()];
        acc = multiply(acc, (s.raw() & 1) ? ne.element : inverse(ne.element));
    }
    return acc;
}

}  // namespace

TEST_CASE("member") {
    StabilizerSpec U = spec_of({Fraction(1, 2)});
    CHECK(member(generator(1), U));
    CHECK(!member(generator(0), U));
    CHECK(member(TreeDiagram::identity(), spec_of({Fraction(1, 3), Fraction(1, 2)})));
}

TEST_CASE("signature") {
    StabilizerSpec U = spec_of({Fraction(1, 2)});
    CHECK(signature(TreeDiagram::identity(), U) ==
          std::vector<long>({0, 0, 0, 0}));
    CHECK(signature(generator(1), U) == std::vector<long>({0, 0, 1, -1}));
    StabilizerSpec U3 = spec_of({Fraction(1, 3)});
    CHECK(signature(from_branch_pairs({{"0101", "01"}}), U3) ==
          std::vector<long>({0, 1, 0}));
    CHECK_THROWS_AS(signature(generator(0), U), std::domain_error);
}

TEST_CASE("signature additivity") {
    StabilizerSpec U = spec_of({Fraction(1, 3), Fraction(1, 2)});
    GeneratorSet gens = generators(U);
    WordSampler s(17);
    for (int t = 0; t < 40; ++t) {
        TreeDiagram a = random_member(gens, s, 6);
        TreeDiagram b = random_member(gens, s, 6);
        auto sa = signature(a, U), sb = signature(b, U);
        auto sab = signature(multiply(a, b), U);
        for (std::size_t i = 0; i < sa.size(); ++i)
            CHECK(sab[i] == sa[i] + sb[i]);
    }
}

TEST_CASE("kernel_test") {
    StabilizerSpec U = spec_of({Fraction(1, 2)});
    CHECK(kernel_test(TreeDiagram::identity(), U));
    CHECK(!kernel_test(generator(1), U));
    // zero signature forces locally trivial action around every point
    StabilizerSpec U3 = spec_of({Fraction(1, 3)});
    GeneratorSet gens = generators(U3);
    WordSampler s(19);
    int seen = 0;
    for (int t = 0; t < 120 && seen < 15; ++t) {
        TreeDiagram a = random_member(gens, s, 8);
        if (!kernel_test(a, U3)) continue;
        ++seen;
        for (const Point& p : U3.points) CHECK(fixes_neighborhood(a, p));
        CHECK(slope_exponent(a, Point::zero(), Side::right) == 0);
        CHECK(slope_exponent(a, Point::one(), Side::left) == 0);
    }
    CHECK(seen > 0);
}

TEST_CASE("generators for the standard family") {
    WordSampler s(23);
    for (auto fs : std::vector<std::vector<Fraction>>{
             {},
             {Fraction(1, 2)},
             {Fraction(1, 3)},
             {Fraction(1, 7)},
             {Fraction(1, 3), Fraction(1, 2)},
             {Fraction(1, 3), Fraction(5, 7)},
             {Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)}}) {
        std::vector<Point> pts;
        for (auto& f : fs) pts.push_back(from_fraction(f));
        StabilizerSpec U = StabilizerSpec::of(pts);
        GeneratorSet gens = generators(U);
        CHECK(gens.minimal.size() == U.rank());
        for (const NamedElement& ne : gens.minimal) CHECK(member(ne.element, U));
        for (const NamedElement& ne : gens.extended) CHECK(member(ne.element, U));
        for (int t = 0; t < 25; ++t)
            CHECK(member(random_member(gens, s, 10, true), U));
        // full-rank slope signatures
        std::vector<std::vector<Fraction>> rows;
        for (const NamedElement& ne : gens.minimal) {
            std::vector<Fraction> row;
            for (long v : signature(ne.element, U)) row.emplace_back(v);
            rows.push_back(std::move(row));
        }
        CHECK(rank_of(rows) == U.rank());
    }
}

TEST_CASE("generation certificates multiply out exactly") {
    for (auto fs : std::vector<std::vector<Fraction>>{
             {},
             {Fraction(1, 3)},
             {Fraction(1, 3), Fraction(5, 7)},
             {Fraction(1, 4), Fraction(1, 3), Fraction(1, 2)}}) {
        std::vector<Point> pts;
        for (auto& f : fs) pts.push_back(from_fraction(f));
        StabilizerSpec U = StabilizerSpec::of(pts);
        GeneratorSet gens = generators(U);
        auto certs = generation_certificates(U);
        CHECK(certs.size() >= gens.extended.size());
        for (const CertEntry& ce : certs)
            CHECK(evaluate(ce.word, gens) == gens.lookup(ce.target));
    }
}

TEST_CASE("single-point certificates are single letters") {
    // with one class-2 point the two interleaved products are themselves the
    // copies of x0 in the outer leaves
    StabilizerSpec U = spec_of({Fraction(7, 12)});
    auto certs = generation_certificates(U);
    for (const CertEntry& ce : certs) {
        if (ce.target == "b0:x0@1") {
            REQUIRE(ce.word.size() == 1);
            CHECK(ce.word[0].name == "b0:x");
        }
        if (ce.target == "b0:x0@2") {
            REQUIRE(ce.word.size() == 1);
            CHECK(ce.word[0].name == "b0:y");
        }
    }
    GeneratorSet gens = generators(U);
    for (const CertEntry& ce : certs)
        CHECK(evaluate(ce.word, gens) == gens.lookup(ce.target));
}

TEST_CASE("factor") {
    StabilizerSpec U = spec_of({Fraction(1, 3)});
    GeneratorSet gens = generators(U);
    CHECK(factor(TreeDiagram::identity(), U, gens).empty());
    FactorWord g1 = factor(gens.lookup("b0:g1"), U, gens);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0].name == "b0:g1");
    CHECK(g1[0].exp == 1);
    CHECK_THROWS_AS(factor(generator(0), U, gens), std::domain_error);

    WordSampler s(29);
    for (int t = 0; t < 30; ++t) {
        TreeDiagram h = random_member(gens, s, 12);
        FactorWord fw = factor(h, U, gens);
        CHECK(evaluate(fw, gens) == h);
    }
    StabilizerSpec U2 = spec_of({Fraction(1, 3), Fraction(1, 2)});
    GeneratorSet gens2 = generators(U2);
    for (int t = 0; t < 20; ++t) {
        TreeDiagram h = random_member(gens2, s, 10);
        FactorWord fw = factor(h, U2, gens2);
        CHECK(evaluate(fw, gens2) == h);
    }
}

TEST_CASE("hnn structure") {
    StabilizerSpec U = spec_of({Fraction(1, 3)});
    HnnReport rep = hnn_check(U);
    CHECK(rep.ascending);
    CHECK(rep.rows.size() == 4);
    for (const HnnRow& row : rep.rows) {
        // the computed image must reproduce the actual conjugate
        CHECK(row.agrees ==
              (word_to_diagram(row.computed) == word_to_diagram(row.claimed)));
    }

    StabilizerSpec U2 = spec_of({Fraction(1, 3), Fraction(5, 7)});
    HnnReport rep2 = hnn_check(U2);
    CHECK(rep2.ascending);
    CHECK(rep2.rows.size() == 12);  // 2 letters x 3 blocks x 2 base generators

    CHECK_THROWS_AS(hnn_check(spec_of({Fraction(1, 2)})), std::domain_error);
}
