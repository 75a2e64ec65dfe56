#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympchar/srg.hpp"

using namespace sympchar;

TEST_CASE("perp graph shape") {
    const Field gf2(1);
    SUBCASE("(2,2): 15 vertices of degree 6") {
        const PerpGraph g = PerpGraph::build(Space(gf2, 2));
        REQUIRE(g.num_vertices() == 15);
        for (std::size_t a = 0; a < 15; ++a) CHECK(g.degree(a) == 6);
    }
    SUBCASE("(1,2): edgeless on 3 vertices") {
        const PerpGraph g = PerpGraph::build(Space(gf2, 1));
        REQUIRE(g.num_vertices() == 3);
        for (std::size_t a = 0; a < 3; ++a) CHECK(g.degree(a) == 0);
    }
    SUBCASE("(3,2): 63 vertices of degree 30") {
        const PerpGraph g = PerpGraph::build(Space(gf2, 3));
        REQUIRE(g.num_vertices() == 63);
        for (std::size_t a = 0; a < 63; ++a) CHECK(g.degree(a) == 30);
    }
}

TEST_CASE("measured strongly regular parameters") {
    struct Case {
        unsigned m, f;
        SrgParams want;
    };
    for (const auto& c : {Case{2, 1, {15, 6, 1, 3}}, Case{3, 1, {63, 30, 13, 15}},
                          Case{2, 2, {85, 20, 3, 5}}}) {
        const Field gf(c.f);
        const SrgParams p = verify_srg(Space(gf, c.m));
        CHECK(p == c.want);
        CHECK(p == expected_srg_params(c.m, gf.size()));
        CHECK(p.k * (p.k - p.lam - 1) == (p.v - p.k - 1) * p.mu);
    }
    CHECK_THROWS_AS(verify_srg(Space(Field(1), 1)), DegenerateCase);
}

TEST_CASE("spectrum multiplicities in exact arithmetic") {
    const SpectrumMultiplicities s = spectrum_multiplicities({15, 6, 1, 3});
    CHECK(s.r == 1);
    CHECK(s.s == -3);
    CHECK(s.mult_r == 9);
    CHECK(s.mult_s == 5);
    CHECK(s.mult_r + s.mult_s == 14);
    CHECK(6 + 9 * 1 + 5 * (-3) == 0);
    // (10,3,0,1) is feasible (the Petersen parameters); (10,4,1,2) is not
    const SpectrumMultiplicities pet = spectrum_multiplicities({10, 3, 0, 1});
    CHECK(pet.mult_r == 5);
    CHECK(pet.mult_s == 4);
    CHECK_THROWS_AS(spectrum_multiplicities({10, 4, 1, 2}), NonIntegralMultiplicity);
}

TEST_CASE("chi degrees match the closed forms") {
    struct Case {
        unsigned m, f;
        std::uint64_t lo, hi;
    };
    for (const auto& c : {Case{2, 1, 5, 9}, Case{3, 1, 27, 35}, Case{2, 2, 34, 50},
                          Case{2, 3, 260, 324}}) {
        const Field gf(c.f);
        const Space sp(gf, c.m);
        const ChiDegrees d = chi_degrees(sp);
        CHECK(d.chi_minus == c.lo);
        CHECK(d.chi_plus == c.hi);
        CHECK(d.chi_minus < d.chi_plus);
        // rank-3 degree sum: 1 + chi- + chi+ = number of lines
        CHECK(1 + d.chi_minus + d.chi_plus == GSet::lines(sp).size());
    }
}

TEST_CASE("rank-3 inner product on lines") {
    const Field gf2(1), gf4(2);
    CHECK(verify_rank3(Space(gf2, 2), build_generators(GroupLabel::Sp, Space(gf2, 2))) == 3);
    CHECK(verify_rank3(Space(gf4, 2), build_generators(GroupLabel::Sp, Space(gf4, 2))) == 3);
    // m = 1 degenerates to a 2-transitive action
    CHECK(verify_rank3(Space(gf2, 1), build_generators(GroupLabel::Sp, Space(gf2, 1))) == 2);
}
