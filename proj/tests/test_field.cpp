#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympchar/field.hpp"

using namespace sympchar;

TEST_CASE("canonical moduli are the smallest irreducible polynomials") {
    // frozen from an exhaustive search over GF(2)[x]
    const unsigned expected[9] = {0, 0b10, 0b111, 0b1011, 0b10011, 0b100101,
                                  0b1000011, 0b10000011, 0b100011011};
    for (unsigned f = 1; f <= 8; ++f) {
        CHECK(Field::smallest_modulus(f) == expected[f]);
        CHECK(Field(f).modulus() == expected[f]);
    }
}

TEST_CASE("irreducibility testing") {
    CHECK(Field::is_irreducible(0b111));        // x^2+x+1
    CHECK_FALSE(Field::is_irreducible(0b101));  // x^2+1 = (x+1)^2
    CHECK_FALSE(Field::is_irreducible(0b110));  // x^2+x = x(x+1)
    CHECK(Field::is_irreducible(0b1011));       // x^3+x+1
    CHECK_FALSE(Field::is_irreducible(0b100000001)); // x^8+1
    CHECK_THROWS_AS(Field(2, 0b101), FieldError);
    CHECK_THROWS_AS(Field(0), FieldError);
    CHECK_THROWS_AS(Field(9), FieldError);
}

TEST_CASE("GF(4) arithmetic against hand reduction") {
    const Field gf(2); // modulus x^2+x+1; w = 0b10
    const Fe w = 2, w1 = 3;
    CHECK(gf.mul(w, w) == w1);     // w^2 = w+1
    CHECK(gf.mul(w, 1) == w);
    CHECK(gf.inv(w) == w1);        // w(w+1) = 1
    CHECK(gf.mul(w, gf.inv(w)) == 1);
    CHECK(gf.trace(0) == 0);
    CHECK(gf.trace(w) == 1);       // w + w^2 = 1
    CHECK(gf.trace(1) == 0);       // 1 + 1
    CHECK(gf.inv(1) == 1);
    CHECK_THROWS_AS(gf.inv(0), FieldError);
}

TEST_CASE("GF(8) reduction by x^3+x+1") {
    const Field gf(3);
    const Fe t = 2;
    CHECK(gf.mul(t, gf.mul(t, t)) == 3); // t^3 = t+1
}

TEST_CASE("field axioms hold exhaustively for every supported degree") {
    for (unsigned f = 1; f <= 8; ++f) {
        const Field gf(f);
        const unsigned q = gf.size();
        for (unsigned a = 0; a < q; ++a) {
            const Fe fa = static_cast<Fe>(a);
            CHECK(gf.mul(fa, 1) == fa);
            if (a) CHECK(gf.mul(fa, gf.inv(fa)) == 1);
            for (unsigned b = 0; b < q; ++b) {
                const Fe fb = static_cast<Fe>(b);
                REQUIRE(gf.mul(fa, fb) == gf.mul(fb, fa));
            }
        }
        // associativity and distributivity on a coarser grid for the big q
        const unsigned step = q > 16 ? 3 : 1;
        for (unsigned a = 0; a < q; a += step)
            for (unsigned b = 0; b < q; b += step)
                for (unsigned c = 0; c < q; c += step) {
                    const Fe fa = static_cast<Fe>(a), fb = static_cast<Fe>(b),
                             fc = static_cast<Fe>(c);
                    REQUIRE(gf.mul(gf.mul(fa, fb), fc) == gf.mul(fa, gf.mul(fb, fc)));
                    REQUIRE(gf.mul(fa, Field::add(fb, fc)) ==
                            Field::add(gf.mul(fa, fb), gf.mul(fa, fc)));
                }
    }
}

TEST_CASE("frobenius is an automorphism of order f") {
    for (unsigned f = 1; f <= 8; ++f) {
        const Field gf(f);
        const unsigned q = gf.size();
        std::vector<bool> hit(q, false);
        for (unsigned a = 0; a < q; ++a) {
            const Fe fa = static_cast<Fe>(a);
            hit[gf.frobenius(fa)] = true;
            Fe y = fa;
            for (unsigned i = 0; i < f; ++i) y = gf.frobenius(y);
            CHECK(y == fa);
        }
        for (unsigned a = 0; a < q; ++a) CHECK(hit[a]);
    }
}

TEST_CASE("artin-schreier image is the trace kernel of size q/2") {
    for (unsigned f = 1; f <= 8; ++f) {
        const Field gf(f);
        const unsigned q = gf.size();
        const auto img = gf.artin_schreier_image();
        CHECK(img.size() == q / 2);
        std::vector<bool> in_img(q, false);
        for (Fe v : img) in_img[v] = true;
        for (unsigned a = 0; a < q; ++a)
            CHECK(in_img[a] == (gf.trace(static_cast<Fe>(a)) == 0));
    }
    CHECK(Field(1).artin_schreier_image() == std::vector<Fe>{0});
    CHECK(Field(2).artin_schreier_image() == std::vector<Fe>{0, 1});
    CHECK(Field(3).artin_schreier_image().size() == 4);
}

TEST_CASE("trace-one witnesses and multiplicative generators") {
    CHECK(Field(1).smallest_trace_one() == 1);
    CHECK(Field(2).smallest_trace_one() == 2);
    CHECK(Field(3).smallest_trace_one() == 1);
    for (unsigned f = 1; f <= 8; ++f) {
        const Field gf(f);
        const Fe g = gf.generator();
        // the generator really has order q-1
        Fe x = g;
        unsigned order = 1;
        while (x != 1) {
            x = gf.mul(x, g);
            ++order;
        }
        CHECK(order == gf.size() - 1);
    }
}

TEST_CASE("pow matches repeated multiplication") {
    const Field gf(5);
    for (unsigned a = 1; a < gf.size(); a += 3) {
        Fe acc = 1;
        for (unsigned e = 0; e < 12; ++e) {
            CHECK(gf.pow(static_cast<Fe>(a), e) == acc);
            acc = gf.mul(acc, static_cast<Fe>(a));
        }
    }
    CHECK(gf.pow(0, 0) == 1);
    CHECK(gf.pow(0, 5) == 0);
}
