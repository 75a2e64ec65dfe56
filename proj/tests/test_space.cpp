#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sympchar/space.hpp"

using namespace sympchar;

namespace {

Vec random_vector(const Space& sp, std::mt19937_64& rng, bool nonzero) {
    for (;;) {
        Vec v(sp.dim());
        for (auto& c : v) c = static_cast<Fe>(rng() % sp.field().size());
        if (!nonzero || !sp.is_zero(v)) return v;
    }
}

bool gram_is_standard(const Space& sp, const std::vector<Vec>& basis) {
    for (unsigned i = 0; i < sp.dim(); ++i)
        for (unsigned j = 0; j < sp.dim(); ++j) {
            const Fe want = (i != j && i / 2 == j / 2) ? 1 : 0;
            if (sp.bilinear(basis[i], basis[j]) != want) return false;
        }
    return true;
}

} // namespace

TEST_CASE("bilinear form is alternating, symmetric, non-degenerate") {
    const Field gf(2);
    const Space sp(gf, 2);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Vec u = random_vector(sp, rng, false), v = random_vector(sp, rng, false);
        REQUIRE(sp.bilinear(u, u) == 0);
        REQUIRE(sp.bilinear(u, v) == sp.bilinear(v, u));
    }
    // non-degeneracy: every nonzero vector pairs with something
    for (std::uint64_t key = 1; key < sp.num_vectors(); ++key) {
        const Vec v = sp.unpack(key);
        bool pairs = false;
        for (unsigned i = 0; i < sp.dim() && !pairs; ++i)
            pairs = sp.bilinear(v, sp.basis_vector(i)) != 0;
        REQUIRE(pairs);
    }
}

TEST_CASE("quadratic form evaluation") {
    const Field gf(1);
    SUBCASE("m=1 hyperbolic form xy") {
        const Space sp(gf, 1);
        const QuadraticForm qp = standard_plus_form(sp);
        CHECK(qp.eval({0, 0}) == 0);
        CHECK(qp.eval({1, 1}) == 1);
        CHECK(qp.eval({1, 0}) == 0);
        CHECK(qp.eval({0, 1}) == 0);
    }
    SUBCASE("m=1 minus form x^2+xy+y^2 has no nonzero singular vector") {
        const Space sp(gf, 1);
        const QuadraticForm qm = standard_minus_form(sp);
        CHECK(qm.eval({1, 1}) == 1);
        CHECK(qm.eval({1, 0}) == 1);
        CHECK(qm.eval({0, 1}) == 1);
        CHECK(qm.eval({0, 0}) == 0);
        CHECK(zero_count(qm) == 1);
    }
    SUBCASE("zero vector evaluates to zero for every stored form") {
        const Space sp(gf, 2);
        for (const auto& q : forms_with_standard_polarization(sp))
            CHECK(q.eval(sp.zero_vector()) == 0);
    }
}

TEST_CASE("standard forms polarize to the standard alternating form") {
    for (unsigned f : {1u, 2u, 3u}) {
        const Field gf(f);
        for (unsigned m : {1u, 2u, 3u}) {
            if (m == 3 && f == 3) continue;
            const Space sp(gf, m);
            const auto [qp, qm] = standard_forms(sp);
            CHECK(qp.polarizes_to_standard());
            CHECK(qm.polarizes_to_standard());
            CHECK(classify_type(qp) == FormType::Plus);
            CHECK(classify_type(qm) == FormType::Minus);
        }
    }
}

TEST_CASE("zero counts match the type formula") {
    const Field gf2(1);
    CHECK(zero_count(standard_plus_form(Space(gf2, 2))) == 10);
    CHECK(classify_type_by_zero_count(standard_plus_form(Space(gf2, 2))) == FormType::Plus);
    CHECK(classify_type_by_zero_count(standard_minus_form(Space(gf2, 1))) == FormType::Minus);
}

TEST_CASE("polarization identity holds exhaustively at small scales") {
    for (auto [m, f] : {std::pair{2u, 1u}, std::pair{1u, 2u}, std::pair{2u, 2u}}) {
        const Field gf(f);
        const Space sp(gf, m);
        for (const auto& q : forms_with_standard_polarization(sp)) {
            for (std::uint64_t a = 0; a < sp.num_vectors(); ++a) {
                for (std::uint64_t b = 0; b < sp.num_vectors(); ++b) {
                    const Vec u = sp.unpack(a), v = sp.unpack(b);
                    REQUIRE(static_cast<Fe>(q.eval(Space::add(u, v)) ^ q.eval(u) ^ q.eval(v)) ==
                            sp.bilinear(u, v));
                }
            }
        }
    }
}

TEST_CASE("form census per type") {
    struct Case {
        unsigned m, f;
        std::size_t total, plus, minus;
    };
    for (const auto& c : {Case{2, 1, 16, 10, 6}, Case{1, 1, 4, 3, 1}, Case{2, 2, 256, 136, 120}}) {
        const Field gf(c.f);
        const Space sp(gf, c.m);
        const auto forms = forms_with_standard_polarization(sp);
        REQUIRE(forms.size() == c.total);
        std::size_t plus = 0;
        for (std::size_t i = 0; i < forms.size(); ++i) {
            REQUIRE(forms[i].polarizes_to_standard());
            if (classify_type(forms[i]) == FormType::Plus) ++plus;
            for (std::size_t j = i + 1; j < forms.size(); ++j) REQUIRE(!(forms[i] == forms[j]));
        }
        CHECK(plus == c.plus);
        CHECK(forms.size() - plus == c.minus);
    }
}

TEST_CASE("arf classification agrees with the zero-count oracle") {
    for (auto [m, f] : {std::pair{1u, 1u}, std::pair{2u, 1u}, std::pair{2u, 2u},
                        std::pair{3u, 1u}}) {
        const Field gf(f);
        const Space sp(gf, m);
        for (const auto& q : forms_with_standard_polarization(sp))
            REQUIRE(classify_type(q) == classify_type_by_zero_count(q));
    }
}

TEST_CASE("hyperbolic basis completion") {
    SUBCASE("no constraint yields the standard basis") {
        for (auto [m, f] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}}) {
            const Field gf(f);
            const Space sp(gf, m);
            const auto basis = complete_hyperbolic_basis(sp);
            REQUIRE(basis.size() == sp.dim());
            CHECK(gram_is_standard(sp, basis));
            for (unsigned i = 0; i < sp.dim(); ++i) CHECK(basis[i] == sp.basis_vector(i));
        }
    }
    SUBCASE("completion of a single vector") {
        const Field gf(1);
        const Space sp(gf, 1);
        const auto basis = complete_hyperbolic_basis(sp, {{1, 1}});
        CHECK(basis[0] == Vec{1, 1});
        CHECK(sp.bilinear(basis[0], basis[1]) == 1);
        CHECK(gram_is_standard(sp, basis));
    }
    SUBCASE("random partial pairs complete to standard Gram") {
        const Field gf(2);
        const Space sp(gf, 2);
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const Vec v = random_vector(sp, rng, true);
            Vec u;
            Fe c = 0;
            do {
                u = random_vector(sp, rng, true);
                c = sp.bilinear(v, u);
            } while (c == 0);
            const auto basis = complete_hyperbolic_basis(sp, {v, sp.scale(gf.inv(c), u)});
            REQUIRE(gram_is_standard(sp, basis));
            REQUIRE(basis[0] == v);
        }
    }
    SUBCASE("invalid prefixes are rejected") {
        const Field gf(1);
        const Space sp(gf, 2);
        // e1, e3 pair to 0, not 1
        CHECK_THROWS_AS(complete_hyperbolic_basis(sp, {sp.basis_vector(0), sp.basis_vector(2)}),
                        NotExtendable);
        CHECK_THROWS_AS(complete_hyperbolic_basis(sp, {sp.zero_vector()}), NotExtendable);
    }
}

TEST_CASE("witt extension examples") {
    const Field gf(1);
    const Space sp(gf, 2);
    const Vec v = sp.basis_vector(0);

    SUBCASE("u = u' is always solvable") {
        const Vec u = sp.basis_vector(2);
        const Mat g = witt_extend(sp, v, u, u);
        CHECK(g.apply(v) == v);
        CHECK(g.apply(u) == u);
        CHECK(is_isometry(sp, g));
    }
    SUBCASE("orthogonal case: e2 -> e2 + f2") {
        const Vec u = sp.basis_vector(2);
        const Vec uprime = Space::add(sp.basis_vector(2), sp.basis_vector(3));
        const Mat g = witt_extend(sp, v, u, uprime);
        CHECK(g.apply(v) == v);
        CHECK(g.apply(u) == uprime);
        CHECK(is_isometry(sp, g));
    }
    SUBCASE("precondition violations") {
        CHECK_THROWS_AS(witt_extend(sp, v, sp.basis_vector(1), sp.basis_vector(2)),
                        PreconditionViolated); // (v,u)=1 but (v,u')=0
        CHECK_THROWS_AS(witt_extend(sp, v, v, sp.basis_vector(2)), PreconditionViolated);
        CHECK_THROWS_AS(witt_extend(sp, sp.zero_vector(), v, v), PreconditionViolated);
    }
}

TEST_CASE("witt extension on seeded random valid triples") {
    const Field gf(2);
    const Space sp(gf, 2);
    std::mt19937_64 rng(42);
    int done = 0;
    while (done < 1000) {
        const Vec v = random_vector(sp, rng, true);
        const Vec u = random_vector(sp, rng, true);
        const Fe c = sp.bilinear(v, u);
        // skip u in <v>
        bool prop = true;
        for (unsigned i = 0; i < sp.dim() && prop; ++i)
            if (v[i] == 0 && u[i] != 0) prop = false;
        if (prop) {
            // full proportionality test via the first nonzero coordinate of v
            unsigned k = 0;
            while (v[k] == 0) ++k;
            prop = sp.scale(gf.mul(u[k], gf.inv(v[k])), v) == u;
        }
        if (prop) continue;
        Vec uprime;
        do {
            uprime = random_vector(sp, rng, true);
        } while (sp.bilinear(v, uprime) != c);
        if (uprime == v || sp.scale(uprime[0], v) == uprime) continue; // crude <v> filter
        Mat g(gf, sp.dim());
        try {
            g = witt_extend(sp, v, u, uprime);
        } catch (const PreconditionViolated&) {
            continue; // uprime happened to be proportional to v
        }
        REQUIRE(g.apply(v) == v);
        REQUIRE(g.apply(u) == uprime);
        REQUIRE(is_isometry(sp, g));
        ++done;
    }
}

TEST_CASE("line representatives") {
    const Field gf(2);
    const Space sp(gf, 2);
    for (std::uint64_t key = 1; key < sp.num_vectors(); ++key) {
        const Vec v = sp.unpack(key);
        const Vec rep = sp.line_representative(v);
        unsigned k = 0;
        while (rep[k] == 0) ++k;
        REQUIRE(rep[k] == 1);
        // same line
        unsigned kv = 0;
        while (v[kv] == 0) ++kv;
        REQUIRE(sp.scale(v[kv], rep) == v);
    }
    CHECK_THROWS_AS(Space(gf, 2).line_representative(Vec(4, 0)), DimensionError);
}

TEST_CASE("diagonal round trip and functional squares") {
    const Field gf(2);
    const Space sp(gf, 2);
    std::mt19937_64 rng(3);
    const QuadraticForm qp = standard_plus_form(sp);
    for (int i = 0; i < 100; ++i) {
        const Vec l = random_vector(sp, rng, false);
        const QuadraticForm q = LinearFunctional(sp, l).add_square_to(qp);
        CHECK(q.polarizes_to_standard());
        // Q(x) = Q+(x) + l(x)^2 pointwise
        for (int j = 0; j < 20; ++j) {
            const Vec x = random_vector(sp, rng, false);
            const Fe lx = LinearFunctional(sp, l).eval(x);
            REQUIRE(q.eval(x) == static_cast<Fe>(qp.eval(x) ^ gf.mul(lx, lx)));
        }
        CHECK(QuadraticForm::from_diagonal(sp, q.diagonal_over_standard()) == q);
    }
}
