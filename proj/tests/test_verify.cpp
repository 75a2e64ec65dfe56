#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sympchar/verify.hpp"

using namespace sympchar;

namespace {

void check_all_pass(const VerificationReport& rep) {
    for (const auto& r : rep.records) {
        INFO(r.check_id, " computed=", r.computed, " expected=", r.expected, " ", r.note);
        CHECK(r.pass);
    }
}

const CheckRecord& find(const VerificationReport& rep, const std::string& id) {
    for (const auto& r : rep.records)
        if (r.check_id == id) return r;
    throw std::runtime_error("no record " + id);
}

} // namespace

TEST_CASE("field report is clean for every degree") {
    for (unsigned f = 1; f <= 8; ++f) check_all_pass(verify_field(Field(f)));
}

TEST_CASE("equations at (2,2)") {
    CaseContext cx(2, 1);
    const auto e1 = verify_eq1(cx);
    CHECK(find(e1, "eq1.stabilizer_orbits").computed == 3);
    check_all_pass(e1);
    const auto e2 = verify_eq2(cx);
    CHECK(find(e2, "eq2.plus").computed == 2);
    CHECK(find(e2, "eq2.minus").computed == 2);
    check_all_pass(e2);
    const auto e3 = verify_eq3(cx);
    CHECK(find(e3, "eq3.mixed").computed == 1);
    check_all_pass(e3);
    const auto e4 = verify_eq4(cx);
    CHECK(find(e4, "eq4.plus").computed == 2);
    CHECK(find(e4, "eq4.minus").computed == 2);
    check_all_pass(e4);
}

TEST_CASE("orbit structure at (2,2) and (2,4)") {
    {
        CaseContext cx(2, 1);
        const auto rep = verify_orbit_structure(cx);
        check_all_pass(rep);
        CHECK(find(rep, "orbits.minus_on_plus_forms").computed == 1);
        CHECK(find(rep, "orbits.perp_class_size").computed == 6);
        CHECK(find(rep, "orbits.level_class_size").computed == 8);
    }
    {
        CaseContext cx(2, 2);
        const auto rep = verify_orbit_structure(cx);
        check_all_pass(rep);
        CHECK(find(rep, "orbits.minus_on_plus_forms").computed == 2);
        CHECK(find(rep, "orbits.plus_level_orbits").computed == 4);
    }
}

TEST_CASE("degenerate m=1 cases are refused") {
    CaseContext cx(1, 1);
    CHECK_THROWS_AS(verify_eq1(cx), DegenerateCase);
    CHECK_THROWS_AS(verify_eq4(cx), DegenerateCase);
    CHECK_THROWS_AS(verify_orbit_structure(cx), DegenerateCase);
    CHECK_THROWS_AS(verify_degree_identities(cx), DegenerateCase);
    CHECK_THROWS_AS(verify_rank3_check(cx), DegenerateCase);
}

TEST_CASE("pointwise character identity, exhaustive at small scales") {
    for (auto [m, f] : {std::pair{1u, 1u}, std::pair{2u, 1u}}) {
        CaseContext cx(m, f);
        const auto rep = verify_theorem(cx, VerifyMode::Exhaustive);
        const auto& r = find(rep, "theorem.pointwise");
        CHECK(r.pass);
        CHECK(r.computed == r.expected);
        CHECK(r.expected == static_cast<std::int64_t>(sp_order(m, 1u << f)));
        const auto cor = verify_corollary(cx, VerifyMode::Exhaustive);
        check_all_pass(cor);
    }
}

TEST_CASE("pointwise identity, sampled at (2,8)") {
    CaseContext cx(2, 3);
    const auto rep = verify_theorem(cx, VerifyMode::Sampled, {100, 42});
    const auto& r = find(rep, "theorem.pointwise");
    CHECK(r.pass);
    CHECK(r.computed == 100);
    CHECK(r.note.find("seed=42") != std::string::npos);

    // determinism: an identical run reproduces the same record
    CaseContext cx2(2, 3);
    const auto rep2 = verify_theorem(cx2, VerifyMode::Sampled, {100, 42});
    CHECK(find(rep2, "theorem.pointwise").computed == r.computed);
    CHECK(find(rep2, "theorem.pointwise").note == r.note);
}

TEST_CASE("srg suite and degree identities") {
    for (auto [m, f] : {std::pair{2u, 1u}, std::pair{2u, 2u}, std::pair{3u, 1u}}) {
        CaseContext cx(m, f);
        check_all_pass(verify_srg_suite(cx));
        const auto deg = verify_degree_identities(cx);
        check_all_pass(deg);
    }
    CaseContext cx(2, 2);
    const auto deg = verify_degree_identities(cx);
    CHECK(find(deg, "degrees.plus_forms").computed == 136);
    CHECK(find(deg, "degrees.plus_forms").expected == 1 + 50 + 85);
}

TEST_CASE("rank-3 record") {
    CaseContext cx(2, 1);
    const auto rep = verify_rank3_check(cx);
    CHECK(find(rep, "rank3.lines").computed == 3);
    check_all_pass(rep);
}
