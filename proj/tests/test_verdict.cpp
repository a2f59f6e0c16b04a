#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "pk/errors.hpp"
#include "pk/verdict.hpp"

using namespace pk;

TEST_CASE("status strings round trip") {
    for (auto s : {VerdictStatus::RibbonSlice, VerdictStatus::FreedmanSlice, VerdictStatus::NotAlgSlice,
                   VerdictStatus::CGObstructed, VerdictStatus::LecuonaExceptional, VerdictStatus::Inconclusive,
                   VerdictStatus::NotAttempted})
        CHECK(parse_status(to_string(s)) == s);
    CHECK_FALSE(parse_status("slice"));
}

TEST_CASE("analyze examples") {
    CHECK(analyze({3, 5, -5}).status == VerdictStatus::RibbonSlice);
    const Verdict a = analyze({1, 3, -7});
    CHECK(a.status == VerdictStatus::RibbonSlice);
    REQUIRE(a.ribbon);
    CHECK(a.ribbon->family == RibbonFamily::OddOneQMinusQMinus4);

    const Verdict f = analyze({-3, 5, 7});
    CHECK(f.status == VerdictStatus::FreedmanSlice);
    CHECK(f.annotation.find("not smoothly slice") != std::string::npos);

    const Verdict n = analyze({3, 5, 7});
    CHECK(n.status == VerdictStatus::NotAlgSlice);
    CHECK(n.reason == "nonzero signature");

    const Verdict cg = analyze({5, 9, -41});
    CHECK(cg.status == VerdictStatus::CGObstructed);
    REQUIRE_FALSE(cg.witnesses.empty());
    CHECK(cg.witnesses[0].prime == 23);

    CHECK(analyze({-1, 3, 6}).status == VerdictStatus::RibbonSlice);
    CHECK_THROWS_AS(analyze({2, 4, 6}), InvalidKnot);
}

TEST_CASE("even gates") {
    // P(-3,5,10): 20 - 9 + 6 = 17 is not a square.
    const Verdict v = analyze({-3, 5, 10});
    CHECK(v.status == VerdictStatus::NotAlgSlice);
    CHECK(analyze({-3, 5, 48}).status == VerdictStatus::CGObstructed);
    CHECK(analyze({1, 1, 40}).status == VerdictStatus::CGObstructed);
}

TEST_CASE("Lecuona family") {
    const PretzelKnot k{11, -13, -72};
    const Verdict v = analyze(k);
    REQUIRE(v.lecuona);
    CHECK(v.lecuona->a == 11);
    CHECK(v.lecuona->unresolved);
    CHECK(v.status == VerdictStatus::LecuonaExceptional);
    CHECK(analyze(k.mirror()).lecuona == v.lecuona);
}

TEST_CASE("case dispatch") {
    CHECK(case_dispatch({9, 15, -69}, 3) == "Case3");
    CHECK(case_dispatch({9, 15, -69}, 13) == "Case4");
    CHECK(case_dispatch({1, 11, -3}, 5) == "Case6");
}

TEST_CASE("power of three trigger") {
    BigInt D;
    REQUIRE(is_perfect_square(determinant(PretzelKnot{1, 1, -41}), &D));
    CHECK(D == 9);
    CHECK(power_of_three_trigger({1, 1, -41}, D));
    const Verdict v = analyze({1, 1, -41});
    CHECK(v.status == VerdictStatus::CGObstructed);
    REQUIRE_FALSE(v.search.empty());
    // Order-3 characters already kill the metabolizer, so no order-9 run is needed.
    CHECK(v.search[0].moduli == std::vector<long>{3});
    CHECK(v.search[0].killed == v.search[0].metabolizers);
    REQUIRE(is_perfect_square(determinant(PretzelKnot{9, 9, -5}), &D));
    CHECK_FALSE(power_of_three_trigger({9, 9, -5}, D));
}

TEST_CASE("verdict is invariant under symmetries") {
    gen::Gen rng(73);
    for (int i = 0; i < 60; ++i) {
        const PretzelKnot k = rng.odd_mixed(21);
        if (classify(k) != KnotClass::Odd) continue;
        const VerdictStatus s = analyze(k).status;
        CHECK(analyze({k.q, k.r, k.p}).status == s);
        CHECK(analyze({k.r, k.q, k.p}).status == s);
        CHECK(analyze(k.mirror()).status == s);
    }
}

TEST_CASE("witnesses reverify") {
    gen::Gen rng(79);
    int seen = 0;
    for (int i = 0; i < 400 && seen < 25; ++i) {
        const PretzelKnot k = rng.odd_mixed(31);
        if (classify(k) != KnotClass::Odd) continue;
        const Verdict v = analyze(k);
        if (v.status != VerdictStatus::CGObstructed) continue;
        ++seen;
        const PretzelKnot n = normal_form(k).knot;
        for (const auto& w : v.witnesses) {
            CHECK(reverify(n, w));
            Witness bad = w;
            bad.sigma += 1;
            CHECK_FALSE(reverify(n, bad));
        }
    }
    CHECK(seen > 5);
}

TEST_CASE("both multiples of chi1 obstruct P(5,9,-41)") {
    const PretzelKnot k{5, 9, -41};
    for (long m : {1L, 2L}) {
        const Character chi = multiple(make_character(23, {18, 1, 21, 1}), m);
        auto v = evaluate_sigma(k, chi, 1);
        REQUIRE(v);
        Witness w{23, 0, chi, 1, v->value, 1, v->route};
        CHECK(reverify(k, w) == (m == 2));
    }
}

TEST_CASE("ranges") {
    const auto odd = odd_theorem_range(5, -3);
    CHECK(odd.size() == 6 * 2);
    for (const auto& k : odd) CHECK(classify(k) == KnotClass::Odd);
    for (const auto& k : even_candidate_range(3, 4)) {
        CHECK(classify(k) == KnotClass::Even);
        CHECK(k.q == k.p * -1 + 2);
    }
    const auto nf = enumerate_normal_forms(KnotClass::Odd, 5);
    CHECK(std::is_sorted(nf.begin(), nf.end(), [](const PretzelKnot& a, const PretzelKnot& b) {
        return a.params() < b.params();
    }));
    for (const auto& k : nf) CHECK(normal_form(k).knot == k);
}

TEST_CASE("serial and parallel scans agree") {
    auto knots = odd_theorem_range(15, -31);
    const auto more = even_candidate_range(7, 20);
    knots.insert(knots.end(), more.begin(), more.end());
    const auto a = scan_serial(knots);
    for (int jobs : {1, 2, 4}) CHECK(scan_parallel(knots, {}, jobs) == a);
}
