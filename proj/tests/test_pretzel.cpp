#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "pk/pretzel.hpp"
#include "pk/signature.hpp"

using namespace pk;

TEST_CASE("classify") {
    CHECK(classify(3, 5, -5) == KnotClass::Odd);
    CHECK(classify(2, 3, -3) == KnotClass::Even);
    CHECK(classify(2, 4, 3) == KnotClass::NotAKnot);
    CHECK(classify(1, 0, 3) == KnotClass::Even);
}

TEST_CASE("Seifert matrices") {
    CHECK(seifert_matrix({-3, 5, 7}) == IntMatrix{{1, 3}, {2, 6}});
    CHECK(seifert_matrix({1, 3, -7}) == IntMatrix{{2, 2}, {1, -2}});
    CHECK(seifert_matrix({1, 1, 1}) == IntMatrix{{1, 1}, {0, 1}});
    CHECK(determinant(seifert_matrix({-3, 5, 7}) + seifert_matrix({-3, 5, 7}).transpose()) == -1);
    CHECK(determinant(seifert_matrix({1, 3, -7}) + seifert_matrix({1, 3, -7}).transpose()) == -25);
}

TEST_CASE("determinants") {
    CHECK(determinant(PretzelKnot{1, 3, -7}) == 25);
    CHECK(determinant(PretzelKnot{-3, 5, 7}) == 1);
    CHECK(determinant(PretzelKnot{-1, 3, 2}) == 1);
    gen::Gen g(3);
    for (int i = 0; i < 300; ++i) {
        const PretzelKnot k = g.odd_knot(31);
        CHECK(determinant(k) == abs(BigInt(k.p * k.q + k.q * k.r + k.p * k.r)));
        const IntMatrix v = seifert_matrix(k);
        CHECK(determinant(k) == abs(determinant(v + v.transpose())));
    }
}

TEST_CASE("classical invariants") {
    const ClassicalInvariants a = classical({1, 3, -7});
    REQUIRE(a.alexander);
    CHECK(*a.alexander == normalize_alexander({6, -13, 6}));
    CHECK(to_string(*a.alexander) == "6t^2 - 13t + 6");
    REQUIRE(a.fox_milnor);
    CHECK(a.fox_milnor->passes);
    CHECK(*a.signature == 0);
    CHECK(*a.is_alg_slice);

    const ClassicalInvariants b = classical({-3, 5, 7});
    CHECK(*b.alexander == IntPoly{1});
    CHECK(*b.is_alg_slice);

    const ClassicalInvariants c = classical({3, 5, 7});
    CHECK(*c.signature != 0);
    CHECK_FALSE(*c.is_alg_slice);

    const ClassicalInvariants e = classical({-1, 3, 6});
    CHECK(e.determinant == 9);
    CHECK_FALSE(e.signature.has_value());
}

TEST_CASE("Alexander polynomial at -1 is the determinant; signature of mirror negates") {
    gen::Gen g(4);
    for (int i = 0; i < 200; ++i) {
        const PretzelKnot k = g.odd_knot(25);
        const ClassicalInvariants ci = classical(k);
        BigInt at_minus_one = 0, sign = 1;
        for (const auto& c : *ci.alexander) {
            at_minus_one += sign * c;
            sign = -sign;
        }
        CHECK(abs(at_minus_one) == ci.determinant);
        CHECK(*classical(k.mirror()).signature == -*ci.signature);
    }
}

TEST_CASE("Fox-Milnor") {
    CHECK(fox_milnor(normalize_alexander({6, -13, 6})).passes);
    CHECK_FALSE(fox_milnor(normalize_alexander({1, -1, 1})).passes);  // trefoil
    CHECK(fox_milnor(IntPoly{1}).passes);
}

TEST_CASE("ribbon forms") {
    auto a = ribbon_form({3, 5, -5});
    REQUIRE(a);
    CHECK(a->family == RibbonFamily::OddPQMinusQ);
    CHECK(a->label() == "P(p,q,-q)");
    auto b = ribbon_form({1, 3, -7});
    REQUIRE(b);
    CHECK(b->family == RibbonFamily::OddOneQMinusQMinus4);
    CHECK(b->q == 3);
    CHECK_FALSE(ribbon_form({5, 9, -41}));
    CHECK(ribbon_form({-5, 5, -3}));  // reflected and permuted
    auto e = ribbon_form({4, 7, -7});
    REQUIRE(e);
    CHECK(e->family == RibbonFamily::EvenPQMinusQ);
}

TEST_CASE("two-bridge pretzels") {
    // Stevedore knot, presented three ways.
    const TwoBridge s = *twobridge_fraction({1, 1, -5});
    CHECK(s.alpha == 9);
    CHECK(same_twobridge_up_to_mirror(s, *twobridge_fraction({-1, 3, 6})));
    CHECK(same_twobridge_up_to_mirror(s, *twobridge_fraction({1, 1, 4})));
    auto r = ribbon_form({-1, 3, 6});
    REQUIRE(r);
    CHECK(r->family == RibbonFamily::TwoBridgeOddPQMinusQ);
    // P(-1,3,14) has determinant 25 but is not one of the ribbon two-bridge knots.
    CHECK_FALSE(ribbon_form({-1, 3, 14}));
    // T(2,9) and the stevedore knot share a determinant.
    CHECK_FALSE(same_twobridge_up_to_mirror(TwoBridge{9, 1}, s));
    CHECK_FALSE(twobridge_fraction({3, 5, 7}));
}

TEST_CASE("two-bridge conversion") {
    CHECK(twobridge_to_pretzel(1, 1) == PretzelKnot{1, 1, -3});
    CHECK(twobridge_to_pretzel(2, 1) == PretzelKnot{1, 3, -3});
    CHECK(twobridge_to_pretzel(2, 3) == PretzelKnot{1, 3, -7});
    for (long a = 1; a < 8; ++a)
        for (long b = 1; b < 8; ++b) CHECK(determinant(twobridge_to_pretzel(a, b)) == 4 * a * b + 1);
}

TEST_CASE("Lecuona family") {
    auto a = lecuona_family({1, -3, -2});
    REQUIRE(a);
    CHECK(a->a == 1);
    CHECK(a->residue == 1);
    CHECK(a->disposition() == "unresolved");
    auto b = lecuona_family({3, -5, -8});
    REQUIRE(b);
    CHECK(b->a == 3);
    CHECK(b->disposition() == "resolved-not-alg-slice");
    CHECK_FALSE(lecuona_family({2, 3, -3}));
    CHECK(lecuona_family(PretzelKnot{3, -5, -8}.mirror()));
    auto c = lecuona_family({49, -51, -1250});
    REQUIRE(c);
    CHECK_FALSE(c->unresolved);
    for (long a = 1; a < 200; a += 2) CHECK(determinant(PretzelKnot{a, -a - 2, -((a + 1) * (a + 1)) / 2}) == 1);
}

TEST_CASE("even candidate forms and the Jabuka family") {
    auto f = even_candidate_form({-1, 3, 6});
    REQUIRE(f);
    CHECK(f->p == 1);
    CHECK(f->q == 6);
    CHECK(f->signed_determinant() == 9);
    CHECK(in_jabuka_family({-1, 3, 6}));
    CHECK(in_jabuka_family({6, 3, -1}));
    CHECK(in_jabuka_family({-3, 5, 8}));  // determinant one
    CHECK_FALSE(in_jabuka_family({-3, 5, 10}));
    CHECK_FALSE(in_jabuka_family({2, 3, 5}));
}

TEST_CASE("normal forms") {
    CHECK(normal_form({5, -41, 9}).knot == PretzelKnot{5, 9, -41});
    const NormalForm r = normal_form({-5, -9, 41});
    CHECK(r.knot == PretzelKnot{5, 9, -41});
    CHECK(r.reflected);
    CHECK(normal_form({7, 3, 5}).knot == PretzelKnot{3, 5, 7});
    gen::Gen g(8);
    for (int i = 0; i < 300; ++i) {
        const PretzelKnot k = g.odd_knot(21);
        const PretzelKnot n = normal_form(k).knot;
        CHECK(normal_form(n).knot == n);
        CHECK(normal_form(k.mirror()).knot == n);
        CHECK(normal_form({k.r, k.p, k.q}).knot == n);
        CHECK(determinant(n) == determinant(k));
    }
}

TEST_CASE("nontriviality") {
    CHECK(odd_nontrivial({-3, 5, 7}));
    CHECK_FALSE(odd_nontrivial({1, -1, 5}));
}
