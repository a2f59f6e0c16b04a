#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "pk/errors.hpp"
#include "pk/link_sig.hpp"
#include "pk/signature.hpp"

using namespace pk;

TEST_CASE("torus link Seifert matrices") {
    CHECK(torus_link_seifert(1, 7).rows() == 0);
    const IntMatrix hopf = torus_link_seifert(2, 2);
    REQUIRE(hopf.rows() == 1);
    CHECK(hermitian_signature_at_root(hopf, 2, 1) == -1);
    CHECK(hermitian_signature_at_root(torus_link_seifert(2, 42), 7, 1) == -12);
    // trefoil
    CHECK(symmetric_signature(torus_link_seifert(2, 3) + torus_link_seifert(2, 3).transpose()) == -2);
}

TEST_CASE("Litherland closed form") {
    CHECK(litherland_torus_sigma(2, 3) == -12);
    CHECK(litherland_torus_sigma(4, 5) == -120);
    for (long k = 1; k < 6; ++k) CHECK(litherland_torus_sigma(1, k) == 0);
    CHECK(hermitian_signature_at_root(torus_link_seifert(4, 140), 7, 1) == -120);
}

TEST_CASE("lattice count matches the Seifert route") {
    gen::Gen g(23);
    for (int trial = 0; trial < 150; ++trial) {
        const long a = g.uniform(1, 5);
        long b = g.uniform(1, 14) * (g.coin() ? 1 : -1);
        const long d = g.uniform(2, 9), k = g.uniform(1, d - 1);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(d);
        CAPTURE(k);
        CHECK(torus_link_sigma(a, b, d, k) == hermitian_signature_at_root(torus_link_seifert(a, b), d, k));
    }
}

TEST_CASE("mirror negates torus signatures") {
    for (long a = 2; a <= 4; ++a)
        for (long b = 2; b <= 9; ++b)
            for (long d : {3L, 5L})
                CHECK(torus_link_sigma(a, -b, d, 1) == -torus_link_sigma(a, b, d, 1));
}

TEST_CASE("satellite links") {
    SatelliteLink pair;
    pair.model = LinkModelKind::TorusLink2;
    pair.mutual_linking = -5;
    pair.cables = {CableSpec{4, 1, 0}, CableSpec{4, 0, 1}};
    CHECK(satellite_sigma(pair, 3, 1) == -1);

    SatelliteLink chain;
    chain.model = LinkModelKind::HopfChain;
    chain.cables = {CableSpec{0, 1, 1}, CableSpec{21, 2, 0}, CableSpec{35, 4, 0}, CableSpec{-119, 1, 0}};
    CHECK(satellite_sigma(chain, 7, 1) == -132);
    SatelliteOptions by_seifert;
    by_seifert.torus_pieces_by_seifert = true;
    CHECK(satellite_sigma(chain, 7, 1, by_seifert) == -132);

    SatelliteLink empty = chain;
    empty.cables[1] = CableSpec{21, 0, 0};
    CHECK_THROWS_AS(satellite_sigma(empty, 7, 1), UnsupportedCableShape);
}

TEST_CASE("coherent two-component cables against the Hopf-link count") {
    // One strand on each component of T(2, 2P) with framings equal to P is T(2, 2P) itself.
    for (long P : {-3L, -1L, 2L, 4L}) {
        SatelliteLink l;
        l.mutual_linking = P;
        l.cables = {CableSpec{P, 1, 0}, CableSpec{P, 1, 0}};
        for (long d : {3L, 5L, 7L})
            CHECK(satellite_sigma(l, d, 1) == torus_link_sigma(2, 2 * P, d, 1));
    }
}

TEST_CASE("crossing cap") {
    SatelliteLink l;
    l.mutual_linking = 40;
    l.cables = {CableSpec{40, 20, 0}, CableSpec{40, 20, 0}};
    SatelliteOptions opt;
    opt.max_crossings = 1000;
    CHECK_THROWS_AS(satellite_sigma(l, 41, 1, opt), CapExceeded);
}

TEST_CASE("colored torus links") {
    for (long d : {3L, 5L, 7L})
        for (long m1 = 1; m1 < d; ++m1)
            for (long m2 = 1; m2 < d; ++m2) {
                CHECK(colored_torus_signature(1, d, m1, m2) == 0);
                CHECK(colored_torus_signature(-1, d, m1, m2) == 0);
                CHECK(colored_torus_signature(0, d, m1, m2) == 0);
            }
    // Equal colors recover the one-variable signature up to the linking term.
    CHECK(colored_torus_signature(2, 3, 1, 1) == torus_link_sigma(2, 4, 3, 1) + 2);
    const ColoredTorusData c = colored_torus_matrix(3);
    CHECK(c.mm == c.pp.transpose());
    CHECK(c.pm == IntMatrix(2, 2));
}

TEST_CASE("colored signature is symmetric in the colors and under mirroring") {
    for (long f = -4; f <= 4; ++f)
        for (long d : {3L, 5L})
            for (long m1 = 1; m1 < d; ++m1)
                for (long m2 = 1; m2 < d; ++m2) {
                    CHECK(colored_torus_signature(f, d, m1, m2) == colored_torus_signature(f, d, m2, m1));
                    CHECK(colored_torus_signature(-f, d, m1, m2) == -colored_torus_signature(f, d, m1, m2));
                }
}
