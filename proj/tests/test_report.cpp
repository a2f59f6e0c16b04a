#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gen.hpp"
#include "pk/errors.hpp"
#include "pk/report.hpp"

using namespace pk;

TEST_CASE("rationals") {
    CHECK(format_rational(Rational(3)) == "3/1");
    CHECK(format_rational(make_rational(-11, 9)) == "-11/9");
    CHECK(parse_rational("24/7") == Rational(24, 7));
    CHECK(parse_rational("-7/1") == -7);
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("report contents") {
    const AnalyzeReport r = build_report({9, 5, -41});
    CHECK(r.normal == PretzelKnot{5, 9, -41});
    CHECK(r.cls == "odd");
    CHECK(r.det == "529");
    CHECK(r.status == "cg_obstructed");
    REQUIRE_FALSE(r.witnesses.empty());
    CHECK(r.witnesses[0].d == 23);
    CHECK(r.presentations.size() == 2);
    CHECK(r.presentations[0].h1_factors == std::vector<std::string>{"529"});

    const nlohmann::json j = to_json(r);
    CHECK(j["verdict"]["status"] == "cg_obstructed");
    CHECK(j["invariants"]["det"] == "529");
    CHECK(j.contains("timing_ms"));

    const AnalyzeReport rib = build_report({1, 3, -7});
    CHECK(rib.status == "ribbon");
    CHECK(rib.form.has_value());
    CHECK(to_json(rib)["invariants"]["alexander"].is_string());

    CHECK_THROWS_AS(build_report({2, 4, 6}), InvalidKnot);
    CHECK(format_text(r).find("cg_obstructed") != std::string::npos);
}

TEST_CASE("json round trip") {
    gen::Gen rng(83);
    std::vector<PretzelKnot> ks{{5, 9, -41}, {-3, 5, 7}, {3, 5, 7}, {-1, 3, 6}, {11, -13, -72}, {-3, 5, 48}};
    for (int i = 0; i < 20; ++i) ks.push_back(rng.odd_mixed(25));
    for (const auto& k : ks) {
        if (classify(k) == KnotClass::NotAKnot) continue;
        const AnalyzeReport r = build_report(k);
        CHECK(report_from_json(nlohmann::json::parse(to_json(r).dump())) == r);
    }
}

TEST_CASE("csv rows") {
    CHECK(csv_header().rfind("p,q,r,", 0) == 0);
    const CsvRow rib = csv_row(analyze_record({1, 3, -7}));
    CHECK(format_csv(rib) == "1,3,-7,odd,25,0,true,1_q_-q-4,ribbon,,,,,");
    CHECK(ribbon_token(RibbonFamily::OddPQMinusQ) == "p_q_-q");

    const CsvRow cg = csv_row(analyze_record({5, 9, -41}));
    CHECK(cg.verdict == "cg_obstructed");
    CHECK(cg.witness_d == "23");
    CHECK(cg.witness_chi.find(':') != std::string::npos);

    CHECK_THROWS_AS(parse_csv("1,2,3"), std::invalid_argument);
}

TEST_CASE("csv round trip") {
    for (const auto& k : odd_theorem_range(9, -21)) {
        const CsvRow row = csv_row(analyze_record(k));
        CHECK(parse_csv(format_csv(row)) == row);
    }
    for (const auto& k : even_candidate_range(5, 12)) {
        const CsvRow row = csv_row(analyze_record(k));
        CHECK(parse_csv(format_csv(row)) == row);
    }
}
