#pragma once

#include "pk/verdict.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pk {

std::string format_rational(const Rational& x);  // always "n/m"
Rational parse_rational(const std::string& s);

struct PresentationSummary {
    std::string kind;
    std::vector<std::string> labels;
    std::vector<std::vector<long>> linking;
    std::vector<std::string> h1_factors;

    friend bool operator==(const PresentationSummary&, const PresentationSummary&) = default;
};

struct ReportWitness {
    long d = 0;
    std::size_t metabolizer = 0;
    long modulus = 0;
    std::vector<long> chi;
    long k = 1;
    Rational sigma;
    long bound = 1;
    std::string route;

    friend bool operator==(const ReportWitness&, const ReportWitness&) = default;
};

struct AnalyzeReport {
    PretzelKnot input;
    PretzelKnot normal;
    bool reflected = false;
    std::string cls;
    std::string det;
    std::optional<long> signature;
    std::optional<std::string> alexander;
    std::optional<bool> alg_slice;
    std::optional<bool> fox_milnor;
    std::vector<PresentationSummary> presentations;
    std::string status;
    std::string reason;
    std::string annotation;
    std::optional<std::string> form;
    std::optional<long> lecuona_a;
    std::optional<long> lecuona_residue;
    std::optional<std::string> lecuona_disposition;
    std::vector<ReportWitness> witnesses;
    std::map<long, std::string> cases;
    std::vector<PrimeSearch> search;
    double elapsed_ms = 0;

    friend bool operator==(const AnalyzeReport&, const AnalyzeReport&) = default;
};

// Throws InvalidKnot for links.
AnalyzeReport build_report(const PretzelKnot& input, const AnalyzeOptions& opt = {});

nlohmann::json to_json(const AnalyzeReport& r);
AnalyzeReport report_from_json(const nlohmann::json& j);
std::string format_text(const AnalyzeReport& r);

struct CsvRow {
    long p = 0, q = 0, r = 0;
    std::string cls;
    std::string det;
    std::string signature;  // empty when unavailable
    std::string alg_slice;  // "true", "false" or empty
    std::string ribbon_form;
    std::string verdict;
    std::string witness_d;
    std::string witness_chi;  // colon separated
    std::string witness_k;
    std::string sigma;
    std::string bound;

    friend bool operator==(const CsvRow&, const CsvRow&) = default;
};

std::string csv_header();
std::string ribbon_token(RibbonFamily f);
CsvRow csv_row(const ScanRecord& rec);
std::string format_csv(const CsvRow& row);
CsvRow parse_csv(const std::string& line);  // throws std::invalid_argument

}  // namespace pk
