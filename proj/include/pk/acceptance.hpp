#pragma once

#include <functional>
#include <string>
#include <vector>

namespace pk {

struct FixtureOptions {
    // Added to the Litherland closed form before comparison; nonzero only in mutation runs.
    long litherland_offset = 0;
    int jobs = 0;
    std::vector<int> only;  // criterion ids to run; empty runs all
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

CriterionResult criterion_odd_replication(const FixtureOptions& opt = {});
CriterionResult criterion_ks_family(const FixtureOptions& opt = {});
CriterionResult criterion_cross_route(const FixtureOptions& opt = {});
CriterionResult criterion_litherland(const FixtureOptions& opt = {});
CriterionResult criterion_divisibility(const FixtureOptions& opt = {});
CriterionResult criterion_named_fixtures(const FixtureOptions& opt = {});
CriterionResult criterion_cover_homology(const FixtureOptions& opt = {});
CriterionResult criterion_classical(const FixtureOptions& opt = {});
CriterionResult criterion_even_replication(const FixtureOptions& opt = {});
CriterionResult criterion_representatives(const FixtureOptions& opt = {});

// All ten (or opt.only) in order; on_result is called as each finishes.
std::vector<CriterionResult> run_acceptance(const FixtureOptions& opt = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& r);

}  // namespace pk
