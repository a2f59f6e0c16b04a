#pragma once

#include "pk/cg.hpp"
#include "pk/double_cover.hpp"
#include "pk/pretzel.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pk {

enum class VerdictStatus {
    RibbonSlice,
    FreedmanSlice,
    NotAlgSlice,
    CGObstructed,
    LecuonaExceptional,
    Inconclusive,
    NotAttempted
};

std::string to_string(VerdictStatus s);
std::optional<VerdictStatus> parse_status(const std::string& s);

struct Witness {
    long prime = 0;
    std::size_t metabolizer_id = 0;
    Character chi;  // Montesinos model images (eps, a, b, c)
    long k = 1;
    Rational sigma;
    long bound = 1;
    Route route = Route::Colored;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct PrimeSearch {
    long prime = 0;
    std::vector<long> moduli;  // d, and 9 when the power-of-3 trigger fires
    std::string case_label;
    std::size_t metabolizers = 0;
    std::size_t characters = 0;
    std::size_t killed = 0;
    std::size_t unevaluated = 0;  // (chi, k) pairs no route covered
    bool obstructs = false;

    friend bool operator==(const PrimeSearch&, const PrimeSearch&) = default;
};

struct Verdict {
    VerdictStatus status = VerdictStatus::Inconclusive;
    std::string reason;
    std::string annotation;
    std::optional<RibbonForm> ribbon;
    std::optional<LecuonaMatch> lecuona;
    std::vector<Witness> witnesses;
    std::map<long, std::string> case_trace;
    std::vector<PrimeSearch> search;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct AnalyzeOptions {
    long max_prime_power = 9;
    MetabolizerOptions metabolizer;
    CoverDimOptions cover;
};

// Runs on the normal form of k.
Verdict analyze(const PretzelKnot& k, const AnalyzeOptions& opt = {});

// Odd: Case1..Case6 / PowerOf3; even candidates: EvenCase1..EvenCase6.
std::string case_dispatch(const PretzelKnot& k, long d);

// True when the order-9 characters are attempted for this knot.
bool power_of_three_trigger(const PretzelKnot& normal, const BigInt& D);

// Recomputes sigma and the bound for a witness and checks |sigma| > bound.
bool reverify(const PretzelKnot& normal, const Witness& w);

struct ScanRecord {
    PretzelKnot knot;  // normal form
    KnotClass cls = KnotClass::Odd;
    ClassicalInvariants invariants;
    Verdict verdict;

    friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

ScanRecord analyze_record(const PretzelKnot& k, const AnalyzeOptions& opt = {});

// Normal forms of all knots of the given class with 0 < |params| <= max_abs, sorted.
std::vector<PretzelKnot> enumerate_normal_forms(KnotClass parity, long max_abs);

// Odd P(p, q, r) with 0 < p <= q <= max_pq odd and min_r <= r < 0 odd.
std::vector<PretzelKnot> odd_theorem_range(long max_pq, long min_r);

// Even candidates P(-p, p+2, q), p odd in [-1, max_p], q even and nonzero with |q| <= max_q.
std::vector<PretzelKnot> even_candidate_range(long max_p, long max_q);

std::vector<ScanRecord> scan_serial(const std::vector<PretzelKnot>& knots, const AnalyzeOptions& opt = {});
std::vector<ScanRecord> scan_parallel(const std::vector<PretzelKnot>& knots, const AnalyzeOptions& opt = {},
                                      int jobs = 0);

}  // namespace pk
