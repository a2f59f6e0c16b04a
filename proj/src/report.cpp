#include "pk/report.hpp"

#include "pk/errors.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace pk {

using nlohmann::json;

std::string format_rational(const Rational& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: " + s);
    }
}

namespace {

PresentationSummary summarize(const SurgeryPresentation& pres) {
    PresentationSummary s;
    s.kind = to_string(pres.kind);
    s.labels = pres.labels;
    for (std::size_t i = 0; i < pres.linking.rows(); ++i) {
        std::vector<long> row;
        for (std::size_t j = 0; j < pres.linking.cols(); ++j) row.push_back(pres.linking(i, j).get_si());
        s.linking.push_back(row);
    }
    for (const auto& f : homology(pres).factors) s.h1_factors.push_back(f.get_str());
    return s;
}

}  // namespace

AnalyzeReport build_report(const PretzelKnot& input, const AnalyzeOptions& opt) {
    if (classify(input) == KnotClass::NotAKnot) throw InvalidKnot(to_string(input) + " is not a knot");
    const auto t0 = std::chrono::steady_clock::now();
    AnalyzeReport r;
    r.input = input;
    const NormalForm nf = normal_form(input);
    r.normal = nf.knot;
    r.reflected = nf.reflected;
    r.cls = to_string(classify(input));
    const ClassicalInvariants ci = classical(nf.knot);
    r.det = ci.determinant.get_str();
    r.signature = ci.signature;
    if (ci.alexander) r.alexander = to_string(*ci.alexander);
    r.alg_slice = ci.is_alg_slice;
    if (ci.fox_milnor) r.fox_milnor = ci.fox_milnor->passes;
    r.presentations.push_back(summarize(montesinos_presentation(nf.knot)));
    if (classify(nf.knot) == KnotClass::Odd) r.presentations.push_back(summarize(reduced_presentation(nf.knot, 2)));

    const Verdict v = analyze(nf.knot, opt);
    r.status = to_string(v.status);
    r.reason = v.reason;
    r.annotation = v.annotation;
    if (v.ribbon) r.form = v.ribbon->label();
    if (v.lecuona) {
        r.lecuona_a = v.lecuona->a;
        r.lecuona_residue = v.lecuona->residue;
        r.lecuona_disposition = v.lecuona->disposition();
    }
    for (const auto& w : v.witnesses)
        r.witnesses.push_back(
            {w.prime, w.metabolizer_id, w.chi.modulus, w.chi.images, w.k, w.sigma, w.bound, to_string(w.route)});
    r.cases = v.case_trace;
    r.search = v.search;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

namespace {

template <class T>
json opt_json(const std::optional<T>& x) {
    return x ? json(*x) : json(nullptr);
}

template <class T>
std::optional<T> opt_get(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

json knot_json(const PretzelKnot& k) { return {{"p", k.p}, {"q", k.q}, {"r", k.r}}; }
PretzelKnot knot_from(const json& j) { return {j.at("p").get<long>(), j.at("q").get<long>(), j.at("r").get<long>()}; }

}  // namespace

json to_json(const AnalyzeReport& r) {
    json j;
    j["input"] = knot_json(r.input);
    j["normal_form"] = knot_json(r.normal);
    j["reflected"] = r.reflected;
    j["class"] = r.cls;
    j["invariants"] = {{"det", r.det},
                       {"signature", opt_json(r.signature)},
                       {"alexander", opt_json(r.alexander)},
                       {"alg_slice", opt_json(r.alg_slice)},
                       {"fox_milnor", opt_json(r.fox_milnor)}};
    json pres = json::array();
    for (const auto& p : r.presentations)
        pres.push_back({{"kind", p.kind}, {"labels", p.labels}, {"linking", p.linking}, {"h1", p.h1_factors}});
    j["presentations"] = pres;
    json wit = json::array();
    for (const auto& w : r.witnesses)
        wit.push_back({{"d", w.d},
                       {"metabolizer", w.metabolizer},
                       {"modulus", w.modulus},
                       {"chi", w.chi},
                       {"k", w.k},
                       {"sigma", format_rational(w.sigma)},
                       {"bound", w.bound},
                       {"route", w.route}});
    json verdict = {{"status", r.status}, {"reason", r.reason}, {"witnesses", wit}};
    if (!r.annotation.empty()) verdict["annotation"] = r.annotation;
    if (r.form) verdict["form"] = *r.form;
    if (r.lecuona_a)
        verdict["lecuona"] = {
            {"a", *r.lecuona_a}, {"residue", *r.lecuona_residue}, {"disposition", *r.lecuona_disposition}};
    j["verdict"] = verdict;
    json cases = json::object();
    for (const auto& [d, label] : r.cases) cases[std::to_string(d)] = label;
    j["cases"] = cases;
    json counts = json::array();
    for (const auto& s : r.search)
        counts.push_back({{"prime", s.prime},
                          {"moduli", s.moduli},
                          {"case", s.case_label},
                          {"metabolizers", s.metabolizers},
                          {"characters", s.characters},
                          {"killed", s.killed},
                          {"unevaluated", s.unevaluated},
                          {"obstructs", s.obstructs}});
    j["counts"] = counts;
    j["timing_ms"] = r.elapsed_ms;
    return j;
}

AnalyzeReport report_from_json(const json& j) {
    AnalyzeReport r;
    r.input = knot_from(j.at("input"));
    r.normal = knot_from(j.at("normal_form"));
    r.reflected = j.at("reflected").get<bool>();
    r.cls = j.at("class").get<std::string>();
    const json& inv = j.at("invariants");
    r.det = inv.at("det").get<std::string>();
    r.signature = opt_get<long>(inv, "signature");
    r.alexander = opt_get<std::string>(inv, "alexander");
    r.alg_slice = opt_get<bool>(inv, "alg_slice");
    r.fox_milnor = opt_get<bool>(inv, "fox_milnor");
    for (const auto& p : j.at("presentations"))
        r.presentations.push_back({p.at("kind").get<std::string>(), p.at("labels").get<std::vector<std::string>>(),
                                   p.at("linking").get<std::vector<std::vector<long>>>(),
                                   p.at("h1").get<std::vector<std::string>>()});
    const json& v = j.at("verdict");
    r.status = v.at("status").get<std::string>();
    r.reason = v.at("reason").get<std::string>();
    r.annotation = v.value("annotation", "");
    r.form = opt_get<std::string>(v, "form");
    if (v.contains("lecuona")) {
        const json& l = v.at("lecuona");
        r.lecuona_a = l.at("a").get<long>();
        r.lecuona_residue = l.at("residue").get<long>();
        r.lecuona_disposition = l.at("disposition").get<std::string>();
    }
    for (const auto& w : v.at("witnesses"))
        r.witnesses.push_back({w.at("d").get<long>(), w.at("metabolizer").get<std::size_t>(),
                               w.at("modulus").get<long>(), w.at("chi").get<std::vector<long>>(),
                               w.at("k").get<long>(), parse_rational(w.at("sigma").get<std::string>()),
                               w.at("bound").get<long>(), w.at("route").get<std::string>()});
    for (const auto& [d, label] : j.at("cases").items()) r.cases[std::stol(d)] = label.get<std::string>();
    for (const auto& c : j.at("counts")) {
        PrimeSearch s;
        s.prime = c.at("prime").get<long>();
        s.moduli = c.at("moduli").get<std::vector<long>>();
        s.case_label = c.at("case").get<std::string>();
        s.metabolizers = c.at("metabolizers").get<std::size_t>();
        s.characters = c.at("characters").get<std::size_t>();
        s.killed = c.at("killed").get<std::size_t>();
        s.unevaluated = c.at("unevaluated").get<std::size_t>();
        s.obstructs = c.at("obstructs").get<bool>();
        r.search.push_back(s);
    }
    r.elapsed_ms = j.at("timing_ms").get<double>();
    return r;
}

std::string format_text(const AnalyzeReport& r) {
    std::ostringstream os;
    os << to_string(r.input);
    if (!(r.input == r.normal)) os << " (normal form " << to_string(r.normal) << (r.reflected ? ", reflected" : "") << ")";
    os << "\nclass: " << r.cls << "\ndeterminant: " << r.det << "\n";
    if (r.signature) os << "signature: " << *r.signature << "\n";
    if (r.alexander) os << "alexander: " << *r.alexander << "\n";
    if (r.alg_slice) os << "algebraically slice: " << (*r.alg_slice ? "yes" : "no") << "\n";
    for (const auto& p : r.presentations) {
        os << "presentation " << p.kind << ": H1 =";
        if (p.h1_factors.empty()) os << " 0";
        for (std::size_t i = 0; i < p.h1_factors.size(); ++i) os << (i ? " + Z/" : " Z/") << p.h1_factors[i];
        os << "\n";
    }
    for (const auto& [d, label] : r.cases) os << "case at d=" << d << ": " << label << "\n";
    for (const auto& s : r.search)
        os << "d=" << s.prime << ": " << s.metabolizers << " metabolizer(s), " << s.characters << " character(s), "
           << s.killed << " killed\n";
    os << "verdict: " << r.status;
    if (r.form) os << " [" << *r.form << "]";
    if (!r.reason.empty()) os << " (" << r.reason << ")";
    os << "\n";
    if (!r.annotation.empty()) os << "note: " << r.annotation << "\n";
    if (r.lecuona_a)
        os << "lecuona: a=" << *r.lecuona_a << " residue " << *r.lecuona_residue << " mod 60, "
           << *r.lecuona_disposition << "\n";
    for (const auto& w : r.witnesses) {
        os << "witness: metabolizer " << w.metabolizer << ", d=" << w.modulus << ", chi=(";
        for (std::size_t i = 0; i < w.chi.size(); ++i) os << (i ? "," : "") << w.chi[i];
        os << "), k=" << w.k << ", sigma=" << format_rational(w.sigma) << ", bound=" << w.bound << " [" << w.route
           << "]\n";
    }
    return os.str();
}

std::string csv_header() {
    return "p,q,r,class,det,signature,alg_slice,ribbon_form,verdict,witness_d,witness_chi,witness_k,sigma,bound";
}

std::string ribbon_token(RibbonFamily f) {
    switch (f) {
        case RibbonFamily::OddPQMinusQ: return "p_q_-q";
        case RibbonFamily::OddOneQMinusQMinus4: return "1_q_-q-4";
        case RibbonFamily::EvenPQMinusQ: return "even_p_q_-q";
        case RibbonFamily::TwoBridgeOddPQMinusQ: return "twobridge_p_q_-q";
        case RibbonFamily::TwoBridgeOneQMinusQMinus4: return "twobridge_1_q_-q-4";
    }
    return "?";
}

CsvRow csv_row(const ScanRecord& rec) {
    CsvRow row;
    row.p = rec.knot.p;
    row.q = rec.knot.q;
    row.r = rec.knot.r;
    row.cls = to_string(rec.cls);
    row.det = rec.invariants.determinant.get_str();
    if (rec.invariants.signature) row.signature = std::to_string(*rec.invariants.signature);
    if (rec.invariants.is_alg_slice) row.alg_slice = *rec.invariants.is_alg_slice ? "true" : "false";
    if (rec.verdict.ribbon) row.ribbon_form = ribbon_token(rec.verdict.ribbon->family);
    row.verdict = to_string(rec.verdict.status);
    if (!rec.verdict.witnesses.empty()) {
        const Witness& w = rec.verdict.witnesses.front();
        row.witness_d = std::to_string(w.chi.modulus);
        row.witness_chi = to_string(w.chi, ':');
        row.witness_k = std::to_string(w.k);
        row.sigma = format_rational(w.sigma);
        row.bound = std::to_string(w.bound);
    }
    return row;
}

std::string format_csv(const CsvRow& r) {
    std::ostringstream os;
    os << r.p << ',' << r.q << ',' << r.r << ',' << r.cls << ',' << r.det << ',' << r.signature << ',' << r.alg_slice
       << ',' << r.ribbon_form << ',' << r.verdict << ',' << r.witness_d << ',' << r.witness_chi << ','
       << r.witness_k << ',' << r.sigma << ',' << r.bound;
    return os.str();
}

CsvRow parse_csv(const std::string& line) {
    std::vector<std::string> f;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            f.push_back(cur);
            cur.clear();
        } else if (c != '\n' && c != '\r') {
            cur += c;
        }
    }
    f.push_back(cur);
    if (f.size() != 14) throw std::invalid_argument("expected 14 CSV fields, got " + std::to_string(f.size()));
    CsvRow r;
    try {
        r.p = std::stol(f[0]);
        r.q = std::stol(f[1]);
        r.r = std::stol(f[2]);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad knot parameters in CSV row");
    }
    r.cls = f[3];
    r.det = f[4];
    r.signature = f[5];
    r.alg_slice = f[6];
    r.ribbon_form = f[7];
    r.verdict = f[8];
    r.witness_d = f[9];
    r.witness_chi = f[10];
    r.witness_k = f[11];
    r.sigma = f[12];
    r.bound = f[13];
    return r;
}

}  // namespace pk
