#include "pk/acceptance.hpp"

#include "pk/errors.hpp"
#include "pk/signature.hpp"
#include "pk/verdict.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace pk {

namespace {

template <class Fn>
CriterionResult timed(int id, std::string name, Fn&& fn) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        fn(r);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

// Route not applicable to this (knot, character); anything else propagates.
template <class Fn>
std::optional<Rational> attempt(Fn&& fn) {
    try {
        return fn();
    } catch (const NonUnitImage&) {
    } catch (const ZeroImage&) {
    } catch (const CaseMismatch&) {
    } catch (const UnsupportedCableShape&) {
    } catch (const IncompatiblePresentation&) {
    } catch (const CapExceeded&) {
    }
    return std::nullopt;
}

std::vector<Character> nontrivial_of_order(const SurgeryPresentation& pres, long m) {
    std::vector<Character> out;
    for (auto& c : characters(pres, m))
        if (order_of(c) == m) out.push_back(std::move(c));
    return out;
}

BigInt square_root_det(const PretzelKnot& k) {
    BigInt D = 0;
    if (!is_perfect_square(abs(determinant(k)), &D)) return 0;
    return D;
}

std::vector<PretzelKnot> criterion_one_knots() {
    std::vector<PretzelKnot> out;
    for (const auto& k : odd_theorem_range(33, -121)) {
        const ClassicalInvariants ci = classical(k);
        if (*ci.signature == 0 && ci.determinant_square && ci.determinant > 1) out.push_back(k);
    }
    return out;
}

std::string knot_list(const std::vector<std::string>& v, std::size_t limit = 5) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size() && i < limit; ++i) os << (i ? "; " : "") << v[i];
    if (v.size() > limit) os << "; ... (" << v.size() << " total)";
    return os.str();
}

}  // namespace

CriterionResult criterion_odd_replication(const FixtureOptions& opt) {
    return timed(1, "odd replication", [&](CriterionResult& r) {
        const auto knots = criterion_one_knots();
        const auto t0 = std::chrono::steady_clock::now();
        const auto recs = scan_parallel(knots, {}, opt.jobs);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::map<VerdictStatus, std::size_t> hist;
        std::vector<std::string> bad;
        for (const auto& rec : recs) {
            hist[rec.verdict.status]++;
            const VerdictStatus s = rec.verdict.status;
            if (s != VerdictStatus::RibbonSlice && s != VerdictStatus::CGObstructed)
                bad.push_back(to_string(rec.knot) + " " + to_string(s));
            for (const auto& w : rec.verdict.witnesses)
                if (!reverify(rec.knot, w)) bad.push_back(to_string(rec.knot) + " witness fails re-verification");
        }
        r.pass = bad.empty() && secs < 600;
        std::ostringstream os;
        os << recs.size() << " knots in " << secs << "s;";
        for (auto [s, n] : hist) os << " " << to_string(s) << "=" << n;
        if (!bad.empty()) os << "; failures: " << knot_list(bad);
        r.detail = os.str();
    });
}

CriterionResult criterion_ks_family(const FixtureOptions&) {
    return timed(2, "K_s family", [&](CriterionResult& r) {
        std::size_t checked = 0;
        std::vector<std::string> bad;
        for (long s : {3L, 5L, 7L}) {
            const PretzelKnot k{s * s, s * s, -(s * s + 1) / 2};
            for (const auto& chi : nontrivial_of_order(montesinos_presentation(k), s))
                for (long kk = 1; kk < s; ++kk) {
                    auto v = evaluate_sigma(k, chi, kk);
                    ++checked;
                    if (!v || !(v->value < -1))
                        bad.push_back(to_string(k) + " chi=" + to_string(chi) + " k=" + std::to_string(kk) +
                                      (v ? " sigma=" + v->value.get_str() : " no route"));
                }
        }
        r.pass = bad.empty() && checked > 0;
        r.detail = std::to_string(checked) + " (chi, k) pairs with sigma < -1" +
                   (bad.empty() ? "" : "; failures: " + knot_list(bad));
    });
}

// Coherent braids past this size take seconds each; the other routes still cover those pairs.
constexpr std::size_t kCrossRouteSatelliteCap = 600;

CriterionResult criterion_cross_route(const FixtureOptions&) {
    return timed(3, "cross-route exactness", [&](CriterionResult& r) {
        std::size_t compared = 0, single = 0, over_cap = 0;
        std::vector<std::string> bad;
        SigmaOptions so;
        so.satellite.max_crossings = kCrossRouteSatelliteCap;
        for (const auto& k : enumerate_normal_forms(KnotClass::Odd, 15)) {
            const BigInt D = square_root_det(k);
            if (D <= 1) continue;
            const SurgeryPresentation pres = montesinos_presentation(k);
            for (long d : prime_factors(D)) {
                if (d > 13) continue;
                for (const auto& chi : nontrivial_of_order(pres, d))
                    for (long kk = 1; kk < d; ++kk) {
                        std::vector<std::pair<std::string, Rational>> vals;
                        auto add = [&](const std::string& name, std::optional<Rational> v) {
                            if (v) vals.emplace_back(name, *v);
                        };
                        try {
                            vals.emplace_back("satellite", sigma_satellite(k, chi, kk, so).value);
                        } catch (const CapExceeded&) {
                            ++over_cap;
                        } catch (const NonUnitImage&) {
                        } catch (const ZeroImage&) {
                        } catch (const CaseMismatch&) {
                        } catch (const UnsupportedCableShape&) {
                        }
                        add("colored", attempt([&] { return sigma_colored(k, chi, kk).value; }));
                        for (int piv = 0; piv < 3; ++piv)
                            add("colored-reduced", attempt([&] { return sigma_colored_reduced(k, piv, chi, kk).value; }));
                        add("closed-form", attempt([&] { return sigma_closed_form(k, chi, kk).value; }));
                        if (kk == 1) add("f-form", attempt([&] { return sigma_fchi(k, chi).value; }));
                        if (vals.size() < 2) {
                            ++single;
                            continue;
                        }
                        ++compared;
                        for (const auto& [name, v] : vals)
                            if (v != vals.front().second) {
                                bad.push_back(to_string(k) + " chi=" + to_string(chi) + " k=" + std::to_string(kk) +
                                              " " + vals.front().first + "=" + vals.front().second.get_str() + " " +
                                              name + "=" + v.get_str());
                                break;
                            }
                    }
            }
        }
        r.pass = bad.empty() && compared > 0;
        r.detail = std::to_string(compared) + " (chi, k) pairs with >= 2 routes, " + std::to_string(single) +
                   " with one route, " + std::to_string(over_cap) + " satellite evaluations over the " +
                   std::to_string(kCrossRouteSatelliteCap) + "-crossing braid cap" + (bad.empty() ? "" : "; mismatches: " + knot_list(bad));
    });
}

CriterionResult criterion_litherland(const FixtureOptions& opt) {
    return timed(4, "Litherland oracle", [&](CriterionResult& r) {
        std::size_t checked = 0;
        std::vector<std::string> bad;
        for (long n = 2; n <= 8; ++n)
            for (long j = 1; j < n; ++j)
                for (long k = 1; k <= 4; ++k) {
                    const long expected = -2 * j * (j - 1) * k;
                    const long formula = litherland_torus_sigma(j, k) + opt.litherland_offset;
                    const long seifert = hermitian_signature_at_root(torus_link_seifert(j, j * k * n), n, 1);
                    ++checked;
                    if (seifert != expected || formula != expected)
                        bad.push_back("T(" + std::to_string(j) + "," + std::to_string(j * k * n) + ") at n=" +
                                      std::to_string(n) + ": seifert " + std::to_string(seifert) + ", formula " +
                                      std::to_string(formula) + ", expected " + std::to_string(expected));
                }
        r.pass = bad.empty();
        r.detail = std::to_string(checked) + " torus links" + (bad.empty() ? "" : "; failures: " + knot_list(bad));
    });
}

CriterionResult criterion_divisibility(const FixtureOptions&) {
    return timed(5, "divisibility lemmas", [&](CriterionResult& r) {
        std::size_t f_checked = 0, four_checked = 0;
        std::vector<std::string> bad;
        for (const auto& k : criterion_one_knots()) {
            const SurgeryPresentation pres = montesinos_presentation(k);
            const FiniteAbelianGroup g = homology(pres);
            const LinkingForm lf = linking_form(pres);
            for (long d : prime_factors(square_root_det(k))) {
                const bool none = k.p % d != 0 && k.q % d != 0 && k.r % d != 0;
                const bool all = k.p % d == 0 && k.q % d == 0 && k.r % d == 0;
                if (!none && !all) continue;
                std::vector<Metabolizer> metas;
                if (all) metas = primary_metabolizers(g, lf, d);
                for (const auto& chi : nontrivial_of_order(pres, d)) {
                    const auto& im = chi.images;
                    if (im[1] == 0 || im[2] == 0 || im[3] == 0) continue;
                    const std::string tag = to_string(k) + " chi=" + to_string(chi);
                    if (none) {
                        ++f_checked;
                        const FChi f = f_chi(k, chi);
                        if (f.value % (d * d) != 0) bad.push_back(tag + " f=" + f.value.get_str());
                        continue;
                    }
                    bool vanishes = false;
                    for (const auto& m : metas) vanishes = vanishes || vanishes_on(g, chi, m);
                    if (!vanishes) continue;
                    ++four_checked;
                    auto s = evaluate_sigma(k, chi, 1);
                    if (!s || s->value.get_den() != 1 || s->value.get_num() % 4 != 0)
                        bad.push_back(tag + (s ? " sigma=" + s->value.get_str() : " no route"));
                }
            }
        }
        r.pass = bad.empty() && f_checked > 0 && four_checked > 0;
        r.detail = std::to_string(f_checked) + " f(chi) instances, " + std::to_string(four_checked) +
                   " mod-4 instances" + (bad.empty() ? "" : "; exceptions: " + knot_list(bad));
    });
}

CriterionResult criterion_named_fixtures(const FixtureOptions&) {
    return timed(6, "named fixtures", [&](CriterionResult& r) {
        std::vector<std::string> bad;
        auto expect = [&](const std::string& what, const Rational& got, const Rational& want) {
            if (got != want) bad.push_back(what + ": got " + got.get_str() + ", want " + want.get_str());
        };
        const PretzelKnot a{5, 9, -41};
        const Character chi1 = make_character(23, {18, 1, 21, 1});
        const Character chi2 = multiple(chi1, 2);
        expect("P(5,9,-41) f(chi1)", Rational(f_chi(a, chi1).value), 529);
        expect("P(5,9,-41) sigma_1(chi1)", sigma_colored(a, chi1).value, 1);
        expect("P(5,9,-41) f(2chi1)", Rational(f_chi(a, chi2).value), 0);
        expect("P(5,9,-41) sigma_1(2chi1)", sigma_colored(a, chi2).value, 3);
        if (analyze(a).status != VerdictStatus::CGObstructed) bad.push_back("P(5,9,-41) verdict");

        const PretzelKnot b{9, 9, -5};
        const Character chib = make_character(3, {0, 1, 2, 0});
        for (long kk : {1L, 2L}) expect("P(9,9,-5) sigma_" + std::to_string(kk), sigma_satellite(b, chib, kk).value, -7);

        const PretzelKnot c{21, 35, -119};
        const Character chic = make_character(7, {0, 2, 4, 1});
        expect("P(21,35,-119) |sigma_1| satellite", abs(sigma_satellite(c, chic, 1).value), Rational(24, 7));
        expect("P(21,35,-119) |sigma_1| closed form", abs(sigma_closed_form(c, chic, 1).value), Rational(24, 7));

        const PretzelKnot e{-1, 3, 6};
        const Character chie3 = make_character(3, {0, 0, 1, 2});
        const Character chie9 = make_character(9, {3, 3, 2, 4});
        expect("P(-1,3,6) d=3 sigma_1", sigma_satellite(e, chie3, 1).value, -1);
        expect("P(-1,3,6) d=9 sigma_1", sigma_satellite(e, chie9, 1).value, make_rational(-11, 9));
        auto ev3 = evaluate_sigma(e, chie3, 1);
        auto ev9 = evaluate_sigma(e, chie9, 1);
        if (!ev3 || !ev9) bad.push_back("P(-1,3,6) pipeline route missing");
        else {
            expect("P(-1,3,6) d=3 pipeline", ev3->value, -1);
            expect("P(-1,3,6) d=9 pipeline", ev9->value, make_rational(-11, 9));
        }
        r.pass = bad.empty();
        r.detail = bad.empty() ? "all exact values match" : knot_list(bad, 10);
    });
}

CriterionResult criterion_cover_homology(const FixtureOptions&) {
    return timed(7, "cover homology", [&](CriterionResult& r) {
        std::size_t checked = 0;
        std::vector<std::string> bad;
        for (const auto& k : enumerate_normal_forms(KnotClass::Odd, 21)) {
            const BigInt D = square_root_det(k);
            if (D <= 1) continue;
            const SurgeryPresentation pres = montesinos_presentation(k);
            for (long d : prime_factors(D)) {
                if (d > 7) continue;
                for (const auto& chi : nontrivial_of_order(pres, d)) {
                    ++checked;
                    const long closed = cover_h1_dim_closed_form(k, chi);
                    const long rs = cover_h1_dim_reidemeister_schreier(k, chi);
                    if (closed != rs)
                        bad.push_back(to_string(k) + " chi=" + to_string(chi) + " closed " + std::to_string(closed) +
                                      " vs " + std::to_string(rs));
                }
            }
        }
        r.pass = bad.empty() && checked > 0;
        r.detail = std::to_string(checked) + " characters" + (bad.empty() ? "" : "; mismatches: " + knot_list(bad));
    });
}

CriterionResult criterion_classical(const FixtureOptions&) {
    return timed(8, "classical invariants", [&](CriterionResult& r) {
        std::vector<std::string> bad;
        std::size_t dets = 0;
        for (const auto& k : enumerate_normal_forms(KnotClass::Odd, 25)) {
            ++dets;
            const BigInt want = abs(BigInt(k.p * k.q + k.q * k.r + k.p * k.r));
            if (classical(k).determinant != want) bad.push_back(to_string(k) + " determinant");
        }
        const PretzelKnot fs{-3, 5, 7};
        if (!(classical(fs).alexander == std::optional<IntPoly>(IntPoly{1}))) bad.push_back("P(-3,5,7) Alexander");
        const Verdict vf = analyze(fs);
        if (vf.status != VerdictStatus::FreedmanSlice || vf.annotation.find("not smoothly slice") == std::string::npos)
            bad.push_back("P(-3,5,7) verdict");
        const ClassicalInvariants fm = classical({1, 3, -7});
        const IntPoly want = normalize_alexander({6, -13, 6});  // (2t-3)(3t-2)
        if (!fm.fox_milnor || !fm.fox_milnor->passes || !(fm.alexander == std::optional<IntPoly>(want)))
            bad.push_back("P(1,3,-7) Fox-Milnor");
        const Verdict vs = analyze({3, 5, 7});
        if (vs.status != VerdictStatus::NotAlgSlice || vs.reason != "nonzero signature")
            bad.push_back("P(3,5,7) signature gate");
        r.pass = bad.empty();
        r.detail = std::to_string(dets) + " determinants and 3 named knots" +
                   (bad.empty() ? "" : "; failures: " + knot_list(bad));
    });
}

CriterionResult criterion_even_replication(const FixtureOptions& opt) {
    return timed(9, "even replication", [&](CriterionResult& r) {
        std::vector<PretzelKnot> knots;
        for (const auto& k : even_candidate_range(15, 60)) {
            const ClassicalInvariants ci = classical(k);
            if (ci.determinant_square && ci.determinant > 1) knots.push_back(k);
        }
        const auto recs = scan_parallel(knots, {}, opt.jobs);
        std::map<VerdictStatus, std::size_t> hist;
        std::vector<std::string> bad;
        for (const auto& rec : recs) {
            hist[rec.verdict.status]++;
            const VerdictStatus s = rec.verdict.status;
            if (s != VerdictStatus::RibbonSlice && s != VerdictStatus::CGObstructed) {
                std::ostringstream os;
                os << to_string(rec.knot) << " " << to_string(s) << " (" << rec.verdict.reason << ")";
                for (const auto& ps : rec.verdict.search)
                    os << " d=" << ps.prime << " " << ps.case_label << " metabolizers=" << ps.metabolizers
                       << " characters=" << ps.characters << " killed=" << ps.killed;
                bad.push_back(os.str());
            }
            for (const auto& w : rec.verdict.witnesses)
                if (!reverify(rec.knot, w)) bad.push_back(to_string(rec.knot) + " witness fails re-verification");
        }
        std::size_t lecuona = 0;
        for (long a = 1; a <= 121; a += 2)
            for (bool mirrored : {false, true}) {
                PretzelKnot k{a, -a - 2, -((a + 1) * (a + 1)) / 2};
                if (mirrored) k = k.mirror();
                const Verdict v = analyze(k);
                const long res = a % 60;
                const bool unresolved = res == 1 || res == 11 || res == 37 || res == 47 || res == 59;
                ++lecuona;
                if (v.status != VerdictStatus::LecuonaExceptional || !v.lecuona || v.lecuona->residue != res ||
                    v.lecuona->unresolved != unresolved)
                    bad.push_back(to_string(k) + " Lecuona flag");
            }
        r.pass = bad.empty() && !recs.empty();
        std::ostringstream os;
        os << recs.size() << " candidates;";
        for (auto [s, n] : hist) os << " " << to_string(s) << "=" << n;
        os << "; " << lecuona << " Lecuona members";
        if (!bad.empty()) os << "; counterexamples: " << knot_list(bad, 10);
        r.detail = os.str();
    });
}

CriterionResult criterion_representatives(const FixtureOptions&) {
    return timed(10, "representative independence", [&](CriterionResult& r) {
        std::size_t compared = 0, skipped = 0;
        std::vector<std::string> bad;
        for (const auto& k : enumerate_normal_forms(KnotClass::Odd, 15))
            for (long d : {3L, 5L}) {
                if (determinant(k) % d != 0) continue;
                for (int piv = 0; piv < 3; ++piv) {
                    const SurgeryPresentation red = reduced_presentation(k, piv);
                    for (bool flip : {false, true}) {
                        const Character chi = flip ? make_character(d, {d - 1, 1}) : make_character(d, {1, d - 1});
                        if (!is_valid_character(red, chi)) continue;
                        const std::array<long, 2> anti = flip ? std::array<long, 2>{-1, 1} : std::array<long, 2>{1, -1};
                        const std::array<long, 2> coh = flip ? std::array<long, 2>{d - 1, 1} : std::array<long, 2>{1, d - 1};
                        for (long kk = 1; kk < d; ++kk) {
                            const Rational a = satellite_two_component(red, anti, d, kk);
                            auto c = attempt([&] { return satellite_two_component(red, coh, d, kk); });
                            if (!c) {
                                ++skipped;
                                continue;
                            }
                            ++compared;
                            if (a != *c)
                                bad.push_back(to_string(k) + " pivot " + std::to_string(piv) + " d=" +
                                              std::to_string(d) + " k=" + std::to_string(kk) + ": " + a.get_str() +
                                              " vs " + c->get_str());
                        }
                    }
                }
            }
        r.pass = bad.empty() && compared > 0 && skipped == 0;
        r.detail = std::to_string(compared) + " comparisons, " + std::to_string(skipped) + " over the crossing cap" +
                   (bad.empty() ? "" : "; mismatches: " + knot_list(bad));
    });
}

std::vector<CriterionResult> run_acceptance(const FixtureOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result) {
    using Fn = CriterionResult (*)(const FixtureOptions&);
    const Fn all[] = {criterion_odd_replication, criterion_ks_family,       criterion_cross_route,
                      criterion_litherland,      criterion_divisibility,    criterion_named_fixtures,
                      criterion_cover_homology,  criterion_classical,       criterion_even_replication,
                      criterion_representatives};
    std::vector<CriterionResult> out;
    for (std::size_t i = 0; i < std::size(all); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!opt.only.empty() && std::find(opt.only.begin(), opt.only.end(), id) == opt.only.end()) continue;
        out.push_back(all[i](opt));
        if (on_result) on_result(out.back());
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.pass ? "PASS" : "FAIL") << " criterion " << r.id << " (" << r.name << "): " << r.detail << " ["
       << r.seconds << "s]";
    return os.str();
}

}  // namespace pk
