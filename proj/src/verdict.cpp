#include "pk/verdict.hpp"

#include "pk/errors.hpp"

#include <omp.h>

#include <exception>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

namespace pk {

std::string to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::RibbonSlice: return "ribbon";
        case VerdictStatus::FreedmanSlice: return "freedman_slice";
        case VerdictStatus::NotAlgSlice: return "not_alg_slice";
        case VerdictStatus::CGObstructed: return "cg_obstructed";
        case VerdictStatus::LecuonaExceptional: return "lecuona_exceptional";
        case VerdictStatus::Inconclusive: return "inconclusive";
        case VerdictStatus::NotAttempted: return "not_attempted";
    }
    return "?";
}

std::optional<VerdictStatus> parse_status(const std::string& s) {
    for (auto v : {VerdictStatus::RibbonSlice, VerdictStatus::FreedmanSlice, VerdictStatus::NotAlgSlice,
                   VerdictStatus::CGObstructed, VerdictStatus::LecuonaExceptional, VerdictStatus::Inconclusive,
                   VerdictStatus::NotAttempted})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

std::string case_dispatch(const PretzelKnot& k, long d) {
    const KnotClass c = classify(k);
    if (c == KnotClass::Even) {
        auto f = even_candidate_form(k);
        if (!f) return "EvenNonCandidate";
        auto m = [d](long x) { return lift(x, d); };
        const long a = m(-f->p), b = m(f->p + 2), q = m(f->q);
        if (a == 0 && q == 0) return "EvenCase1";
        if (b == 0 && q == 0) return "EvenCase2";
        if (a == m(2 * f->q) && a != 0) return "EvenCase3";
        if (b == m(2 * f->q) && b != 0) return "EvenCase4";
        if (a == b && a != 0) return "EvenCase5";
        if (a != 0 && b != 0 && q != 0 && a != b && a != q && b != q) return "EvenCase6";
        return "EvenOther";
    }
    if (c != KnotClass::Odd) return "NotAKnot";
    const PretzelKnot n = normal_form(k).knot;
    if (!(n.p > 0 && n.q > 0 && n.r < 0)) return "NotApplicable";
    const bool dp = n.p % d == 0, dq = n.q % d == 0, dr = n.r % d == 0;
    if (dp && dq && dr) return "Case3";
    if (dp && dq) return "Case1";
    if (dr && (dp != dq)) return "Case2";
    if (!dp && !dq && !dr) {
        if ((n.p - n.q) % d != 0) return n.r == -(4 * n.p + n.q) ? "Case5" : "Case4";
        return d == 3 ? "PowerOf3" : "Case6";
    }
    return "Unclassified";
}

bool power_of_three_trigger(const PretzelKnot& n, const BigInt& D) {
    if (D < 9) return false;
    BigInt t = D;
    while (t % 3 == 0) t /= 3;
    if (t != 1) return false;
    if (classify(n) == KnotClass::Odd)
        return std::gcd(n.p, n.q) == 1 && std::gcd(n.q, n.r) == 1 && std::gcd(n.p, n.r) == 1 &&
               (n.p - n.q) % 3 == 0;
    return n.p % 3 != 0 || n.q % 3 != 0 || n.r % 3 != 0;
}

namespace {

struct CharacterOutcome {
    bool evaluated = false;
    std::optional<Witness> violation;
    std::size_t unevaluated = 0;
};

CharacterOutcome examine(const PretzelKnot& n, const Character& chi, const AnalyzeOptions& opt) {
    CharacterOutcome out;
    out.evaluated = true;
    long dim = 0;
    try {
        dim = cover_h1_dim(n, chi, opt.cover);
    } catch (const CaseMismatch&) {
        out.unevaluated = static_cast<std::size_t>(chi.modulus - 1);
        return out;
    }
    const long bound = dim + 1;
    for (long k = 1; k < chi.modulus; ++k) {
        auto s = evaluate_sigma(n, chi, k);
        if (!s) {
            ++out.unevaluated;
            continue;
        }
        if (abs(s->value) > bound) {
            out.violation = Witness{0, 0, chi, k, s->value, bound, s->route};
            return out;
        }
    }
    return out;
}

}  // namespace

Verdict analyze(const PretzelKnot& k, const AnalyzeOptions& opt) {
    const KnotClass cls = classify(k);
    if (cls == KnotClass::NotAKnot) throw InvalidKnot(to_string(k) + " is not a knot");
    const PretzelKnot n = normal_form(k).knot;
    Verdict v;

    if (auto rf = ribbon_form(n)) {
        v.status = VerdictStatus::RibbonSlice;
        v.ribbon = rf;
        v.reason = rf->label();
        return v;
    }
    const ClassicalInvariants ci = classical(n);
    if (cls == KnotClass::Odd) {
        if (ci.alexander && *ci.alexander == IntPoly{1}) {
            v.status = VerdictStatus::FreedmanSlice;
            v.reason = "trivial Alexander polynomial";
            v.annotation = odd_nontrivial(n) ? "nontrivial knot with trivial Alexander polynomial: not smoothly slice"
                                             : "unknot";
            return v;
        }
        if (*ci.signature != 0 || !ci.determinant_square || !ci.fox_milnor->passes) {
            v.status = VerdictStatus::NotAlgSlice;
            v.reason = *ci.signature != 0      ? "nonzero signature"
                       : !ci.determinant_square ? "determinant is not a perfect square"
                                                : "Fox-Milnor condition fails";
            return v;
        }
    } else {
        if (!ci.determinant_square) {
            v.status = VerdictStatus::NotAlgSlice;
            v.reason = "determinant is not a perfect square";
            return v;
        }
        if (!in_jabuka_family(n)) {
            v.status = VerdictStatus::NotAlgSlice;
            v.reason = "outside the candidate family P(-p,p+2,q) with 2q-p^2-2p a positive square";
            return v;
        }
        if (auto lm = lecuona_family(n)) {
            v.status = VerdictStatus::LecuonaExceptional;
            v.lecuona = lm;
            v.reason = lm->disposition();
            return v;
        }
    }

    BigInt D;
    is_perfect_square(ci.determinant, &D);
    const std::vector<long> primes = prime_factors(D);
    for (long d : primes) v.case_trace[d] = case_dispatch(n, d);
    if (primes.empty()) {
        v.status = VerdictStatus::Inconclusive;
        v.reason = "determinant one: no prime-power characters";
        return v;
    }

    const SurgeryPresentation pres = montesinos_presentation(n);
    const FiniteAbelianGroup g = homology(pres);
    if (g.order() > opt.metabolizer.max_group_order) {
        v.status = VerdictStatus::NotAttempted;
        v.reason = "first homology exceeds the metabolizer enumeration cap";
        return v;
    }
    const LinkingForm lf = linking_form(pres);

    for (long d : primes) {
        PrimeSearch ps;
        ps.prime = d;
        ps.case_label = v.case_trace[d];
        ps.moduli.push_back(d);
        const std::vector<Metabolizer> metas = primary_metabolizers(g, lf, d, opt.metabolizer);
        if (metas.empty()) {
            v.status = VerdictStatus::NotAlgSlice;
            v.reason = "linking form has no metabolizer on the " + std::to_string(d) + "-primary part";
            v.search.push_back(ps);
            return v;
        }
        ps.metabolizers = metas.size();
        std::vector<std::optional<Witness>> kill(metas.size());

        auto run = [&](long modulus) {
            std::vector<Character> chars;
            for (auto& c : characters(pres, modulus))
                if (order_of(c) == modulus) chars.push_back(std::move(c));
            ps.characters += chars.size();
            std::vector<CharacterOutcome> cache(chars.size());
            for (std::size_t mi = 0; mi < metas.size(); ++mi) {
                if (kill[mi]) continue;
                for (std::size_t ci2 = 0; ci2 < chars.size(); ++ci2) {
                    if (!vanishes_on(g, chars[ci2], metas[mi])) continue;
                    if (!cache[ci2].evaluated) {
                        cache[ci2] = examine(n, chars[ci2], opt);
                        ps.unevaluated += cache[ci2].unevaluated;
                    }
                    if (cache[ci2].violation) {
                        Witness w = *cache[ci2].violation;
                        w.prime = d;
                        w.metabolizer_id = mi;
                        kill[mi] = w;
                        break;
                    }
                }
            }
        };
        run(d);
        const auto all_killed = [&] {
            for (auto& w : kill)
                if (!w) return false;
            return true;
        };
        if (d == 3 && !all_killed() && opt.max_prime_power >= 9 && power_of_three_trigger(n, D)) {
            ps.moduli.push_back(9);
            run(9);
        }
        for (auto& w : kill) ps.killed += w ? 1 : 0;
        ps.obstructs = all_killed();
        v.search.push_back(ps);
        if (ps.obstructs) {
            v.status = VerdictStatus::CGObstructed;
            for (auto& w : kill) v.witnesses.push_back(*w);
            v.reason = "every metabolizer of the " + std::to_string(d) + "-primary part is killed";
            return v;
        }
    }
    v.status = VerdictStatus::Inconclusive;
    v.reason = "no prime power kills every metabolizer";
    return v;
}

bool reverify(const PretzelKnot& n, const Witness& w) {
    auto s = evaluate_sigma(n, w.chi, w.k);
    if (!s || s->value != w.sigma) return false;
    // Every other route that applies must agree; the link-signature routes only for small orders.
    std::vector<std::function<Rational()>> routes = {
        [&] { return sigma_colored(n, w.chi, w.k).value; },
        [&] { return sigma_closed_form(n, w.chi, w.k).value; },
    };
    if (w.chi.modulus <= 13) {
        for (int piv = 0; piv < 3; ++piv)
            routes.push_back([&, piv] { return sigma_colored_reduced(n, piv, w.chi, w.k).value; });
        routes.push_back([&] { return sigma_satellite(n, w.chi, w.k).value; });
    }
    for (const auto& route : routes) {
        try {
            if (route() != w.sigma) return false;
        } catch (const NonUnitImage&) {
        } catch (const ZeroImage&) {
        } catch (const CaseMismatch&) {
        } catch (const UnsupportedCableShape&) {
        } catch (const IncompatiblePresentation&) {
        } catch (const CapExceeded&) {
        }
    }
    const long bound = cover_h1_dim(n, w.chi) + 1;
    return bound == w.bound && abs(w.sigma) > bound;
}

ScanRecord analyze_record(const PretzelKnot& k, const AnalyzeOptions& opt) {
    ScanRecord rec;
    rec.knot = normal_form(k).knot;
    rec.cls = classify(k);
    rec.invariants = classical(rec.knot);
    rec.verdict = analyze(rec.knot, opt);
    return rec;
}

std::vector<PretzelKnot> enumerate_normal_forms(KnotClass parity, long max_abs) {
    std::set<std::tuple<long, long, long>> seen;
    for (long p = -max_abs; p <= max_abs; ++p)
        for (long q = -max_abs; q <= max_abs; ++q)
            for (long r = -max_abs; r <= max_abs; ++r) {
                if (p == 0 || q == 0 || r == 0) continue;
                if (classify(p, q, r) != parity) continue;
                const PretzelKnot n = normal_form({p, q, r}).knot;
                seen.emplace(n.p, n.q, n.r);
            }
    std::vector<PretzelKnot> out;
    for (auto [p, q, r] : seen) out.push_back({p, q, r});
    return out;
}

std::vector<PretzelKnot> odd_theorem_range(long max_pq, long min_r) {
    std::vector<PretzelKnot> out;
    for (long p = 1; p <= max_pq; p += 2)
        for (long q = p; q <= max_pq; q += 2)
            for (long r = -1; r >= min_r; r -= 2) out.push_back({p, q, r});
    return out;
}

std::vector<PretzelKnot> even_candidate_range(long max_p, long max_q) {
    std::vector<PretzelKnot> out;
    for (long p = -1; p <= max_p; p += 2)
        for (long q = -max_q; q <= max_q; q += 2)
            if (q != 0) out.push_back({-p, p + 2, q});
    return out;
}

std::vector<ScanRecord> scan_serial(const std::vector<PretzelKnot>& knots, const AnalyzeOptions& opt) {
    std::vector<ScanRecord> out;
    out.reserve(knots.size());
    for (const auto& k : knots) out.push_back(analyze_record(k, opt));
    return out;
}

std::vector<ScanRecord> scan_parallel(const std::vector<PretzelKnot>& knots, const AnalyzeOptions& opt, int jobs) {
    std::vector<ScanRecord> out(knots.size());
    std::vector<std::exception_ptr> errors(knots.size());
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const long n = static_cast<long>(knots.size());
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i) {
        try {
            out[i] = analyze_record(knots[i], opt);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace pk
