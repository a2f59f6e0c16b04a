#include "pk/pretzel.hpp"

#include "pk/errors.hpp"
#include "pk/signature.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace pk {

namespace {

bool is_odd(long x) { return x % 2 != 0; }

// All orderings of the parameters, optionally reflected.
template <class Fn>
bool for_each_arrangement(const PretzelKnot& k, Fn&& fn) {
    std::array<long, 3> v = k.params();
    std::sort(v.begin(), v.end());
    for (int sign : {1, -1}) {
        std::array<long, 3> w = v;
        if (sign < 0) {
            for (auto& x : w) x = -x;
            std::sort(w.begin(), w.end());
        }
        do {
            if (fn(w[0], w[1], w[2], sign < 0)) return true;
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return false;
}

}  // namespace

std::string to_string(KnotClass c) {
    switch (c) {
        case KnotClass::Odd: return "odd";
        case KnotClass::Even: return "even";
        case KnotClass::NotAKnot: return "not_a_knot";
    }
    return "?";
}

std::string to_string(const PretzelKnot& k) {
    std::ostringstream os;
    os << "P(" << k.p << "," << k.q << "," << k.r << ")";
    return os.str();
}

KnotClass classify(long p, long q, long r) {
    const int evens = !is_odd(p) + !is_odd(q) + !is_odd(r);
    if (evens == 0) return KnotClass::Odd;
    if (evens == 1) return KnotClass::Even;
    return KnotClass::NotAKnot;
}

IntMatrix seifert_matrix(const PretzelKnot& k) {
    if (classify(k) != KnotClass::Odd) throw InvalidKnot("Seifert matrix is only provided for odd pretzel knots");
    return IntMatrix{{BigInt((k.p + k.q) / 2), BigInt((k.q + 1) / 2)},
                     {BigInt((k.q - 1) / 2), BigInt((k.q + k.r) / 2)}};
}

IntMatrix montesinos_matrix(const PretzelKnot& k) {
    return IntMatrix{{0, 1, 1, 1}, {1, BigInt(k.p), 0, 0}, {1, 0, BigInt(k.q), 0}, {1, 0, 0, BigInt(k.r)}};
}

BigInt determinant(const PretzelKnot& k) {
    const KnotClass c = classify(k);
    if (c == KnotClass::NotAKnot) throw InvalidKnot(to_string(k) + " is not a knot");
    BigInt formula = abs(BigInt(k.p) * k.q + BigInt(k.q) * k.r + BigInt(k.p) * k.r);
    if (c == KnotClass::Even) {
        BigInt via_presentation = abs(pk::determinant(montesinos_matrix(k)));
        if (via_presentation != formula) throw RouteDisagreement("even determinant mismatch");
    }
    return formula;
}

IntPoly normalize_alexander(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    std::size_t lo = 0;
    while (lo < p.size() && p[lo] == 0) ++lo;
    p.erase(p.begin(), p.begin() + static_cast<long>(lo));
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

std::string to_string(const IntPoly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const BigInt& c = p[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        if (mag != 1 || i == 0) os << mag;
        if (i >= 1) os << "t";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

IntPoly alexander_polynomial(const PretzelKnot& k) {
    const IntMatrix v = seifert_matrix(k);
    const BigInt &a = v(0, 0), &b = v(0, 1), &c = v(1, 0), &d = v(1, 1);
    // det(V - t V^T) for a 2x2 Seifert matrix.
    IntPoly poly{a * d - b * c, -2 * a * d + b * b + c * c, a * d - b * c};
    return normalize_alexander(poly);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) *root = sqrt(n);
    return true;
}

FoxMilnor fox_milnor(const IntPoly& p) {
    FoxMilnor fm;
    if (p.size() == 1) {
        fm.passes = p[0] == 1;
        fm.m = 1;
        fm.n = 0;
        return fm;
    }
    if (p.size() != 3 || p[0] != p[2]) return fm;
    // (m t - n)(n t - m) = mn t^2 - (m^2 + n^2) t + mn.
    const BigInt A = p[2], B = p[1];
    BigInt s, t;
    if (!is_perfect_square(2 * A - B, &s) || !is_perfect_square(-B - 2 * A, &t)) return fm;
    if ((s + t) % 2 != 0) return fm;
    fm.m = (s + t) / 2;
    fm.n = (s - t) / 2;
    fm.passes = fm.m * fm.n == A;
    return fm;
}

ClassicalInvariants classical(const PretzelKnot& k) {
    ClassicalInvariants ci;
    ci.determinant = determinant(k);
    ci.determinant_square = is_perfect_square(ci.determinant);
    if (classify(k) != KnotClass::Odd) {
        ci.reason = "signature and Alexander polynomial unavailable for the even class";
        return ci;
    }
    const IntMatrix v = seifert_matrix(k);
    ci.signature = symmetric_signature(v + v.transpose());
    ci.alexander = alexander_polynomial(k);
    ci.fox_milnor = fox_milnor(*ci.alexander);
    if (*ci.signature != 0) {
        ci.is_alg_slice = false;
        ci.reason = "nonzero signature";
    } else if (!ci.fox_milnor->passes) {
        ci.is_alg_slice = false;
        ci.reason = "Fox-Milnor condition fails";
    } else {
        ci.is_alg_slice = true;
        ci.reason = "signature zero and Fox-Milnor factorization exists";
    }
    return ci;
}

std::optional<TwoBridge> twobridge_fraction(const PretzelKnot& k) {
    if (classify(k) == KnotClass::NotAKnot) return std::nullopt;
    std::array<long, 3> v = k.params();
    for (int i = 0; i < 3; ++i) {
        const long e = v[i];
        if (e != 1 && e != -1) continue;
        const long y = v[(i + 1) % 3], z = v[(i + 2) % 3];
        // N(1/y + e + 1/z)
        const long alpha = e * y * z + y + z;
        if (alpha == 0) return std::nullopt;
        const long a = std::abs(alpha);
        return TwoBridge{a, ((e * y + 1) % a + a) % a};
    }
    return std::nullopt;
}

namespace {

long inverse_mod(long b, long m) {
    long r0 = m, r1 = ((b % m) + m) % m, t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
    }
    if (r0 != 1) return -1;
    return ((t0 % m) + m) % m;
}

}  // namespace

bool same_twobridge_up_to_mirror(const TwoBridge& a, const TwoBridge& b) {
    if (a.alpha != b.alpha) return false;
    const long m = a.alpha;
    if (m == 1) return true;
    const long inv = inverse_mod(a.beta, m);
    for (long c : {a.beta, m - a.beta, inv, m - inv})
        if (((c - b.beta) % m + m) % m == 0) return true;
    return false;
}

namespace {

std::optional<RibbonForm> twobridge_ribbon(const PretzelKnot& k) {
    auto t = twobridge_fraction(k);
    if (!t) return std::nullopt;
    BigInt root;
    if (!is_perfect_square(BigInt(t->alpha), &root)) return std::nullopt;
    const long m = root.get_si();
    if (m < 3 || m % 2 == 0) return std::nullopt;
    if (same_twobridge_up_to_mirror(*t, *twobridge_fraction({1, m, -m})))
        return RibbonForm{RibbonFamily::TwoBridgeOddPQMinusQ, 1, m};
    if (m - 2 >= 1 && same_twobridge_up_to_mirror(*t, *twobridge_fraction({1, m - 2, -m - 2})))
        return RibbonForm{RibbonFamily::TwoBridgeOneQMinusQMinus4, 1, m - 2};
    return std::nullopt;
}

}  // namespace

std::string RibbonForm::label() const {
    switch (family) {
        case RibbonFamily::OddPQMinusQ: return "P(p,q,-q)";
        case RibbonFamily::OddOneQMinusQMinus4: return "P(1,q,-q-4)";
        case RibbonFamily::EvenPQMinusQ: return "P(p,q,-q) p even";
        case RibbonFamily::TwoBridgeOddPQMinusQ: return "two-bridge, equal to P(p,q,-q)";
        case RibbonFamily::TwoBridgeOneQMinusQMinus4: return "two-bridge, equal to P(1,q,-q-4)";
    }
    return "?";
}

std::optional<RibbonForm> ribbon_form(const PretzelKnot& k) {
    const KnotClass c = classify(k);
    if (c == KnotClass::NotAKnot) return std::nullopt;
    std::optional<RibbonForm> out;
    if (c == KnotClass::Odd) {
        for_each_arrangement(k, [&](long x, long y, long z, bool) {
            if (y > 0 && z == -y) {
                out = RibbonForm{RibbonFamily::OddPQMinusQ, x, y};
                return true;
            }
            return false;
        });
        if (out) return out;
        for_each_arrangement(k, [&](long x, long y, long z, bool) {
            if (x == 1 && y > 0 && z == -y - 4) {
                out = RibbonForm{RibbonFamily::OddOneQMinusQMinus4, 1, y};
                return true;
            }
            return false;
        });
        if (out) return out;
        return twobridge_ribbon(k);
    }
    for_each_arrangement(k, [&](long x, long y, long z, bool) {
        if (!is_odd(x) && y > 0 && z == -y) {
            out = RibbonForm{RibbonFamily::EvenPQMinusQ, x, y};
            return true;
        }
        return false;
    });
    if (out) return out;
    return twobridge_ribbon(k);
}

std::optional<LecuonaMatch> lecuona_family(const PretzelKnot& k) {
    if (classify(k) != KnotClass::Even) return std::nullopt;
    std::optional<LecuonaMatch> out;
    for_each_arrangement(k, [&](long x, long y, long z, bool) {
        if (x > 0 && is_odd(x) && y == -x - 2 && z == -((x + 1) * (x + 1)) / 2) {
            const long res = x % 60;
            const bool unresolved = res == 1 || res == 11 || res == 37 || res == 47 || res == 59;
            out = LecuonaMatch{x, res, unresolved};
            return true;
        }
        return false;
    });
    return out;
}

PretzelKnot twobridge_to_pretzel(long a, long b) {
    if (a <= 0 || b <= 0) throw std::invalid_argument("two-bridge parameters must be positive");
    return {1, 2 * a - 1, -(2 * b + 1)};
}

std::optional<EvenCandidateForm> even_candidate_form(const PretzelKnot& k) {
    if (classify(k) != KnotClass::Even) return std::nullopt;
    std::array<long, 3> v = k.params();
    long e = 0;
    std::vector<long> odd;
    for (long x : v) {
        if (is_odd(x))
            odd.push_back(x);
        else
            e = x;
    }
    if (odd[0] + odd[1] == 2) return EvenCandidateForm{-std::min(odd[0], odd[1]), e};
    if (odd[0] + odd[1] == -2) return EvenCandidateForm{-std::min(-odd[0], -odd[1]), -e};
    return std::nullopt;
}

bool in_jabuka_family(const PretzelKnot& k) {
    auto f = even_candidate_form(k);
    if (!f) return false;
    const BigInt s = f->signed_determinant();
    return s > 0 && is_perfect_square(s);
}

NormalForm normal_form(const PretzelKnot& k) {
    NormalForm nf;
    const KnotClass c = classify(k);
    std::array<long, 3> v = k.params();
    if (c == KnotClass::Even) {
        if (auto f = even_candidate_form(k)) {
            nf.knot = f->knot();
            long odd_sum = 0;
            for (long x : v)
                if (is_odd(x)) odd_sum += x;
            nf.reflected = odd_sum == -2;
            return nf;
        }
        auto order = [](std::array<long, 3>& w) {
            std::sort(w.begin(), w.end(), [](long x, long y) {
                if (std::labs(x) != std::labs(y)) return std::labs(x) > std::labs(y);
                return x > y;
            });
        };
        order(v);
        if (v[0] < 0) {
            for (auto& x : v) x = -x;
            order(v);
            nf.reflected = true;
        }
        nf.knot = {v[0], v[1], v[2]};
        return nf;
    }
    const int positives = (v[0] > 0) + (v[1] > 0) + (v[2] > 0);
    if (positives < 2) {
        for (auto& x : v) x = -x;
        nf.reflected = true;
    }
    std::sort(v.begin(), v.end());
    if (v[0] < 0)
        nf.knot = {v[1], v[2], v[0]};
    else
        nf.knot = {v[0], v[1], v[2]};
    return nf;
}

bool odd_nontrivial(const PretzelKnot& k) {
    auto v = k.params();
    const bool plus = std::count(v.begin(), v.end(), 1L) > 0;
    const bool minus = std::count(v.begin(), v.end(), -1L) > 0;
    return !(plus && minus);
}

}  // namespace pk
