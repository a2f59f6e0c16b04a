#include "pk/cg.hpp"

#include "pk/errors.hpp"
#include "pk/signature.hpp"

#include <numeric>

namespace pk {

namespace {

bool unit(long x, long m) { return std::gcd(lift(x, m), m) == 1; }

void require_montesinos(const PretzelKnot& k, const Character& chi) {
    if (chi.images.size() != 4) throw InvalidCharacter("expected images (eps, a, b, c) on the Montesinos model");
    if (chi.modulus < 2) throw InvalidCharacter("character modulus must be at least 2");
    if (order_of(chi) != chi.modulus) throw InvalidCharacter("character order must equal its modulus");
    if (!is_valid_character(montesinos_presentation(k), chi))
        throw InvalidCharacter("images do not define a character of H_1");
}

long normalize_index(long kk, long m) {
    const long r = lift(kk, m);
    if (r == 0) throw std::invalid_argument("eigenspace index must be nonzero mod d");
    return r;
}

Rational quad(const IntMatrix& a, const std::vector<long>& m) {
    BigInt s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) s += a(i, j) * m[i] * m[j];
    return Rational(s);
}

Rational branch_weight(long d, long kk) { return make_rational(2 * kk * (d - kk), d * d); }

// sum_{i,j} (d - m_i) m_j a_ij
BigInt colored_correction(const IntMatrix& a, const std::vector<long>& m, long d) {
    BigInt s = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) s += a(i, j) * (d - m[i]) * m[j];
    return s;
}

int zero_count(const Character& chi, int* where) {
    int zeros = 0;
    for (int i = 0; i < 3; ++i)
        if (chi.images[1 + i] == 0) {
            ++zeros;
            if (where) *where = i;
        }
    return zeros;
}

long estimated_crossings(const SurgeryPresentation& red, long m1, long m2) {
    const long P = red.mutual_linking, n = m1 + m2;
    const long x = red.framings[0].get_si() - P, y = red.framings[1].get_si() - P;
    return std::labs(P) * n * (n - 1) + std::labs(x) * m1 * (m1 - 1) + std::labs(y) * m2 * (m2 - 1);
}

}  // namespace

long lift(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

std::string to_string(Route r) {
    switch (r) {
        case Route::Satellite: return "satellite";
        case Route::Colored: return "colored";
        case Route::ClosedForm: return "closed_form";
    }
    return "?";
}

Rational satellite_hopf_chain(const PretzelKnot& k, const std::array<long, 4>& reps, long d, long kk,
                              const SatelliteOptions& opt) {
    if (reps[0] != 0) throw UnsupportedCableShape("central component needs an antiparallel pair (net 0)");
    const auto v = k.params();
    SatelliteLink link;
    link.model = LinkModelKind::HopfChain;
    link.cables.push_back(CableSpec{0, 1, 1});
    for (int i = 0; i < 3; ++i) {
        if (reps[1 + i] <= 0) throw UnsupportedCableShape("meridional cables must be coherent");
        link.cables.push_back(CableSpec{v[i], reps[1 + i], 0});
    }
    const IntMatrix a = montesinos_matrix(k);
    const long sl = satellite_sigma(link, d, kk, opt);
    return Rational(symmetric_signature(a)) - sl -
           branch_weight(d, kk) * quad(a, {reps[0], reps[1], reps[2], reps[3]});
}

Rational satellite_two_component(const SurgeryPresentation& red, const std::array<long, 2>& reps, long d, long kk,
                                 const SatelliteOptions& opt) {
    SatelliteLink link;
    link.model = LinkModelKind::TorusLink2;
    link.mutual_linking = red.mutual_linking;
    for (int i = 0; i < 2; ++i) {
        const long lam = red.framings[i].get_si();
        if (reps[i] == -1 && reps[1 - i] == 1)
            link.cables.push_back(CableSpec{lam, 0, 1});
        else if (reps[i] > 0)
            link.cables.push_back(CableSpec{lam, reps[i], 0});
        else
            throw UnsupportedCableShape("two-component cables must be coherent or a lone antiparallel pair");
    }
    const long sl = satellite_sigma(link, d, kk, opt);
    return Rational(symmetric_signature(red.linking)) - sl -
           branch_weight(d, kk) * quad(red.linking, {reps[0], reps[1]});
}

SigmaValue sigma_satellite(const PretzelKnot& k, const Character& chi, long kk, const SigmaOptions& opt) {
    require_montesinos(k, chi);
    const long m = chi.modulus;
    kk = normalize_index(kk, m);
    const auto& im = chi.images;
    SigmaValue out{0, Route::Satellite, kk, chi};
    int z = -1;
    const int zeros = zero_count(chi, &z);

    if (im[0] == 0 && zeros == 0) {
        out.value = satellite_hopf_chain(k, {0, im[1], im[2], im[3]}, m, kk, opt.satellite);
        return out;
    }
    if (zeros == 1) {
        const SurgeryPresentation red = reduced_presentation(k, z);
        const Character rc = reduced_from_montesinos(k, z, chi);
        const long x = rc.images[0];
        if (!unit(x, m)) throw UnsupportedCableShape("antiparallel recipe needs a unit image");
        // chi = x * (1, -1), so sigma_k(chi) = sigma_{kx}((1, -1)).
        out.value = satellite_two_component(red, {1, -1}, m, lift(kk * x, m), opt.satellite);
        return out;
    }
    if (zeros == 0) {
        int pivot = opt.pivot;
        if (pivot < 0) {
            long best = -1;
            for (int p = 0; p < 3; ++p) {
                const SurgeryPresentation red = reduced_presentation(k, p);
                const Character rc = reduced_from_montesinos(k, p, chi);
                const long c = estimated_crossings(red, rc.images[0], rc.images[1]);
                if (best < 0 || c < best) {
                    best = c;
                    pivot = p;
                }
            }
        }
        const SurgeryPresentation red = reduced_presentation(k, pivot);
        const Character rc = reduced_from_montesinos(k, pivot, chi);
        out.value = satellite_two_component(red, {rc.images[0], rc.images[1]}, m, kk, opt.satellite);
        return out;
    }
    throw UnsupportedCableShape("no cable recipe for this character");
}

SigmaValue sigma_colored(const PretzelKnot& k, const Character& chi, long kk) {
    require_montesinos(k, chi);
    const long m = chi.modulus;
    kk = normalize_index(kk, m);
    if (!unit(kk, m)) throw NonUnitImage("colored route evaluates sigma_1(k chi) and needs k to be a unit");
    const Character c = multiple(chi, kk);
    for (long v : c.images)
        if (!unit(v, m)) throw NonUnitImage("colored route needs every meridian image to be a unit");
    const IntMatrix a = montesinos_matrix(k);
    // The colored signature of the Hopf chain vanishes; sum_{i<j} a_ij = 3.
    const BigInt corr = colored_correction(a, c.images, m);
    Rational value = Rational(symmetric_signature(a)) + 3 - make_rational(2 * corr, BigInt(m) * m);
    return SigmaValue{value, Route::Colored, kk, chi};
}

SigmaValue sigma_colored_reduced(const PretzelKnot& k, int pivot, const Character& chi, long kk) {
    require_montesinos(k, chi);
    const long m = chi.modulus;
    kk = normalize_index(kk, m);
    if (!unit(kk, m)) throw NonUnitImage("colored route evaluates sigma_1(k chi) and needs k to be a unit");
    const SurgeryPresentation red = reduced_presentation(k, pivot);
    const Character rc = reduced_from_montesinos(k, pivot, multiple(chi, kk));
    for (long v : rc.images)
        if (!unit(v, m)) throw NonUnitImage("colored route needs every meridian image to be a unit");
    const long P = red.mutual_linking;
    const long cs = colored_torus_signature(P, m, rc.images[0], rc.images[1]);
    const BigInt corr = colored_correction(red.linking, rc.images, m);
    Rational value = Rational(symmetric_signature(red.linking)) - (cs - P) - make_rational(2 * corr, BigInt(m) * m);
    return SigmaValue{value, Route::Colored, kk, chi};
}

FChi f_chi(const PretzelKnot& k, const Character& chi) {
    require_montesinos(k, chi);
    for (long v : chi.images)
        if (v == 0) throw ZeroImage("f(chi) needs all four images nonzero");
    FChi f;
    f.d = chi.modulus;
    f.eps = chi.images[0];
    f.a = chi.images[1];
    f.b = chi.images[2];
    f.c = chi.images[3];
    const BigInt d = f.d, e = f.eps, a = f.a, b = f.b, c = f.c;
    f.value = (d - e) * (a + b + c) + (d - a) * (a * k.p + e) + (d - b) * (b * k.q + e) + (d - c) * (c * k.r + e);
    return f;
}

SigmaValue sigma_fchi(const PretzelKnot& k, const Character& chi) {
    const FChi f = f_chi(k, chi);
    if (symmetric_signature(montesinos_matrix(k)) != 0)
        throw CaseMismatch("3 - 2 f / d^2 presumes a linking matrix of signature zero");
    Rational value = 3 - make_rational(2 * f.value, BigInt(f.d) * f.d);
    return SigmaValue{value, Route::ClosedForm, 1, chi};
}

SigmaValue sigma_closed_form(const PretzelKnot& k, const Character& chi, long kk) {
    require_montesinos(k, chi);
    const long m = chi.modulus;
    kk = normalize_index(kk, m);
    if (!unit(kk, m)) throw CaseMismatch("closed forms are indexed through sigma_1(k chi)");
    const Character c = multiple(chi, kk);
    const auto v = k.params();
    int z = -1;
    const int zeros = zero_count(c, &z);
    SigmaValue out{0, Route::ClosedForm, kk, chi};

    if (c.images[0] == 0 && zeros == 0) {
        if (v[0] % m || v[1] % m || v[2] % m) throw CaseMismatch("full-support form needs d | p, q, r");
        BigInt s = 0;
        for (int i = 0; i < 3; ++i) s += BigInt(c.images[1 + i]) * (m - c.images[1 + i]) * v[i];
        out.value = Rational(symmetric_signature(montesinos_matrix(k))) +
                    kClosedFormSign * make_rational(2 * s, BigInt(m) * m);
        return out;
    }
    if (zeros == 1) {
        const SurgeryPresentation red = reduced_presentation(k, z);
        const long x = reduced_from_montesinos(k, z, c).images[0];
        if (!unit(x, m)) throw CaseMismatch("one-zero form needs unit images");
        const long P = red.mutual_linking;
        const long other = v[red.param_index[0]] + v[red.param_index[1]];
        out.value = Rational(symmetric_signature(red.linking)) - (P > 0 ? 1 : -1) -
                    make_rational(2 * x * (m - x), m * m) * other;
        return out;
    }
    throw CaseMismatch("no closed form covers this character");
}

namespace {

std::optional<SigmaValue> sigma_one_of_multiple(const PretzelKnot& k, const Character& chi, long kk) {
    const long m = chi.modulus;
    if (!unit(kk, m)) return std::nullopt;
    const Character c = multiple(chi, kk);
    bool all_units = true;
    for (long v : c.images) all_units = all_units && unit(v, m);
    if (all_units) return sigma_colored(k, chi, kk);
    try {
        return sigma_closed_form(k, chi, kk);
    } catch (const CaseMismatch&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<SigmaValue> sigma_all_k(const PretzelKnot& k, const Character& chi, const SigmaOptions& opt) {
    require_montesinos(k, chi);
    const long m = chi.modulus;
    std::vector<SigmaValue> out;
    for (long kk = 1; kk < m; ++kk) {
        std::optional<SigmaValue> direct;
        try {
            direct = sigma_satellite(k, chi, kk, opt);
        } catch (const UnsupportedCableShape&) {
        } catch (const CapExceeded&) {
        }
        auto via = sigma_one_of_multiple(k, chi, kk);
        if (direct && via && direct->value != via->value)
            throw RouteDisagreement("sigma_k(chi) differs from sigma_1(k chi) for " + to_string(k));
        if (direct)
            out.push_back(*direct);
        else if (via)
            out.push_back(*via);
        else
            throw UnsupportedCableShape("no route evaluates sigma_k for this character");
    }
    return out;
}

std::optional<SigmaValue> evaluate_sigma(const PretzelKnot& k, const Character& chi, long kk) {
    const long m = chi.modulus;
    kk = lift(kk, m);
    if (kk == 0) return std::nullopt;
    const auto& im = chi.images;
    int z = -1;
    const int zeros = zero_count(chi, &z);
    bool all_units = true;
    for (long v : im) all_units = all_units && unit(v, m);
    if (all_units) {
        if (!unit(kk, m)) return std::nullopt;
        return sigma_colored(k, chi, kk);
    }
    try {
        if (im[0] == 0 && zeros == 0) return sigma_satellite(k, chi, kk);
        if (zeros == 1) return sigma_satellite(k, chi, kk);
    } catch (const UnsupportedCableShape&) {
    }
    if (zeros == 0 && unit(kk, m)) {
        const Character c = multiple(chi, kk);
        for (int pivot = 0; pivot < 3; ++pivot) {
            const Character rc = reduced_from_montesinos(k, pivot, c);
            if (unit(rc.images[0], m) && unit(rc.images[1], m)) return sigma_colored_reduced(k, pivot, chi, kk);
        }
    }
    try {
        return sigma_satellite(k, chi, kk);
    } catch (const UnsupportedCableShape&) {
    } catch (const CapExceeded&) {
    }
    return std::nullopt;
}

}  // namespace pk
