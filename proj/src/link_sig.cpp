#include "pk/link_sig.hpp"

#include "pk/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace pk {

void append_full_twists(Braid& b, int lo, int hi, long t) {
    if (t == 0 || hi <= lo) return;
    const int e = t > 0 ? 1 : -1;
    const long reps = std::labs(t) * (hi - lo + 1);
    for (long r = 0; r < reps; ++r)
        for (int i = lo; i < hi; ++i) b.word.push_back(e * i);
}

namespace {

struct LoopGen {
    int column;
    std::size_t a1, a2;
    int e1, e2;
};

}  // namespace

IntMatrix closed_braid_seifert(const Braid& b) {
    std::vector<std::vector<std::pair<std::size_t, int>>> cols(std::max(b.strands, 1));
    for (std::size_t pos = 0; pos < b.word.size(); ++pos) {
        const int g = b.word[pos];
        const int i = std::abs(g);
        if (i < 1 || i >= b.strands) throw std::invalid_argument("braid generator out of range");
        cols[i].emplace_back(pos, g > 0 ? 1 : -1);
    }
    std::vector<LoopGen> gens;
    for (int i = 1; i < b.strands; ++i)
        for (std::size_t s = 0; s + 1 < cols[i].size(); ++s)
            gens.push_back({i, cols[i][s].first, cols[i][s + 1].first, cols[i][s].second, cols[i][s + 1].second});
    // Position order keeps the matrix banded, which the elimination relies on.
    std::sort(gens.begin(), gens.end(), [](const LoopGen& x, const LoopGen& y) { return x.a1 < y.a1; });

    std::vector<std::vector<std::size_t>> by_col(b.strands + 1);
    for (std::size_t x = 0; x < gens.size(); ++x) by_col[gens[x].column].push_back(x);

    const std::size_t n = gens.size();
    IntMatrix v(n, n);
    for (std::size_t x = 0; x < n; ++x) {
        const auto& g = gens[x];
        v(x, x) = -(g.e1 + g.e2) / 2;
        for (std::size_t y : by_col[g.column]) {
            if (gens[y].a1 != g.a2) continue;
            if (g.e2 > 0)
                v(x, y) = 1;
            else
                v(y, x) = -1;
        }
        if (g.column + 1 < b.strands)
            for (std::size_t y : by_col[g.column + 1]) {
                const auto& h = gens[y];
                if (g.a1 < h.a1 && h.a1 < g.a2 && g.a2 < h.a2) v(x, y) = 1;
                if (h.a1 < g.a1 && g.a1 < h.a2 && h.a2 < g.a2) v(x, y) = -1;
            }
    }
    return v;
}

Braid torus_link_braid(long a, long b) {
    if (a <= 0) throw std::invalid_argument("torus link needs a positive strand count");
    Braid br;
    br.strands = static_cast<int>(a);
    const int e = b > 0 ? 1 : -1;
    for (long r = 0; r < std::labs(b); ++r)
        for (int i = 1; i < a; ++i) br.word.push_back(e * i);
    return br;
}

IntMatrix torus_link_seifert(long a, long b) { return closed_braid_seifert(torus_link_braid(a, b)); }

long litherland_torus_sigma(long j, long k_twist) { return -2 * j * (j - 1) * k_twist; }

namespace {

// Number of l in [1, B-1] with l * den < t, and whether some l has l * den == t.
std::pair<long, long> count_below(long t, long den, long B) {
    if (t <= 0) return {0, 0};
    long below = std::min(B - 1, (t - 1) / den);
    long eq = (t % den == 0 && t / den >= 1 && t / den <= B - 1) ? 1 : 0;
    return {below, eq};
}

}  // namespace

long torus_link_sigma(long a, long b, long d, long k) {
    if (a <= 0 || d <= 0) throw std::invalid_argument("torus_link_sigma: bad arguments");
    k %= d;
    if (k < 0) k += d;
    if (k == 0 || a == 1 || b == 0) return 0;
    const long B = std::labs(b);
    const long den = a * d;
    long total = 0;
    for (long i = 1; i < a; ++i) {
        auto [lt, eq0] = count_below(B * (k * a - i * d), den, B);
        auto [le1, eq1] = count_below(B * ((k + d) * a - i * d), den, B);
        const long between = le1 - lt - eq0;
        const long above = (B - 1) - le1 - eq1;
        total += lt + above - between;
    }
    return b > 0 ? total : -total;
}

Braid torus_link2_cable_braid(long m1, long m2, long lambda1, long lambda2, long P) {
    Braid br;
    const long n = m1 + m2;
    br.strands = static_cast<int>(n);
    append_full_twists(br, 1, static_cast<int>(n), P);
    append_full_twists(br, 1, static_cast<int>(m1), lambda1 - P);
    append_full_twists(br, static_cast<int>(m1 + 1), static_cast<int>(n), lambda2 - P);
    return br;
}

long satellite_sigma(const SatelliteLink& link, long d, long k, const SatelliteOptions& opt) {
    if (link.model == LinkModelKind::HopfChain) {
        if (link.cables.size() != 4) throw UnsupportedCableShape("Hopf-chain model needs four cables");
        const CableSpec& c0 = link.cables[0];
        if (!c0.antiparallel_pair() || c0.lambda != 0)
            throw UnsupportedCableShape("central component must carry a 0-framed antiparallel pair");
        long total = 0;
        for (std::size_t i = 1; i < 4; ++i) {
            const CableSpec& c = link.cables[i];
            if (!c.coherent()) throw UnsupportedCableShape("meridional components must be coherent cables");
            const long a = c.n_plus;
            if ((a * k) % d == 0 && a > 1)
                throw UnsupportedCableShape("torus factor degenerates at this root of unity");
            if (opt.torus_pieces_by_seifert)
                total += hermitian_signature_at_root(torus_link_seifert(a, c.lambda * a), d, k);
            else
                total += torus_link_sigma(a, c.lambda * a, d, k);
        }
        return total;
    }

    if (link.cables.size() != 2) throw UnsupportedCableShape("two-component model needs two cables");
    const CableSpec& c1 = link.cables[0];
    const CableSpec& c2 = link.cables[1];
    const bool lone1 = c1.n_plus + c1.n_minus == 1, lone2 = c2.n_plus + c2.n_minus == 1;
    if (lone1 && lone2 && c1.net() == -c2.net()) {
        // The two strands bound an annulus with Seifert matrix [P].
        const long P = link.mutual_linking;
        return P > 0 ? 1 : (P < 0 ? -1 : 0);
    }
    if (c1.coherent() && c2.coherent()) {
        const long n = c1.n_plus + c2.n_plus;
        const long crossings = std::labs(link.mutual_linking) * n * (n - 1) +
                               std::labs(c1.lambda - link.mutual_linking) * c1.n_plus * (c1.n_plus - 1) +
                               std::labs(c2.lambda - link.mutual_linking) * c2.n_plus * (c2.n_plus - 1);
        if (static_cast<std::size_t>(crossings) > opt.max_crossings)
            throw CapExceeded("coherent cable braid exceeds the crossing cap");
        Braid br = torus_link2_cable_braid(c1.n_plus, c2.n_plus, c1.lambda, c2.lambda, link.mutual_linking);
        return hermitian_signature_at_root(closed_braid_seifert(br), d, k);
    }
    throw UnsupportedCableShape("cable shape has no recipe on the two-component model");
}

ColoredTorusData colored_torus_matrix(long f) {
    ColoredTorusData out;
    out.f = f;
    const std::size_t n = f == 0 ? 0 : static_cast<std::size_t>(std::labs(f) - 1);
    IntMatrix pp(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        pp(i, i) = -1;
        if (i + 1 < n) pp(i, i + 1) = 1;
    }
    IntMatrix zero(n, n);
    IntMatrix mm = pp.transpose();
    if (f < 0) {
        // Mirror: A^e -> -(A^e)^T.
        IntMatrix npp = mm, nmm = pp;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                npp(i, j) = -npp(i, j);
                nmm(i, j) = -nmm(i, j);
            }
        pp = npp;
        mm = nmm;
    }
    out.pp = pp;
    out.mm = mm;
    out.pm = zero;
    out.mp = zero;
    return out;
}

CycloHermitian colored_torus_form(long f, long d, long m1, long m2) {
    const ColoredTorusData data = colored_torus_matrix(f);
    const CyclotomicField field(d);
    const std::size_t n = data.pp.rows();
    // (1 - conj(w1)^e1)(1 - conj(w2)^e2) for each sign pair.
    auto coeff = [&](int e1, int e2) {
        auto t1 = field.sub(field.one(), field.root_power(-e1 * m1));
        auto t2 = field.sub(field.one(), field.root_power(-e2 * m2));
        return field.mul(t1, t2);
    };
    const auto cpp = coeff(1, 1), cpm = coeff(1, -1), cmp = coeff(-1, 1), cmm = coeff(-1, -1);
    CycloHermitian h;
    h.order = d;
    h.size = n;
    h.entries.assign(n * n, field.zero());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            auto e = field.scale(cpp, Rational(data.pp(i, j)));
            e = field.add(e, field.scale(cpm, Rational(data.pm(i, j))));
            e = field.add(e, field.scale(cmp, Rational(data.mp(i, j))));
            e = field.add(e, field.scale(cmm, Rational(data.mm(i, j))));
            h.at(i, j) = std::move(e);
        }
    return h;
}

long colored_torus_signature(long f, long d, long m1, long m2) {
    if (f == 0) return 0;
    return hermitian_signature(colored_torus_form(f, d, m1, m2));
}

}  // namespace pk
