#include "pk/double_cover.hpp"

#include "pk/errors.hpp"
#include "pk/snf.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace pk {

namespace {

const char* kParamNames[3] = {"p", "q", "r"};

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

long mod(const BigInt& a, long m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r.get_si();
}

BigInt bigmod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

long valuation(BigInt n, long p) {
    long v = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

BigInt power(long p, long e) {
    BigInt r = 1;
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

std::string to_string(PresentationKind k) {
    switch (k) {
        case PresentationKind::Odd4: return "Odd4";
        case PresentationKind::OddReduced2: return "OddReduced2";
        case PresentationKind::Even2: return "Even2";
    }
    return "?";
}

SurgeryPresentation montesinos_presentation(const PretzelKnot& k) {
    if (classify(k) == KnotClass::NotAKnot) throw InvalidKnot(to_string(k) + " is not a knot");
    SurgeryPresentation s;
    s.kind = PresentationKind::Odd4;
    s.knot = k;
    s.linking = montesinos_matrix(k);
    s.labels = {"mu_0", "mu_p", "mu_q", "mu_r"};
    s.framings = {0, k.p, k.q, k.r};
    s.link_model = LinkModelKind::HopfChain;
    s.param_index = {-1, 0, 1, 2};
    return s;
}

SurgeryPresentation reduced_presentation(const PretzelKnot& k, int pivot) {
    if (classify(k) == KnotClass::NotAKnot) throw InvalidKnot(to_string(k) + " is not a knot");
    if (pivot < 0 || pivot > 2) throw std::invalid_argument("pivot must be 0, 1 or 2");
    const auto v = k.params();
    const int o0 = pivot == 0 ? 1 : 0;
    const int o1 = pivot == 2 ? 1 : 2;
    const long P = v[pivot], x = v[o0], y = v[o1];
    SurgeryPresentation s;
    s.kind = PresentationKind::OddReduced2;
    s.knot = k;
    s.linking = IntMatrix{{BigInt(x + P), BigInt(P)}, {BigInt(P), BigInt(y + P)}};
    s.labels = {std::string("mu_") + kParamNames[o0], std::string("mu_") + kParamNames[o1]};
    s.framings = {x + P, y + P};
    s.link_model = LinkModelKind::TorusLink2;
    s.mutual_linking = P;
    s.pivot = pivot;
    s.param_index = {o0, o1};
    return s;
}

SurgeryPresentation presentation(const PretzelKnot& k, PresentationKind kind) {
    const KnotClass c = classify(k);
    switch (kind) {
        case PresentationKind::Odd4:
            if (c != KnotClass::Odd) throw IncompatiblePresentation("Odd4 needs an odd knot");
            return montesinos_presentation(k);
        case PresentationKind::OddReduced2:
            if (c != KnotClass::Odd) throw IncompatiblePresentation("OddReduced2 needs an odd knot");
            return reduced_presentation(k, 2);
        case PresentationKind::Even2: {
            if (c != KnotClass::Even || k.p % 2 == 0 || k.p + k.q != 2)
                throw IncompatiblePresentation("Even2 needs a knot written as P(-p, p+2, q)");
            SurgeryPresentation s = reduced_presentation(k, 0);
            s.kind = PresentationKind::Even2;
            s.labels = {"mu_1", "mu_2"};
            return s;
        }
    }
    throw IncompatiblePresentation("unknown presentation kind");
}

BigInt FiniteAbelianGroup::order() const {
    BigInt o = 1;
    for (const auto& f : factors) o *= f;
    return o;
}

std::vector<BigInt> FiniteAbelianGroup::reduce(std::vector<BigInt> coords) const {
    for (std::size_t i = 0; i < factors.size(); ++i) coords[i] = bigmod(coords[i], factors[i]);
    return coords;
}

std::vector<BigInt> FiniteAbelianGroup::coordinates_of_meridians(const std::vector<BigInt>& v) const {
    std::vector<BigInt> c(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) c[i] += to_invariant(i, j) * v[j];
    return reduce(c);
}

FiniteAbelianGroup homology(const SurgeryPresentation& pres) {
    const SnfResult snf = smith_normal_form(pres.linking);
    const std::size_t n = pres.linking.rows();
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < snf.diag.size(); ++i) {
        if (snf.diag[i] == 0) throw SingularMatrix("linking matrix is singular");
        if (snf.diag[i] != 1) keep.push_back(i);
    }
    const RatMatrix uinv = rational_inverse(snf.left);
    FiniteAbelianGroup g;
    g.to_invariant = IntMatrix(keep.size(), n);
    g.from_invariant = IntMatrix(n, keep.size());
    for (std::size_t t = 0; t < keep.size(); ++t) {
        const std::size_t i = keep[t];
        g.factors.push_back(snf.diag[i]);
        for (std::size_t j = 0; j < n; ++j) {
            g.to_invariant(t, j) = bigmod(snf.left(i, j), snf.diag[i]);
            g.from_invariant(j, t) = uinv(j, i).get_num();
        }
    }
    return g;
}

Rational frac(const Rational& x) {
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - Rational(fl);
}

Rational LinkingForm::value(const std::vector<BigInt>& x, const std::vector<BigInt>& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (y[j] != 0) s += Rational(x[i] * y[j]) * table(i, j);
    }
    return frac(s);
}

LinkingForm linking_form(const SurgeryPresentation& pres) {
    RatMatrix inv = rational_inverse(pres.linking);
    for (std::size_t i = 0; i < inv.rows(); ++i)
        for (std::size_t j = 0; j < inv.cols(); ++j) inv(i, j) = frac(-inv(i, j));
    return LinkingForm{inv};
}

namespace {

std::vector<BigInt> meridian_rep(const FiniteAbelianGroup& g, const std::vector<BigInt>& coords) {
    std::vector<BigInt> v(g.from_invariant.rows());
    for (std::size_t j = 0; j < v.size(); ++j)
        for (std::size_t i = 0; i < coords.size(); ++i) v[j] += g.from_invariant(j, i) * coords[i];
    return v;
}

}  // namespace

Rational linking(const FiniteAbelianGroup& g, const LinkingForm& lf, const std::vector<BigInt>& x,
                 const std::vector<BigInt>& y) {
    return lf.value(meridian_rep(g, x), meridian_rep(g, y));
}

bool Character::trivial() const {
    for (long v : images)
        if (v != 0) return false;
    return true;
}

std::string to_string(const Character& c, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.images.size(); ++i) os << (i ? std::string(1, sep) : "") << c.images[i];
    return os.str();
}

Character make_character(long modulus, std::vector<long> images) {
    if (modulus < 1) throw InvalidCharacter("character modulus must be positive");
    for (auto& v : images) v = mod(v, modulus);
    return Character{modulus, std::move(images)};
}

bool is_valid_character(const SurgeryPresentation& pres, const Character& c) {
    if (c.images.size() != pres.linking.rows()) return false;
    for (std::size_t i = 0; i < pres.linking.rows(); ++i) {
        BigInt s = 0;
        for (std::size_t j = 0; j < pres.linking.cols(); ++j) s += pres.linking(i, j) * c.images[j];
        if (mod(s, c.modulus) != 0) return false;
    }
    return true;
}

Character multiple(const Character& c, long k) {
    Character out = c;
    for (auto& v : out.images) v = mod(v * k, c.modulus);
    return out;
}

long order_of(const Character& c) {
    long g = c.modulus;
    for (long v : c.images) g = std::gcd(g, v);
    return c.modulus / g;
}

std::vector<Character> characters(const SurgeryPresentation& pres, long m) {
    if (m < 1) throw InvalidCharacter("modulus must be positive");
    const FiniteAbelianGroup g = homology(pres);
    const std::size_t r = g.rank(), n = pres.linking.rows();
    std::vector<long> step(r), count(r);
    for (std::size_t i = 0; i < r; ++i) {
        const long gi = std::gcd(mod(g.factors[i], m) == 0 ? m : mod(g.factors[i], m), m);
        count[i] = gi;
        step[i] = m / gi;
    }
    std::vector<Character> out;
    std::vector<long> t(r, 0);
    for (;;) {
        Character c{m, std::vector<long>(n, 0)};
        for (std::size_t j = 0; j < n; ++j) {
            BigInt s = 0;
            for (std::size_t i = 0; i < r; ++i) s += g.to_invariant(i, j) * (t[i] * step[i]);
            c.images[j] = mod(s, m);
        }
        out.push_back(std::move(c));
        std::size_t i = 0;
        while (i < r && ++t[i] == count[i]) t[i++] = 0;
        if (i == r) break;
    }
    return out;
}

long evaluate(const FiniteAbelianGroup& g, const Character& c, const std::vector<BigInt>& coords) {
    BigInt s = 0;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] == 0) continue;
        BigInt on_gen = 0;
        for (std::size_t j = 0; j < c.images.size(); ++j) on_gen += g.from_invariant(j, i) * c.images[j];
        s += on_gen * coords[i];
    }
    return mod(s, c.modulus);
}

std::vector<Metabolizer> primary_metabolizers(const FiniteAbelianGroup& g, const LinkingForm& lf, long prime,
                                              const MetabolizerOptions& opt) {
    if (g.order() > opt.max_group_order) throw CapExceeded("group order exceeds the metabolizer enumeration cap");
    std::vector<std::size_t> idx;
    std::vector<long> e;
    long total = 0;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        const long v = valuation(g.factors[i], prime);
        if (v > 0) {
            idx.push_back(i);
            e.push_back(v);
            total += v;
        }
    }
    std::vector<Metabolizer> out;
    if (total % 2 != 0) return out;
    if (idx.empty()) {
        out.push_back(Metabolizer{prime, {}, 1});
        return out;
    }
    const std::size_t r = idx.size();
    const long half = total / 2;

    auto to_group = [&](const std::vector<BigInt>& y) {
        std::vector<BigInt> coords(g.rank(), 0);
        for (std::size_t t = 0; t < r; ++t) {
            const BigInt scale = g.factors[idx[t]] / power(prime, e[t]);
            coords[idx[t]] = bigmod(y[t] * scale, g.factors[idx[t]]);
        }
        return coords;
    };

    // Superlattices of (+) p^e_i Z in Z^r, as upper-triangular Hermite bases with
    // diagonal p^f_i and off-diagonal entries reduced modulo the diagonal below.
    std::vector<long> f(r, 0);
    std::function<void(std::size_t, long)> choose_f = [&](std::size_t i, long left) {
        if (i == r) {
            if (left != 0) return;
            std::vector<std::vector<BigInt>> h(r, std::vector<BigInt>(r, 0));
            for (std::size_t t = 0; t < r; ++t) h[t][t] = power(prime, f[t]);
            std::vector<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t a = 0; a < r; ++a)
                for (std::size_t b = a + 1; b < r; ++b) off.emplace_back(a, b);
            std::function<void(std::size_t)> fill = [&](std::size_t o) {
                if (o < off.size()) {
                    auto [a, b] = off[o];
                    for (BigInt v = 0; v < h[b][b]; ++v) {
                        h[a][b] = v;
                        fill(o + 1);
                    }
                    h[a][b] = 0;
                    return;
                }
                for (std::size_t t = 0; t < r; ++t) {
                    std::vector<BigInt> v(r, 0);
                    v[t] = power(prime, e[t]);
                    for (std::size_t row = 0; row < r; ++row) {
                        if (v[row] % h[row][row] != 0) return;
                        const BigInt c = v[row] / h[row][row];
                        for (std::size_t col = row; col < r; ++col) v[col] -= c * h[row][col];
                    }
                }
                Metabolizer m{prime, {}, power(prime, half)};
                for (std::size_t t = 0; t < r; ++t) {
                    auto coords = to_group(h[t]);
                    bool zero = true;
                    for (auto& c : coords) zero = zero && c == 0;
                    if (!zero) m.generators.push_back(std::move(coords));
                }
                if (is_isotropic(g, lf, m)) out.push_back(std::move(m));
            };
            fill(0);
            return;
        }
        for (long fi = 0; fi <= std::min(e[i], left); ++fi) {
            f[i] = fi;
            choose_f(i + 1, left - fi);
        }
    };
    choose_f(0, half);
    return out;
}

std::vector<Metabolizer> metabolizers(const FiniteAbelianGroup& g, const LinkingForm& lf,
                                      const MetabolizerOptions& opt) {
    std::vector<Metabolizer> acc{Metabolizer{0, {}, 1}};
    for (long p : prime_factors(g.order())) {
        auto part = primary_metabolizers(g, lf, p, opt);
        std::vector<Metabolizer> next;
        for (const auto& a : acc)
            for (const auto& b : part) {
                Metabolizer m{0, a.generators, a.order * b.order};
                m.generators.insert(m.generators.end(), b.generators.begin(), b.generators.end());
                next.push_back(std::move(m));
            }
        acc = std::move(next);
    }
    return acc;
}

bool is_isotropic(const FiniteAbelianGroup& g, const LinkingForm& lf, const Metabolizer& m) {
    for (std::size_t a = 0; a < m.generators.size(); ++a)
        for (std::size_t b = a; b < m.generators.size(); ++b)
            if (linking(g, lf, m.generators[a], m.generators[b]) != 0) return false;
    return true;
}

bool vanishes_on(const FiniteAbelianGroup& g, const Character& c, const Metabolizer& m) {
    for (const auto& gen : m.generators)
        if (evaluate(g, c, gen) != 0) return false;
    return true;
}

Character reduced_from_montesinos(const PretzelKnot& k, int pivot, const Character& chi) {
    if (chi.images.size() != 4) throw InvalidCharacter("expected a character on the Montesinos model");
    const SurgeryPresentation red = reduced_presentation(k, pivot);
    return Character{chi.modulus, {chi.images[1 + red.param_index[0]], chi.images[1 + red.param_index[1]]}};
}

Character montesinos_from_reduced(const PretzelKnot& k, int pivot, const Character& chi) {
    if (chi.images.size() != 2) throw InvalidCharacter("expected a character on a two-component model");
    const SurgeryPresentation red = reduced_presentation(k, pivot);
    if (!is_valid_character(red, chi)) throw InvalidCharacter("character does not vanish on the relations");
    const auto v = k.params();
    const long m = chi.modulus;
    std::vector<long> img(4, 0);
    img[1 + red.param_index[0]] = chi.images[0];
    img[1 + red.param_index[1]] = chi.images[1];
    img[1 + pivot] = mod(-chi.images[0] - chi.images[1], m);
    img[0] = mod(-v[red.param_index[0]] * chi.images[0], m);
    Character out = make_character(m, img);
    if (!is_valid_character(montesinos_presentation(k), out))
        throw InvalidCharacter("character does not extend to the Montesinos model");
    return out;
}

long cover_h1_dim_closed_form(const PretzelKnot& k, const Character& chi) {
    const long d = order_of(chi);
    if (d == 1) return 0;
    const auto v = k.params();
    const bool all_div = v[0] % d == 0 && v[1] % d == 0 && v[2] % d == 0;
    if (!is_prime(order_of(chi))) {
        const long p = prime_factors(BigInt(order_of(chi))).front();
        if (v[0] % p == 0 && v[1] % p == 0 && v[2] % p == 0)
            throw CaseMismatch("prime-power character on a non-cyclic mod-p homology");
        return 0;
    }
    const bool full = chi.images[1] != 0 && chi.images[2] != 0 && chi.images[3] != 0;
    return all_div && full ? 1 : 0;
}

long cover_h1_dim_reidemeister_schreier(const PretzelKnot& k, const Character& chi) {
    const long d = chi.modulus;
    if (!is_prime(d) || order_of(chi) != d) throw CaseMismatch("Reidemeister-Schreier route needs prime order");
    const long img[3] = {chi.images[1], chi.images[2], chi.images[3]};
    // Relators on (mu_p, mu_q, mu_r): mu_r mu_q mu_p, mu_p^p mu_q^-q, mu_q^q mu_r^-r.
    using Word = std::vector<std::pair<int, int>>;
    auto pw = [](int gen, long e, Word& w) {
        for (long i = 0; i < std::labs(e); ++i) w.emplace_back(gen, e > 0 ? 1 : -1);
    };
    std::vector<Word> rels(3);
    rels[0] = {{2, 1}, {1, 1}, {0, 1}};
    pw(0, k.p, rels[1]);
    pw(1, -k.q, rels[1]);
    pw(1, k.q, rels[2]);
    pw(2, -k.r, rels[2]);

    IntMatrix m(3 * d, 3 * d);
    for (std::size_t ri = 0; ri < 3; ++ri) {
        std::vector<std::vector<long>> fox(3, std::vector<long>(d, 0));
        long s = 0;
        for (auto [gen, e] : rels[ri]) {
            if (e > 0) {
                fox[gen][s] += 1;
                s = mod(s + img[gen], d);
            } else {
                s = mod(s - img[gen], d);
                fox[gen][s] -= 1;
            }
        }
        for (int gen = 0; gen < 3; ++gen)
            for (long sh = 0; sh < d; ++sh) {
                if (fox[gen][sh] == 0) continue;
                for (long u = 0; u < d; ++u) m(ri * d + u, gen * d + mod(u + sh, d)) += fox[gen][sh];
            }
    }
    const long rank2 = static_cast<long>(rational_rank(m));
    const long b1 = 2 * d + 1 - rank2;
    if (b1 % (d - 1) != 0) throw RouteDisagreement("cover Betti number not divisible by d-1");
    return b1 / (d - 1);
}

long cover_h1_dim(const PretzelKnot& k, const Character& chi, const CoverDimOptions& opt) {
    const long closed = cover_h1_dim_closed_form(k, chi);
    if (is_prime(order_of(chi)) && order_of(chi) == chi.modulus && chi.modulus <= opt.cross_check_max_prime) {
        const long rs = cover_h1_dim_reidemeister_schreier(k, chi);
        if (rs != closed) throw RouteDisagreement("cover homology routes disagree for " + to_string(k));
    }
    return closed;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

std::vector<long> prime_factors(BigInt n) {
    n = abs(n);
    std::vector<long> out;
    for (long f = 2; BigInt(f) * f <= n; ++f) {
        if (n % f != 0) continue;
        out.push_back(f);
        while (n % f == 0) n /= f;
    }
    if (n > 1) out.push_back(n.get_si());
    return out;
}

}  // namespace pk
