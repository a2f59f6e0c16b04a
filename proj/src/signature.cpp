#include "pk/signature.hpp"

#include "pk/errors.hpp"

#include <numeric>
#include <optional>
#include <set>

namespace pk {

namespace {

struct RationalField {
    using Element = Rational;
    bool is_zero(const Element& a) const { return a == 0; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const { return 1 / a; }
    Element conj(const Element& a) const { return a; }
    int sign_real(const Element& a) const { return sgn(a); }
    std::vector<Element> mixing_scalars() const { return {Rational(1)}; }
};

struct CycloAdapter {
    using Element = CyclotomicField::Element;
    const CyclotomicField& f;
    bool is_zero(const Element& a) const { return f.is_zero(a); }
    Element sub(const Element& a, const Element& b) const { return f.sub(a, b); }
    Element add(const Element& a, const Element& b) const { return f.add(a, b); }
    Element neg(const Element& a) const { return f.neg(a); }
    Element mul(const Element& a, const Element& b) const { return f.mul(a, b); }
    Element inv(const Element& a) const { return f.inv(a); }
    Element conj(const Element& a) const { return f.conj(a); }
    int sign_real(const Element& a) const { return f.sign_real(a); }
    std::vector<Element> mixing_scalars() const {
        if (f.order() <= 2) return {f.one()};
        return {f.one(), f.root_power(1)};
    }
};

template <class F>
using SparseRows = std::vector<std::map<std::size_t, typename F::Element>>;

// Congruence diagonalization of a Hermitian form stored with both triangles.
// Pivots are taken in index order so banded inputs stay banded.
template <class F>
int sparse_signature(const F& field, SparseRows<F> rows) {
    using E = typename F::Element;
    const std::size_t n = rows.size();
    std::set<std::size_t> active;
    for (std::size_t i = 0; i < n; ++i) active.insert(i);
    int signature = 0;

    while (!active.empty()) {
        std::size_t k = *active.begin();
        if (rows[k].empty()) {
            active.erase(k);
            continue;
        }
        if (!rows[k].count(k)) {
            std::optional<std::size_t> alt;
            for (const auto& [j, v] : rows[k])
                if (rows[j].count(j)) {
                    alt = j;
                    break;
                }
            if (alt) {
                k = *alt;
            } else {
                // Every neighbour has zero diagonal: replace e_k by e_k + c e_l.
                const std::size_t l = rows[k].begin()->first;
                const E hkl = rows[k].at(l);
                std::optional<E> chosen_c, new_diag;
                for (const E& c : field.mixing_scalars()) {
                    E t = field.mul(c, hkl);
                    E dg = field.add(t, field.conj(t));
                    if (!field.is_zero(dg)) {
                        chosen_c = c;
                        new_diag = dg;
                        break;
                    }
                }
                if (!chosen_c) throw std::logic_error("no mixing scalar produced a nonzero diagonal");
                const E cbar = field.conj(*chosen_c);
                for (const auto& [j, hlj] : rows[l]) {
                    if (j == k) continue;
                    E add = field.mul(cbar, hlj);
                    auto it = rows[k].find(j);
                    E val = it == rows[k].end() ? add : field.add(it->second, add);
                    if (field.is_zero(val)) {
                        rows[k].erase(j);
                        rows[j].erase(k);
                    } else {
                        rows[j][k] = field.conj(val);
                        rows[k][j] = std::move(val);
                    }
                }
                rows[k][k] = *new_diag;
            }
        }

        const E pivot = rows[k].at(k);
        signature += field.sign_real(pivot);
        const E pinv = field.inv(pivot);

        std::vector<std::pair<std::size_t, E>> nb;
        for (auto& [j, v] : rows[k])
            if (j != k) nb.emplace_back(j, v);
        std::vector<E> left;
        left.reserve(nb.size());
        for (auto& [i, hki] : nb) left.push_back(field.mul(field.conj(hki), pinv));

        for (std::size_t a = 0; a < nb.size(); ++a) {
            const std::size_t i = nb[a].first;
            for (std::size_t b = a; b < nb.size(); ++b) {
                const std::size_t j = nb[b].first;
                E delta = field.mul(left[a], nb[b].second);
                auto it = rows[i].find(j);
                E val = it == rows[i].end() ? field.neg(delta) : field.sub(it->second, delta);
                if (field.is_zero(val)) {
                    rows[i].erase(j);
                    if (i != j) rows[j].erase(i);
                } else {
                    if (i != j) rows[j][i] = field.conj(val);
                    rows[i][j] = std::move(val);
                }
            }
        }
        for (auto& [j, v] : nb) rows[j].erase(k);
        rows[k].clear();
        active.erase(k);
    }
    return signature;
}

}  // namespace

int symmetric_signature(const RatMatrix& m) {
    if (!m.symmetric()) throw NonSymmetric("symmetric_signature: matrix is not symmetric");
    SparseRows<RationalField> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0) rows[i][j] = m(i, j);
    return sparse_signature(RationalField{}, std::move(rows));
}

int symmetric_signature(const IntMatrix& m) { return symmetric_signature(to_rational(m)); }

int hermitian_signature_at_root(const IntMatrix& v, long d, long k) {
    return hermitian_signature_at_root(v, d, k, PrecisionPolicy::from_env());
}

int hermitian_signature_at_root(const IntMatrix& v, long d, long k, const PrecisionPolicy& policy) {
    if (!v.square()) throw std::invalid_argument("Seifert matrix must be square");
    if (d < 1) throw std::invalid_argument("root order must be positive");
    k %= d;
    if (k < 0) k += d;
    if (k == 0) return 0;  // (1 - 1) V + (1 - 1) V^T vanishes
    const long g = std::gcd(d, k);
    const CyclotomicField field(d / g, policy);
    const CycloAdapter ad{field};
    const auto w = field.root_power(k / g);
    const auto a = field.sub(field.one(), w);
    const auto abar = field.conj(a);
    const std::size_t n = v.rows();
    SparseRows<CycloAdapter> rows(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (v(i, j) == 0 && v(j, i) == 0) continue;
            auto e = field.add(field.scale(a, Rational(v(i, j))), field.scale(abar, Rational(v(j, i))));
            if (field.is_zero(e)) continue;
            if (i != j) rows[j][i] = field.conj(e);
            rows[i][j] = std::move(e);
        }
    return sparse_signature(ad, std::move(rows));
}

CycloHermitian tristram_levine_form(const IntMatrix& v, long d, long k) {
    k %= d;
    if (k < 0) k += d;
    const long g = std::gcd(d, k);
    const CyclotomicField field(d / g);
    const auto w = field.root_power(k / g);
    const auto a = field.sub(field.one(), w);
    const auto abar = field.conj(a);
    CycloHermitian h;
    h.order = d / g;
    h.size = v.rows();
    h.entries.assign(h.size * h.size, field.zero());
    for (std::size_t i = 0; i < h.size; ++i)
        for (std::size_t j = 0; j < h.size; ++j)
            h.at(i, j) = field.add(field.scale(a, Rational(v(i, j))), field.scale(abar, Rational(v(j, i))));
    return h;
}

int hermitian_signature(const CycloHermitian& h) { return hermitian_signature(h, PrecisionPolicy::from_env()); }

int hermitian_signature(const CycloHermitian& h, const PrecisionPolicy& policy) {
    const CyclotomicField field(h.order, policy);
    for (std::size_t i = 0; i < h.size; ++i)
        for (std::size_t j = i; j < h.size; ++j)
            if (field.sub(h.at(i, j), field.conj(h.at(j, i))) != field.zero())
                throw NonSymmetric("matrix is not Hermitian");
    SparseRows<CycloAdapter> rows(h.size);
    for (std::size_t i = 0; i < h.size; ++i)
        for (std::size_t j = 0; j < h.size; ++j)
            if (!field.is_zero(h.at(i, j))) rows[i][j] = h.at(i, j);
    return sparse_signature(CycloAdapter{field}, std::move(rows));
}

}  // namespace pk
