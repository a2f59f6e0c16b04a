#include "pk/cyclotomic.hpp"

#include "pk/errors.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace pk {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (quotient, remainder) of a / b over Q.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    trim(a);
    Poly q;
    if (a.size() < b.size()) return {q, a};
    q.assign(a.size() - b.size() + 1, Rational(0));
    const Rational& lead = b.back();
    for (std::size_t i = a.size(); i-- >= b.size();) {
        if (a[i] == 0) continue;
        Rational c = a[i] / lead;
        const std::size_t shift = i - (b.size() - 1);
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    }
    trim(a);
    return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0) c[i + j] += a[i] * b[j];
    }
    return c;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly c(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    trim(c);
    return c;
}

}  // namespace

PrecisionPolicy PrecisionPolicy::from_env() {
    PrecisionPolicy p;
    if (const char* env = std::getenv("PK_PRECISION_BITS")) {
        try {
            long bits = std::stol(env);
            if (bits >= 16) p.initial_bits = static_cast<unsigned>(bits);
        } catch (const std::exception&) {
        }
    }
    if (p.max_bits < p.initial_bits) p.max_bits = p.initial_bits;
    return p;
}

std::vector<BigInt> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    // x^n - 1 divided by Phi_d for every proper divisor d.
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d) continue;
        auto phd = cyclotomic_polynomial(d);
        Poly den(phd.begin(), phd.end());
        num = divmod(num, den).first;
    }
    std::vector<BigInt> out;
    for (auto& c : num) out.push_back(c.get_num());
    return out;
}

CyclotomicField::CyclotomicField(long order, PrecisionPolicy policy) : order_(order), policy_(policy) {
    if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
    phi_ = cyclotomic_polynomial(order);
    degree_ = phi_.size() - 1;
    powers_.reserve(order);
    Element cur = zero();
    cur[0] = 1;
    for (long j = 0; j < order; ++j) {
        powers_.push_back(cur);
        Poly next(degree_ + 1, Rational(0));
        for (std::size_t i = 0; i < degree_; ++i) next[i + 1] = cur[i];
        reduce(next);
        cur = next;
    }
}

void CyclotomicField::reduce(std::vector<Rational>& poly) const {
    for (std::size_t i = poly.size(); i-- > degree_;) {
        if (poly[i] == 0) continue;
        Rational c = poly[i];
        const std::size_t shift = i - degree_;
        for (std::size_t j = 0; j < degree_; ++j)
            if (phi_[j] != 0) poly[shift + j] -= c * phi_[j];
        poly[i] = 0;
    }
    poly.resize(degree_, Rational(0));
}

CyclotomicField::Element CyclotomicField::from_rational(const Rational& x) const {
    Element e = zero();
    if (degree_ > 0) e[0] = x;
    return e;
}

CyclotomicField::Element CyclotomicField::root_power(long j) const {
    j %= order_;
    if (j < 0) j += order_;
    return powers_[j];
}

bool CyclotomicField::is_zero(const Element& a) const {
    for (const auto& c : a)
        if (c != 0) return false;
    return true;
}

CyclotomicField::Element CyclotomicField::add(const Element& a, const Element& b) const {
    Element c = a;
    for (std::size_t i = 0; i < degree_; ++i) c[i] += b[i];
    return c;
}

CyclotomicField::Element CyclotomicField::sub(const Element& a, const Element& b) const {
    Element c = a;
    for (std::size_t i = 0; i < degree_; ++i) c[i] -= b[i];
    return c;
}

CyclotomicField::Element CyclotomicField::neg(const Element& a) const {
    Element c = a;
    for (auto& x : c) x = -x;
    return c;
}

CyclotomicField::Element CyclotomicField::scale(const Element& a, const Rational& s) const {
    Element c = a;
    for (auto& x : c) x *= s;
    return c;
}

CyclotomicField::Element CyclotomicField::mul(const Element& a, const Element& b) const {
    Poly c = poly_mul(a, b);
    if (c.empty()) return zero();
    reduce(c);
    return c;
}

CyclotomicField::Element CyclotomicField::inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("inverse of zero in cyclotomic field");
    // Extended Euclid: s * a + t * phi = 1.
    Poly r0(phi_.begin(), phi_.end());
    Poly r1 = a;
    trim(r1);
    Poly s0, s1{Rational(1)};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    Rational c = r1[0];
    for (auto& x : s1) x /= c;
    s1.resize(std::max(s1.size(), degree_), Rational(0));
    reduce(s1);
    return s1;
}

CyclotomicField::Element CyclotomicField::conj(const Element& a) const {
    Element c = zero();
    for (std::size_t j = 0; j < degree_; ++j) {
        if (a[j] == 0) continue;
        const Element& pw = powers_[(order_ - static_cast<long>(j)) % order_];
        for (std::size_t i = 0; i < degree_; ++i)
            if (pw[i] != 0) c[i] += a[j] * pw[i];
    }
    return c;
}

int CyclotomicField::sign_real(const Element& a) const {
    if (is_zero(a)) return 0;
    if (degree_ == 1) return sgn(a[0]);

    Rational weight = 0;
    for (const auto& c : a) weight += abs(c);

    for (unsigned prec = policy_.initial_bits;; prec *= 2) {
        mpfr_t two_pi, angle, term, coef, sum, bound;
        mpfr_inits2(prec, two_pi, angle, term, coef, sum, bound, static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(two_pi, MPFR_RNDN);
        mpfr_mul_2ui(two_pi, two_pi, 1, MPFR_RNDN);
        mpfr_set_zero(sum, 1);
        for (std::size_t j = 0; j < degree_; ++j) {
            if (a[j] == 0) continue;
            mpfr_mul_ui(angle, two_pi, j, MPFR_RNDN);
            mpfr_div_si(angle, angle, order_, MPFR_RNDN);
            mpfr_cos(term, angle, MPFR_RNDN);
            mpfr_set_q(coef, a[j].get_mpq_t(), MPFR_RNDN);
            mpfr_mul(term, term, coef, MPFR_RNDN);
            mpfr_add(sum, sum, term, MPFR_RNDN);
        }
        // Each term carries at most |c_j| 2^(6 - prec) error; each addition
        // at most weight * 2^-prec. The bound below dominates both.
        mpfr_set_q(bound, weight.get_mpq_t(), MPFR_RNDU);
        mpfr_mul_ui(bound, bound, degree_ + 2, MPFR_RNDU);
        mpfr_mul_2si(bound, bound, 8 - static_cast<long>(prec), MPFR_RNDU);

        int result = 0;
        if (mpfr_cmpabs(sum, bound) > 0) result = mpfr_sgn(sum);
        mpfr_clears(two_pi, angle, term, coef, sum, bound, static_cast<mpfr_ptr>(nullptr));
        if (result != 0) return result;
        if (prec >= policy_.max_bits)
            throw SignUndecidable("sign undecided at " + std::to_string(prec) + " bits");
    }
}

double CyclotomicField::real_part(const Element& a) const {
    double s = 0;
    for (std::size_t j = 0; j < degree_; ++j)
        s += a[j].get_d() * std::cos(2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_));
    return s;
}

double CyclotomicField::imag_part(const Element& a) const {
    double s = 0;
    for (std::size_t j = 0; j < degree_; ++j)
        s += a[j].get_d() * std::sin(2 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_));
    return s;
}

}  // namespace pk
