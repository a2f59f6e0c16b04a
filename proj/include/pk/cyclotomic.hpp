#pragma once

#include "pk/matrix.hpp"

#include <vector>

namespace pk {

struct PrecisionPolicy {
    unsigned initial_bits = 128;
    unsigned max_bits = 4096;

    // Reads PK_PRECISION_BITS for the starting precision.
    static PrecisionPolicy from_env();
};

// Q(zeta_n) with zeta_n = exp(2 pi i / n). Elements are coefficient vectors of
// length phi(n) in the power basis 1, zeta, ..., zeta^(phi-1).
class CyclotomicField {
public:
    using Element = std::vector<Rational>;

    explicit CyclotomicField(long order, PrecisionPolicy policy = PrecisionPolicy::from_env());

    long order() const { return order_; }
    std::size_t degree() const { return degree_; }
    const std::vector<BigInt>& minimal_polynomial() const { return phi_; }

    Element zero() const { return Element(degree_); }
    Element one() const { return from_rational(Rational(1)); }
    Element from_rational(const Rational& x) const;
    Element root_power(long j) const;  // zeta^j

    bool is_zero(const Element& a) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element mul(const Element& a, const Element& b) const;
    Element scale(const Element& a, const Rational& s) const;
    Element inv(const Element& a) const;
    Element conj(const Element& a) const;

    // Sign of a real element, certified by interval evaluation with adaptive
    // precision. Exact zeros return 0 without numerical work.
    int sign_real(const Element& a) const;

    // Numerical value (double) for diagnostics and tests.
    double real_part(const Element& a) const;
    double imag_part(const Element& a) const;

private:
    long order_;
    std::size_t degree_;
    std::vector<BigInt> phi_;  // monic, phi_[i] is coefficient of x^i
    std::vector<Element> powers_;
    PrecisionPolicy policy_;

    void reduce(std::vector<Rational>& poly) const;
};

std::vector<BigInt> cyclotomic_polynomial(long n);

}  // namespace pk
