#include "pk/matrix.hpp"

#include "pk/errors.hpp"

#include <utility>

namespace pk {

BigInt determinant(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    // Bareiss fraction-free elimination.
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t s = k + 1;
            while (s < n && a(s, k) == 0) ++s;
            if (s == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

RatMatrix rational_inverse(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix a = to_rational(m);
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0) ++p;
        if (p == n) throw SingularMatrix("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        Rational piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= piv;
            inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a(i, c) == 0) continue;
            Rational f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::size_t rational_rank(const IntMatrix& m) {
    RatMatrix a = to_rational(m);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != rank)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(rank, j));
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, c) == 0) continue;
            Rational f = a(i, c) / a(rank, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

}  // namespace pk
