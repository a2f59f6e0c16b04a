#include "pk/snf.hpp"

#include <algorithm>
#include <utility>

namespace pk {

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

// row_i += f * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
}

void add_col(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& f) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
}

}  // namespace

IntMatrix SnfResult::diagonal_matrix(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < diag.size(); ++i) d(i, i) = diag[i];
    return d;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(rows);
    IntMatrix v = IntMatrix::identity(cols);
    const std::size_t n = std::min(rows, cols);

    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a(i, j) != 0 && (pi == rows || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) goto finished;
            if (pi != t) {
                swap_rows(a, t, pi);
                swap_rows(u, t, pi);
            }
            if (pj != t) {
                swap_cols(a, t, pj);
                swap_cols(v, t, pj);
            }

            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q = a(i, t) / a(t, t);
                add_row(a, i, t, -q);
                add_row(u, i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q = a(t, j) / a(t, t);
                add_col(a, j, t, -q);
                add_col(v, j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            std::size_t bad = rows;
            for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == rows) break;
            add_row(a, t, bad, BigInt(1));
            add_row(u, t, bad, BigInt(1));
        }
        if (a(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) a(t, c) = -a(t, c);
            for (std::size_t c = 0; c < rows; ++c) u(t, c) = -u(t, c);
        }
    }
finished:
    SnfResult res;
    res.diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) res.diag[i] = a(i, i);
    res.left = std::move(u);
    res.right = std::move(v);
    return res;
}

}  // namespace pk
