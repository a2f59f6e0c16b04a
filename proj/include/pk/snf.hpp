#pragma once

#include "pk/matrix.hpp"

#include <vector>

namespace pk {

struct SnfResult {
    std::vector<BigInt> diag;  // min(rows, cols) entries, d1 | d2 | ...
    IntMatrix left;            // U, rows x rows
    IntMatrix right;           // V, cols x cols

    IntMatrix diagonal_matrix(std::size_t rows, std::size_t cols) const;
};

// U * m * V == diag, with U and V unimodular.
SnfResult smith_normal_form(const IntMatrix& m);

}  // namespace pk
