#pragma once

#include "pk/cyclotomic.hpp"
#include "pk/matrix.hpp"

#include <map>
#include <vector>

namespace pk {

// Hermitian matrix over Q(zeta_d), stored densely.
struct CycloHermitian {
    long order = 1;
    std::size_t size = 0;
    std::vector<CyclotomicField::Element> entries;  // row-major

    CyclotomicField::Element& at(std::size_t i, std::size_t j) { return entries[i * size + j]; }
    const CyclotomicField::Element& at(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

int symmetric_signature(const IntMatrix& m);
int symmetric_signature(const RatMatrix& m);

// Signature of (1 - w) V + (1 - conj w) V^T with w = exp(2 pi i k / d).
int hermitian_signature_at_root(const IntMatrix& v, long d, long k);
int hermitian_signature_at_root(const IntMatrix& v, long d, long k, const PrecisionPolicy& policy);

// (1 - w) V + (1 - conj w) V^T as an exact matrix over the field of order d / gcd(d, k).
CycloHermitian tristram_levine_form(const IntMatrix& v, long d, long k);

int hermitian_signature(const CycloHermitian& h);
int hermitian_signature(const CycloHermitian& h, const PrecisionPolicy& policy);

}  // namespace pk
