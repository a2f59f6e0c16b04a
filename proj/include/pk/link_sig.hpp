#pragma once

#include "pk/matrix.hpp"
#include "pk/signature.hpp"

#include <vector>

namespace pk {

// Generators are 1-based: +i is sigma_i, -i its inverse.
struct Braid {
    int strands = 1;
    std::vector<int> word;
};

// Appends |t| full twists (sign of t) on strands lo..hi.
void append_full_twists(Braid& b, int lo, int hi, long t);

IntMatrix closed_braid_seifert(const Braid& b);

// Closure of (sigma_1 ... sigma_{a-1})^b; b < 0 uses inverse generators.
Braid torus_link_braid(long a, long b);
IntMatrix torus_link_seifert(long a, long b);

// sigma_{T(j, j k n)}(exp(2 pi i / n)) = -2 j (j - 1) k.
long litherland_torus_sigma(long j, long k_twist);

// Tristram-Levine signature of the coherent torus link T(a, b) at exp(2 pi i k / d),
// by the lattice-point count over pairs i/a + l/|b|.
long torus_link_sigma(long a, long b, long d, long k);

struct CableSpec {
    long lambda = 0;
    long n_plus = 0;
    long n_minus = 0;

    long net() const { return n_plus - n_minus; }
    bool coherent() const { return n_minus == 0 && n_plus >= 1; }
    bool antiparallel_pair() const { return n_plus == 1 && n_minus == 1; }
};

enum class LinkModelKind {
    HopfChain,  // one 0-framed circle with three meridional circles
    TorusLink2  // two-component T(2, 2 * mutual_linking)
};

struct SatelliteLink {
    LinkModelKind model = LinkModelKind::TorusLink2;
    long mutual_linking = 0;  // TorusLink2 only
    std::vector<CableSpec> cables;
};

struct SatelliteOptions {
    bool torus_pieces_by_seifert = false;
    std::size_t max_crossings = 20000;
};

// Braid whose closure is the coherent cable of a TorusLink2 model with
// m1, m2 strands, framings lambda1, lambda2 and mutual linking P.
Braid torus_link2_cable_braid(long m1, long m2, long lambda1, long lambda2, long P);

long satellite_sigma(const SatelliteLink& link, long d, long k, const SatelliteOptions& opt = {});

struct ColoredTorusData {
    long f = 0;
    IntMatrix pp, pm, mp, mm;  // A^{++}, A^{+-}, A^{-+}, A^{--}
};

ColoredTorusData colored_torus_matrix(long f);

// Colored signature of the 2-colored T(2, 2f) at (w^m1, w^m2), w = exp(2 pi i / d).
CycloHermitian colored_torus_form(long f, long d, long m1, long m2);
long colored_torus_signature(long f, long d, long m1, long m2);

}  // namespace pk
