#pragma once

#include "pk/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pk {

enum class KnotClass { Odd, Even, NotAKnot };

std::string to_string(KnotClass c);

struct PretzelKnot {
    long p = 0, q = 0, r = 0;

    std::array<long, 3> params() const { return {p, q, r}; }
    PretzelKnot mirror() const { return {-p, -q, -r}; }
    friend bool operator==(const PretzelKnot&, const PretzelKnot&) = default;
};

std::string to_string(const PretzelKnot& k);

KnotClass classify(long p, long q, long r);
inline KnotClass classify(const PretzelKnot& k) { return classify(k.p, k.q, k.r); }

// Odd class only: the genus-one Seifert matrix.
IntMatrix seifert_matrix(const PretzelKnot& k);

// [[0,1,1,1],[1,p,0,0],[1,0,q,0],[1,0,0,r]]
IntMatrix montesinos_matrix(const PretzelKnot& k);

BigInt determinant(const PretzelKnot& k);

// Coefficient i multiplies t^i.
using IntPoly = std::vector<BigInt>;

IntPoly normalize_alexander(IntPoly p);
std::string to_string(const IntPoly& p);

struct FoxMilnor {
    bool passes = false;
    BigInt m, n;  // Delta = (m t - n)(n t - m) up to units when passes
    friend bool operator==(const FoxMilnor&, const FoxMilnor&) = default;
};

struct ClassicalInvariants {
    BigInt determinant;
    bool determinant_square = false;
    std::optional<long> signature;
    std::optional<IntPoly> alexander;
    std::optional<FoxMilnor> fox_milnor;
    std::optional<bool> is_alg_slice;
    std::string reason;
    friend bool operator==(const ClassicalInvariants&, const ClassicalInvariants&) = default;
};

IntPoly alexander_polynomial(const PretzelKnot& k);
FoxMilnor fox_milnor(const IntPoly& normalized);
ClassicalInvariants classical(const PretzelKnot& k);

enum class RibbonFamily { OddPQMinusQ, OddOneQMinusQMinus4, EvenPQMinusQ, TwoBridgeOddPQMinusQ, TwoBridgeOneQMinusQMinus4 };

struct RibbonForm {
    RibbonFamily family;
    long p = 0;  // parameters of the matched representative
    long q = 0;

    std::string label() const;
    friend bool operator==(const RibbonForm&, const RibbonForm&) = default;
};

std::optional<RibbonForm> ribbon_form(const PretzelKnot& k);

struct LecuonaMatch {
    long a = 0;
    long residue = 0;
    bool unresolved = false;

    std::string disposition() const { return unresolved ? "unresolved" : "resolved-not-alg-slice"; }
    friend bool operator==(const LecuonaMatch&, const LecuonaMatch&) = default;
};

std::optional<LecuonaMatch> lecuona_family(const PretzelKnot& k);

PretzelKnot twobridge_to_pretzel(long a, long b);

// A parameter of absolute value one makes the knot two-bridge; returns (alpha, beta) with alpha > 0.
struct TwoBridge {
    long alpha = 0;
    long beta = 0;
};
std::optional<TwoBridge> twobridge_fraction(const PretzelKnot& k);
// Same knot up to mirror image.
bool same_twobridge_up_to_mirror(const TwoBridge& a, const TwoBridge& b);

// Even knots of the form P(-p, p+2, q) up to symmetry, p odd >= -1, q even.
struct EvenCandidateForm {
    long p = 0;
    long q = 0;
    PretzelKnot knot() const { return {-p, p + 2, q}; }
    BigInt signed_determinant() const { return BigInt(2 * q) - BigInt(p) * p - 2 * p; }
};

std::optional<EvenCandidateForm> even_candidate_form(const PretzelKnot& k);

// Jabuka's algebraically-slice candidates: P(-p, p+2, q) with 2q - p^2 - 2p = m^2 > 0.
bool in_jabuka_family(const PretzelKnot& k);

struct NormalForm {
    PretzelKnot knot;
    bool reflected = false;
    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Odd: p, q > 0 > r with p <= q when signs are mixed, else all positive ascending.
// Even: the P(-p, p+2, q) shape when available, else sorted by |.| descending
// with the first entry positive.
NormalForm normal_form(const PretzelKnot& k);

// Parameters do not contain both 1 and -1.
bool odd_nontrivial(const PretzelKnot& k);

bool is_perfect_square(const BigInt& n, BigInt* root = nullptr);

}  // namespace pk
