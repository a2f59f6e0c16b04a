#pragma once

#include "pk/link_sig.hpp"
#include "pk/matrix.hpp"
#include "pk/pretzel.hpp"

#include <string>
#include <vector>

namespace pk {

enum class PresentationKind { Odd4, OddReduced2, Even2 };

std::string to_string(PresentationKind k);

struct SurgeryPresentation {
    PresentationKind kind = PresentationKind::Odd4;
    PretzelKnot knot;
    IntMatrix linking;
    std::vector<std::string> labels;
    std::vector<BigInt> framings;
    LinkModelKind link_model = LinkModelKind::HopfChain;
    long mutual_linking = 0;       // two-component models
    int pivot = -1;                // parameter index slid over, two-component models
    std::vector<int> param_index;  // per label: parameter index 0..2, or -1 for the central circle
};

// Strict: Odd4 and OddReduced2 need an odd knot; Even2 needs K = P(-p, p+2, q) literally.
SurgeryPresentation presentation(const PretzelKnot& k, PresentationKind kind);

// The Montesinos 4x4 model; valid for every pretzel knot.
SurgeryPresentation montesinos_presentation(const PretzelKnot& k);

// Two-component model obtained by sliding the other two curves over parameter `pivot`.
SurgeryPresentation reduced_presentation(const PretzelKnot& k, int pivot);

struct FiniteAbelianGroup {
    std::vector<BigInt> factors;  // invariant factors > 1, each dividing the next
    IntMatrix to_invariant;       // factors.size() x meridians: meridian j -> coordinates
    IntMatrix from_invariant;     // meridians x factors.size(): generator i as a meridian vector

    BigInt order() const;
    std::size_t rank() const { return factors.size(); }
    std::vector<BigInt> reduce(std::vector<BigInt> coords) const;
    std::vector<BigInt> coordinates_of_meridians(const std::vector<BigInt>& meridian_vector) const;
};

FiniteAbelianGroup homology(const SurgeryPresentation& pres);

struct LinkingForm {
    RatMatrix table;  // -A^{-1} with entries reduced to [0, 1)

    Rational value(const std::vector<BigInt>& x, const std::vector<BigInt>& y) const;
};

Rational frac(const Rational& x);

LinkingForm linking_form(const SurgeryPresentation& pres);

// Linking of two elements given in invariant-factor coordinates.
Rational linking(const FiniteAbelianGroup& g, const LinkingForm& lf, const std::vector<BigInt>& x,
                 const std::vector<BigInt>& y);

struct Character {
    long modulus = 1;
    std::vector<long> images;  // one per meridian label, reduced to [0, modulus)

    bool trivial() const;
    friend bool operator==(const Character&, const Character&) = default;
};

std::string to_string(const Character& c, char sep = ',');

Character make_character(long modulus, std::vector<long> images);
bool is_valid_character(const SurgeryPresentation& pres, const Character& c);
Character multiple(const Character& c, long k);
long order_of(const Character& c);

std::vector<Character> characters(const SurgeryPresentation& pres, long m);

// Value of a character on an element given in invariant-factor coordinates.
long evaluate(const FiniteAbelianGroup& g, const Character& c, const std::vector<BigInt>& coords);

struct Metabolizer {
    long prime = 0;  // 0 when assembled across all primes
    std::vector<std::vector<BigInt>> generators;  // invariant-factor coordinates
    BigInt order;
};

struct MetabolizerOptions {
    BigInt max_group_order = 1000000;
};

// Metabolizers of the prime-primary part of H_1.
std::vector<Metabolizer> primary_metabolizers(const FiniteAbelianGroup& g, const LinkingForm& lf, long prime,
                                              const MetabolizerOptions& opt = {});

std::vector<Metabolizer> metabolizers(const FiniteAbelianGroup& g, const LinkingForm& lf,
                                      const MetabolizerOptions& opt = {});

bool vanishes_on(const FiniteAbelianGroup& g, const Character& c, const Metabolizer& m);
bool is_isotropic(const FiniteAbelianGroup& g, const LinkingForm& lf, const Metabolizer& m);

// Montesinos character (eps, a, b, c) <-> two-component character.
Character reduced_from_montesinos(const PretzelKnot& k, int pivot, const Character& chi);
Character montesinos_from_reduced(const PretzelKnot& k, int pivot, const Character& chi);

// dim over Q(w) of the chi-eigenspace of H_1 of the cyclic cover, chi of prime order d,
// given on the Montesinos model.
long cover_h1_dim_closed_form(const PretzelKnot& k, const Character& chi);
long cover_h1_dim_reidemeister_schreier(const PretzelKnot& k, const Character& chi);

struct CoverDimOptions {
    long cross_check_max_prime = 13;
};

long cover_h1_dim(const PretzelKnot& k, const Character& chi, const CoverDimOptions& opt = {});

std::vector<long> prime_factors(BigInt n);
bool is_prime(long n);

}  // namespace pk
