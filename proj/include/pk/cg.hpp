#pragma once

#include "pk/double_cover.hpp"
#include "pk/link_sig.hpp"
#include "pk/pretzel.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace pk {

enum class Route { Satellite, Colored, ClosedForm };

std::string to_string(Route r);

// Characters passed to this module live on the Montesinos model: images (eps, a, b, c).
struct SigmaValue {
    Rational value;
    Route route = Route::Satellite;
    long k = 1;
    Character chi;
};

// Sign of the full-support closed form, fixed against the satellite route:
// sigma_1 = sigma(A) + kClosedFormSign * (2/d^2) (a(d-a)p + b(d-b)q + c(d-c)r).
inline constexpr int kClosedFormSign = -1;

struct FChi {
    BigInt value;
    long a = 0, b = 0, c = 0, eps = 0, d = 0;
};

struct SigmaOptions {
    SatelliteOptions satellite;
    int pivot = -1;  // two-component model for coherent cables; -1 picks the smallest braid
};

// Satellite formula on the Hopf-chain model with integer representatives m = (m0, ma, mb, mc).
Rational satellite_hopf_chain(const PretzelKnot& k, const std::array<long, 4>& reps, long d, long kk,
                              const SatelliteOptions& opt = {});

// Satellite formula on a two-component model. reps = (1, -1) or (-1, 1) is the lone antiparallel
// pair; two positive entries are coherent cables.
Rational satellite_two_component(const SurgeryPresentation& red, const std::array<long, 2>& reps, long d, long kk,
                                 const SatelliteOptions& opt = {});

SigmaValue sigma_satellite(const PretzelKnot& k, const Character& chi, long kk, const SigmaOptions& opt = {});

// Colored route on the Montesinos model (kind Odd4) or a two-component model.
SigmaValue sigma_colored(const PretzelKnot& k, const Character& chi, long kk = 1);
SigmaValue sigma_colored_reduced(const PretzelKnot& k, int pivot, const Character& chi, long kk = 1);

FChi f_chi(const PretzelKnot& k, const Character& chi);
SigmaValue sigma_fchi(const PretzelKnot& k, const Character& chi);

SigmaValue sigma_closed_form(const PretzelKnot& k, const Character& chi, long kk);

std::vector<SigmaValue> sigma_all_k(const PretzelKnot& k, const Character& chi, const SigmaOptions& opt = {});

// Cheapest exact route for the pipeline; empty when no recipe covers (chi, k).
std::optional<SigmaValue> evaluate_sigma(const PretzelKnot& k, const Character& chi, long kk);

// Lift of a residue to [0, m).
long lift(long x, long m);

}  // namespace pk
