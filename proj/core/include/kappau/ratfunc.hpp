#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kappau/upoly.hpp"

namespace kappau {

// The rational function field kappa(u) as the fraction field of kappa[u].
using RatOps = FracOps<FqPolyOps>;
using Rat = RatOps::Elem;

inline RatOps rat_field(FqPtr F, std::string var = "u") {
    return RatOps{poly_ring(std::move(F), std::move(var))};
}

// A place of kappa(u): either a monic irreducible polynomial or the place at
// infinity (uniformizer 1/u).
struct Place {
    bool infinite = false;
    FqPoly pi;  // only meaningful for finite places

    static Place at_infinity() { return Place{true, {}}; }
    static Place finite(FqPoly pi_) { return Place{false, std::move(pi_)}; }
};

// Constructs a finite place, validating monic irreducibility.
Place finite_place(const RatOps& O, FqPoly pi);

unsigned place_degree(const RatOps& O, const Place& v);
bool place_eq(const RatOps& O, const Place& a, const Place& b);
// Finite places in canonical polynomial order, then infinity.
bool place_less(const RatOps& O, const Place& a, const Place& b);
std::string place_to_string(const RatOps& O, const Place& v);

// Valuation of f at v; ord of 0 is the +infinity sentinel kOrdInf.
long long ord_at(const RatOps& O, const Place& v, const Rat& f);

// Residue field data for computing in the completion at a place.
struct Completion {
    Place v;
    FqPtr Fv;      // residue field (an extension of kappa, or kappa itself)
    Fe u_image;    // image of the variable; unused for the infinite place
};
Completion completion(const RatOps& O, Place v);

// The residue in Fv of f * pi_v^{-ord_v(f)}: the leading coefficient of the
// local expansion.  f must be nonzero.
Fe unit_residue(const RatOps& O, const Completion& C, const Rat& f);

// Whether nonzero f is a square in the completion at v: even valuation and
// square unit residue (Hensel, odd residue characteristic).  f = 0 counts
// as a square.
bool is_square_in_completion(const RatOps& O, const Completion& C, const Rat& f);

// Same predicate, but without constructing the residue field: the unit
// residue is a square in GF(q^d) iff its norm down to kappa is a square in
// kappa, and the norm is a product of Frobenius conjugates computed modulo
// pi.  Usable at places of any degree.
bool is_square_at(const RatOps& O, const Place& v, const Rat& f);

// Quadratic character of the image in Fv of a constant a in kappa.  Also
// verifies the norm-compatibility chi_v(a) = chi_kappa(a)^{deg v}.
int chi_at(const RatOps& O, const Completion& C, const Fe& a);

// Reduction of f at v, defined when ord_v(f) >= 0: unit residue, or 0 for
// positive valuation.
Fe reduce_at(const RatOps& O, const Completion& C, const Rat& f);

// max(deg num, deg den); height of 0 is 0.
int height(const RatOps& O, const Rat& f);

bool rat_is_square(const RatOps& O, const Rat& f);
std::optional<Rat> rat_sqrt(const RatOps& O, const Rat& f);

// Whether f lies in kappa(u^p), i.e. f = g^p for some g (Frobenius).
bool rat_is_pth_power(const RatOps& O, const Rat& f);

// All places where f has nonzero valuation (zeros and poles), finite ones in
// canonical order, infinity appended when ord differs from 0.
std::vector<Place> support(const RatOps& O, const Rat& f);

}  // namespace kappau
