#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kappau/fq.hpp"
#include "kappau/polyring.hpp"

namespace kappau {

using FqPolyOps = PolyOps<FqOps>;
using FqPoly = FqPolyOps::Elem;

inline FqPolyOps poly_ring(FqPtr F, std::string var = "u") {
    return FqPolyOps{FqOps{std::move(F)}, std::move(var)};
}

// One monic irreducible factor with its multiplicity.
struct PolyFactor {
    FqPoly base;
    unsigned mult = 0;
};

// P = unit * prod parts[i].base^parts[i].mult, parts sorted canonically.
// Factoring the zero polynomial throws.
struct Factorization {
    Fe unit;
    std::vector<PolyFactor> parts;
};

// Canonical total order: by degree, then coefficients compared at equal
// degree from the top coefficient down, by element id.
bool poly_less(const FqPolyOps& R, const FqPoly& a, const FqPoly& b);

// Complete factorization into monic irreducibles (distinct-degree plus
// Cantor-Zassenhaus splitting, with p-th-power content handled by Frobenius
// roots).  Deterministic for a fixed seed: the internal RNG is seeded from
// `seed` mixed with a hash of P, so results do not depend on call order.
Factorization factor(const FqPolyOps& R, const FqPoly& P, uint64_t seed = 0);

// Rabin irreducibility test.  Constants (and zero) are not irreducible;
// the leading coefficient is ignored.
bool is_irreducible(const FqPolyOps& R, const FqPoly& P);

// All monic irreducibles of exact degree `deg`, in canonical order.
std::vector<FqPoly> monic_irreducibles(const FqPolyOps& R, unsigned deg);

// Count of monic irreducibles of degree n over GF(q): (1/n) sum_{d|n} mu(d) q^{n/d}.
uint64_t count_monic_irreducibles(uint64_t q, unsigned n);

// Squarefree Moebius function: 0 if some factor repeats, else (-1)^{#factors}.
// Nonzero constants give +1; mu(0) = 0.
int moebius(const FqPolyOps& R, const FqPoly& P, uint64_t seed = 0);

// Same value through the discriminant: mu(P) = (-1)^{deg P} chi(disc P).
int moebius_disc(const FqPolyOps& R, const FqPoly& P);

// Completely multiplicative sign: (-1)^{number of irreducible factors with
// multiplicity}.  Nonzero constants give +1; lambda(0) = 0.
int liouville(const FqPolyOps& R, const FqPoly& P, uint64_t seed = 0);

// Whether P is the square of a polynomial (0 counts as a square): every
// multiplicity even and the leading coefficient a square in the field.
bool poly_is_square(const FqPolyOps& R, const FqPoly& P, uint64_t seed = 0);
std::optional<FqPoly> poly_sqrt(const FqPolyOps& R, const FqPoly& P, uint64_t seed = 0);

Fe resultant(const FqPolyOps& R, const FqPoly& P, const FqPoly& Q);
Fe discriminant(const FqPolyOps& R, const FqPoly& P);

// kappa[u]/(pi) for monic irreducible pi, with the image of the variable.
// Degree 1 returns the coefficient field itself (u -> -pi(0)); larger degrees
// build an extension whose generator is the class of the variable.
struct ResidueField {
    FqPtr field;
    Fe u_image;
};
ResidueField residue_field(const FqPolyOps& R, const FqPoly& pi);

// FNV-1a over the digit stream; used to derive per-polynomial RNG seeds.
uint64_t poly_hash(const FqPoly& P);

}  // namespace kappau
