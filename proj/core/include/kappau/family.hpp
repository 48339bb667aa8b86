#pragma once

#include <string>
#include <vector>

#include "kappau/ec.hpp"

namespace kappau {

// The quadratic-twist family over kappa(u): for a parameter t in kappa(u),
//   A = c t^{2p} + d u,    E_t : y^2 = x^3 + A x^2 - A^3 x,
// where c, d are fixed units of kappa and p is the characteristic.
// E_t is singular exactly when A = 0 or 1 + 4A = 0.
struct Family {
    RatOps O;
    Fe c, d;
};

Family make_family(RatOps O, Fe c, Fe d);
Family make_family(FqPtr F, long long c, long long d);

Rat family_A(const Family& fam, const Rat& t);
RatCurve family_curve(const Family& fam, const Rat& t);

// The two standard sections (-A, A^2) and (A^2, A^3).
RatPoint family_section_P(const Family& fam, const Rat& t);
RatPoint family_section_Q(const Family& fam, const Rat& t);

// Root number of E_t, three independent ways (t = g1/g2 in lowest terms):
//   closed:   -1 when ord_inf(t) >= 0, +1 otherwise;
//   mu form:  chi(-1)^{max(deg g1, deg g2)} * mu(4c g1^{2p} + (4du+1) g2^{2p});
//   product:  product of local root numbers of E_t over all places.
int family_w_closed(const Family& fam, const Rat& t);
int family_w_mu(const Family& fam, const Rat& t);
int family_w_product(const Family& fam, const Rat& t);

// Closed forms for Moebius/Liouville of the twisted binary forms.
// mu(a g1^{2p} + b u g2^{2p}) for units a,b and coprime (g1,g2):
//   -chi(-1)^{deg g2} when deg g1 <= deg g2, else chi(-1)^{deg g1}.
int chowla_mu_closed(const FqPolyOps& R, const Fe& a, const Fe& b,
                     const FqPoly& g1, const FqPoly& g2);
// lambda(a g1^{4p} + b u g2^{4p}), any nonzero (g1,g2) (common factors drop
// out since lambda(w^{4p}) = +1):
//   -1 when deg g1 <= deg g2, else +1.
int chowla_lambda_closed(const FqPolyOps& R, const Fe& a, const Fe& b,
                         const FqPoly& g1, const FqPoly& g2);
// The explicit polynomial a g1^{ep} + b u g2^{ep} with e in {2, 4}.
FqPoly chowla_poly(const FqPolyOps& R, const Fe& a, const Fe& b,
                   const FqPoly& g1, const FqPoly& g2, unsigned e);

// Specialization data at a monic irreducible u0 over kappa.  kappa0 is the
// residue field, uhat the image of u, and over kappa0[T]:
//   pi1 = c^{1/p} (T^2 + uhat)^2 + (d uhat)^{1/p},    pi2 = 1 + 4 pi1,
// so that pi1^p = c (T^2+uhat)^{2p} + d uhat (checked) and pi2^p = 1 + 4 pi1^p.
struct PiPair {
    FqPtr kappa0;
    Fe uhat;
    FqPolyOps ring;  // kappa0[T]
    FqPoly pi1, pi2;
};
PiPair pi_polys(const Family& fam, const FqPoly& u0);

// Scan over monic irreducible u0 of degree in [min_deg, max_deg]; a hit is a
// u0 for which both pi1 and pi2 are irreducible over kappa0.
struct ScanHit {
    FqPoly u0;
    unsigned deg = 0;
    PiPair pis;
};
struct ScanResult {
    std::vector<ScanHit> hits;
    uint64_t tested = 0;
};
ScanResult scan_u0(const Family& fam, unsigned min_deg, unsigned max_deg,
                   unsigned threads = 1);

// Certifies the reduction pattern of the specialized curve over kappa0(T)
// with A0 = pi1^p: good everywhere away from pi1, pi2 (including infinity),
// multiplicative at pi2 with ord(Delta) = p, additive potentially
// multiplicative at pi1 with ord(Delta) = 8p.
struct HitVerification {
    bool ok = false;
    std::string detail;
};
HitVerification verify_hit(const Family& fam, const ScanHit& hit);

// The two biquadratics X^4 + a X^2 + b attached to the family:
//   a = 2u^p,  b1 = u^{2p} + du/c,  b2 = b1 + 1/(4c),
// with a^2-4b1 = -4du/c and a^2-4b2 = -(4du+1)/c.
struct FamilyQuartics {
    Rat a, b1, b2;
};
FamilyQuartics family_quartics(const Family& fam);

// {b1, a^2-4b1, b2, a^2-4b2}: pairwise and jointly nonsquare products keep
// the two quartic splitting fields independent.
std::vector<Rat> family_radicands(const Family& fam);

}  // namespace kappau
