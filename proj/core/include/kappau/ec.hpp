#pragma once

#include <string>
#include <vector>

#include "kappau/ratfunc.hpp"

namespace kappau {

// The curve y^2 = x^3 + A x^2 + B x over a field given by an ops bundle.
// Nonsingular iff B(A^2 - 4B) != 0.
template <class Ops>
struct CurveT {
    Ops K;
    typename Ops::Elem A, B;
};

template <class Ops>
struct PointT {
    bool at_inf = true;
    typename Ops::Elem x{}, y{};
};

template <class Ops>
CurveT<Ops> make_curve(Ops K, typename Ops::Elem A, typename Ops::Elem B) {
    const auto disc_core =
        K.sub(K.mul(A, A), K.mul(K.from_int(4), B));  // A^2 - 4B
    if (K.is_zero(B) || K.is_zero(disc_core))
        throw domain_error("singular curve: B(A^2-4B) = 0");
    return CurveT<Ops>{std::move(K), std::move(A), std::move(B)};
}

template <class Ops>
PointT<Ops> make_point(const CurveT<Ops>& E, typename Ops::Elem x, typename Ops::Elem y) {
    return PointT<Ops>{false, std::move(x), std::move(y)};
}

template <class Ops>
bool on_curve(const CurveT<Ops>& E, const PointT<Ops>& P) {
    if (P.at_inf) return true;
    const auto& K = E.K;
    const auto rhs = K.mul(P.x, K.add(K.mul(P.x, K.add(P.x, E.A)), E.B));
    return K.eq(K.mul(P.y, P.y), rhs);
}

template <class Ops>
PointT<Ops> ec_neg(const CurveT<Ops>& E, const PointT<Ops>& P) {
    if (P.at_inf) return P;
    return PointT<Ops>{false, P.x, E.K.neg(P.y)};
}

template <class Ops>
PointT<Ops> ec_add(const CurveT<Ops>& E, const PointT<Ops>& P, const PointT<Ops>& Q) {
    const auto& K = E.K;
    if (P.at_inf) return Q;
    if (Q.at_inf) return P;
    typename Ops::Elem lambda;
    if (K.eq(P.x, Q.x)) {
        if (K.eq(P.y, K.neg(Q.y))) return PointT<Ops>{};  // includes 2-torsion
        // tangent: (3x^2 + 2Ax + B) / 2y
        const auto num = K.add(K.add(K.mul(K.from_int(3), K.mul(P.x, P.x)),
                                     K.mul(K.from_int(2), K.mul(E.A, P.x))),
                               E.B);
        lambda = K.div(num, K.mul(K.from_int(2), P.y));
    } else {
        lambda = K.div(K.sub(Q.y, P.y), K.sub(Q.x, P.x));
    }
    auto x3 = K.sub(K.sub(K.sub(K.mul(lambda, lambda), E.A), P.x), Q.x);
    auto y3 = K.sub(K.mul(lambda, K.sub(P.x, x3)), P.y);
    return PointT<Ops>{false, std::move(x3), std::move(y3)};
}

template <class Ops>
PointT<Ops> ec_dbl(const CurveT<Ops>& E, const PointT<Ops>& P) {
    return ec_add(E, P, P);
}

template <class Ops>
PointT<Ops> ec_mul(const CurveT<Ops>& E, uint64_t n, PointT<Ops> P) {
    PointT<Ops> R;
    while (n) {
        if (n & 1) R = ec_add(E, R, P);
        P = ec_dbl(E, P);
        n >>= 1;
    }
    return R;
}

using FqCurve = CurveT<FqOps>;
using FqPoint = PointT<FqOps>;
using RatCurve = CurveT<RatOps>;
using RatPoint = PointT<RatOps>;

// Trace of Frobenius a_q with #E(F_q) = q + 1 - a_q, via the character sum
// a_q = -sum_x chi(x^3 + A x^2 + B x).
long long frobenius_trace(const FqCurve& E);

// Standard invariants of y^2 = x^3 + Ax^2 + Bx:
//   Delta = 16 B^2 (A^2-4B),  c4 = 16(A^2-3B),  c6 = -32A(2A^2-9B),  j = c4^3/Delta.
struct CurveInvariants {
    Rat delta, c4, c6, j;
};
CurveInvariants invariants(const RatCurve& E);

enum class RedType { Good, SplitMult, NonsplitMult, AdditivePotGood, AdditivePotMult };
const char* red_type_name(RedType t);

// Local data at one place: valuations of the invariants, reduction type, the
// ramification degree e of the potentially-good additive case, and the local
// root number.  All criteria are model-independent (valuations mod 12 / mod 4
// and completion square classes).
struct LocalInfo {
    Place v;
    RedType type = RedType::Good;
    long long ord_delta = 0, ord_c4 = 0, ord_c6 = 0, ord_j = 0;
    unsigned ram_index = 1;
    int w = 1;
};
LocalInfo local_info(const RatCurve& E, const Place& v);

// Places that can possibly be bad: support of Delta plus poles of A and B,
// plus infinity.  Sorted canonically, deduplicated.
std::vector<Place> bad_place_candidates(const RatCurve& E);

// local_info at every candidate place (others are good with w = +1).
std::vector<LocalInfo> reduction_survey(const RatCurve& E);

// Product of local root numbers over all places.
int global_root_number(const RatCurve& E);

// Reduction at a place where the model is integral with good reduction.
FqCurve reduce_curve(const RatCurve& E, const Completion& C);
FqPoint reduce_point(const RatCurve& E, const Completion& C, const RatPoint& P);

// Galois group of X^4 + aX^2 + b over kappa(u) (requires b(a^2-4b) != 0).
enum class QuarticType { Reducible, V4, C4, D4 };
const char* quartic_type_name(QuarticType t);
struct QuarticReport {
    QuarticType type;
    std::vector<Rat> radicands;  // D4: {a^2-4b, b, b(a^2-4b)}
};
QuarticReport biquadratic_galois(const RatOps& O, const Rat& a, const Rat& b);

// True when no product over a nonempty subset is a square in kappa(u).
bool independent_mod_squares(const RatOps& O, const std::vector<Rat>& xs);

// Verdict on the order of a rational point, by doubling on an integral model
// and watching for finite poles of x.  A pole puts that multiple in the formal
// group at the place; the formal group over a complete local domain has no
// prime-to-p torsion, and requiring that j not be a p-th power rules out
// p-torsion on the curve.
struct OrderCertificate {
    enum class Kind { InfiniteOrder, Torsion, Inconclusive };
    Kind kind = Kind::Inconclusive;
    unsigned doublings = 0;  // stage k: the witness is [2^k]P
    Place witness;           // infinite-order case: finite place where x has a pole
    std::string detail;
};
OrderCertificate order_certificate(const RatCurve& E, const RatPoint& P,
                                   unsigned max_doublings = 8);

}  // namespace kappau
