#include "kappau/ec.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace kappau {

long long frobenius_trace(const FqCurve& E) {
    const auto& F = *E.K.F;
    const auto disc_core = F.sub(F.mul(E.A, E.A), F.mul(F.from_int(4), E.B));
    if (F.is_zero(E.B) || F.is_zero(disc_core))
        throw domain_error("frobenius_trace on a singular curve");
    long long s = 0;
    for (uint64_t i = 0; i < F.size(); ++i) {
        const Fe x = F.from_id(i);
        const Fe fx = F.mul(x, F.add(F.mul(x, F.add(x, E.A)), E.B));
        s += F.quad_char(fx);
    }
    return -s;
}

CurveInvariants invariants(const RatCurve& E) {
    const auto& O = E.K;
    const Rat A2 = O.mul(E.A, E.A);
    const Rat delta_core = O.sub(A2, O.mul(O.from_int(4), E.B));  // A^2-4B
    if (O.is_zero(E.B) || O.is_zero(delta_core))
        throw domain_error("singular curve: B(A^2-4B) = 0");
    CurveInvariants I;
    I.delta = O.mul(O.from_int(16), O.mul(O.mul(E.B, E.B), delta_core));
    I.c4 = O.mul(O.from_int(16), O.sub(A2, O.mul(O.from_int(3), E.B)));
    I.c6 = O.mul(O.from_int(-32),
                 O.mul(E.A, O.sub(O.mul(O.from_int(2), A2), O.mul(O.from_int(9), E.B))));
    I.j = O.div(O.mul(I.c4, O.mul(I.c4, I.c4)), I.delta);
    return I;
}

const char* red_type_name(RedType t) {
    switch (t) {
        case RedType::Good: return "good";
        case RedType::SplitMult: return "split multiplicative";
        case RedType::NonsplitMult: return "nonsplit multiplicative";
        case RedType::AdditivePotGood: return "additive (potentially good)";
        case RedType::AdditivePotMult: return "additive (potentially multiplicative)";
    }
    return "?";
}

LocalInfo local_info(const RatCurve& E, const Place& v) {
    const auto& O = E.K;
    const CurveInvariants I = invariants(E);

    LocalInfo L;
    L.v = v;
    L.ord_delta = ord_at(O, v, I.delta);
    L.ord_c4 = ord_at(O, v, I.c4);
    L.ord_c6 = ord_at(O, v, I.c6);
    L.ord_j = ord_at(O, v, I.j);

    // chi_v(c) for a constant c from kappa: the residue-field norm raises c
    // to deg(v), so only the parity of the degree matters.  Computing it
    // this way keeps places of large degree cheap.
    const auto chi_of_int = [&](long long n) {
        return sign_pow(O.R.K.F->quad_char(O.R.K.F->from_int(n)),
                        static_cast<long long>(place_degree(O, v)));
    };

    if (L.ord_j >= 0) {  // potentially good (includes j = 0 with ord +inf)
        const long long r = ((L.ord_delta % 12) + 12) % 12;
        if (r == 0) {
            L.type = RedType::Good;
            L.w = 1;
            return L;
        }
        L.type = RedType::AdditivePotGood;
        const unsigned e = static_cast<unsigned>(12 / std::gcd(r, 12ll));
        L.ram_index = e;
        if (e == 12)
            throw domain_error("ramification degree 12 not supported");
        if (O.R.K.F->p() == 3 && e % 3 == 0)
            throw domain_error("wild ramification (3 | e) at characteristic 3 not supported");
        switch (e) {
            case 2:
            case 6: L.w = chi_of_int(-1); break;
            case 3: L.w = chi_of_int(-3); break;
            case 4: L.w = chi_of_int(-2); break;
            default: throw domain_error("unexpected ramification degree");
        }
        return L;
    }

    // potentially multiplicative; c6 != 0 here since c6 = 0 forces j in {0,1728}
    assert(!O.is_zero(I.c6));
    if (((L.ord_c4 % 4) + 4) % 4 == 0) {
        const bool split = is_square_at(O, v, O.neg(I.c6));
        L.type = split ? RedType::SplitMult : RedType::NonsplitMult;
        L.w = split ? -1 : 1;
    } else {
        L.type = RedType::AdditivePotMult;
        L.w = chi_of_int(-1);
    }
    return L;
}

std::vector<Place> bad_place_candidates(const RatCurve& E) {
    const auto& O = E.K;
    const CurveInvariants I = invariants(E);
    std::vector<FqPoly> polys = {I.delta.num, I.delta.den, E.A.den, E.B.den};
    std::vector<Place> out;
    for (const auto& P : polys) {
        if (O.R.is_constant(P)) continue;
        for (const auto& part : factor(O.R, P).parts)
            out.push_back(Place::finite(part.base));
    }
    std::sort(out.begin(), out.end(),
              [&](const Place& a, const Place& b) { return place_less(O, a, b); });
    out.erase(std::unique(out.begin(), out.end(),
                          [&](const Place& a, const Place& b) { return place_eq(O, a, b); }),
              out.end());
    out.push_back(Place::at_infinity());
    return out;
}

std::vector<LocalInfo> reduction_survey(const RatCurve& E) {
    std::vector<LocalInfo> out;
    for (const Place& v : bad_place_candidates(E)) out.push_back(local_info(E, v));
    return out;
}

int global_root_number(const RatCurve& E) {
    int w = 1;
    for (const Place& v : bad_place_candidates(E)) w *= local_info(E, v).w;
    return w;
}

FqCurve reduce_curve(const RatCurve& E, const Completion& C) {
    const auto& O = E.K;
    if (ord_at(O, C.v, E.A) < 0 || ord_at(O, C.v, E.B) < 0)
        throw domain_error("model not integral at the reduction place");
    FqOps K{C.Fv};
    const Fe A = reduce_at(O, C, E.A);
    const Fe B = reduce_at(O, C, E.B);
    return make_curve(K, A, B);  // throws if the reduction is singular
}

FqPoint reduce_point(const RatCurve& E, const Completion& C, const RatPoint& P) {
    const auto& O = E.K;
    if (P.at_inf) return FqPoint{};
    if (ord_at(O, C.v, P.x) < 0 || ord_at(O, C.v, P.y) < 0) return FqPoint{};
    return FqPoint{false, reduce_at(O, C, P.x), reduce_at(O, C, P.y)};
}

const char* quartic_type_name(QuarticType t) {
    switch (t) {
        case QuarticType::Reducible: return "reducible";
        case QuarticType::V4: return "V4";
        case QuarticType::C4: return "C4";
        case QuarticType::D4: return "D4";
    }
    return "?";
}

QuarticReport biquadratic_galois(const RatOps& O, const Rat& a, const Rat& b) {
    const Rat disc_core = O.sub(O.mul(a, a), O.mul(O.from_int(4), b));  // a^2-4b
    if (O.is_zero(b) || O.is_zero(disc_core))
        throw domain_error("inseparable biquadratic: b(a^2-4b) = 0");
    if (rat_is_square(O, disc_core)) return {QuarticType::Reducible, {}};
    if (rat_is_square(O, b)) {
        const Rat beta = *rat_sqrt(O, b);
        const Rat two_beta = O.mul(O.from_int(2), beta);
        if (rat_is_square(O, O.sub(two_beta, a)) ||
            rat_is_square(O, O.sub(O.neg(two_beta), a)))
            return {QuarticType::Reducible, {}};
        return {QuarticType::V4, {}};
    }
    const Rat prod = O.mul(b, disc_core);
    if (rat_is_square(O, prod)) return {QuarticType::C4, {}};
    return {QuarticType::D4, {disc_core, b, prod}};
}

bool independent_mod_squares(const RatOps& O, const std::vector<Rat>& xs) {
    if (xs.size() > 20) throw domain_error("too many elements for subset check");
    for (const Rat& x : xs)
        if (O.is_zero(x)) throw domain_error("independence check on zero");
    for (uint32_t mask = 1; mask < (1u << xs.size()); ++mask) {
        Rat prod = O.one();
        for (size_t i = 0; i < xs.size(); ++i)
            if (mask & (1u << i)) prod = O.mul(prod, xs[i]);
        if (rat_is_square(O, prod)) return false;
    }
    return true;
}

OrderCertificate order_certificate(const RatCurve& E, const RatPoint& P,
                                   unsigned max_doublings) {
    const auto& O = E.K;
    if (!on_curve(E, P)) throw domain_error("point is not on the curve");
    OrderCertificate cert;
    if (P.at_inf) {
        cert.kind = OrderCertificate::Kind::Torsion;
        cert.doublings = 0;
        cert.detail = "the point is the identity";
        return cert;
    }
    const CurveInvariants I = invariants(E);
    if (rat_is_pth_power(O, I.j)) {
        cert.detail = "j-invariant is a p-th power; kernel-of-reduction argument unavailable";
        return cert;
    }
    // integral model: x -> gamma^2 x, y -> gamma^3 y with gamma = den(A) den(B)
    const Rat gamma = O.from_ring(O.R.mul(E.A.den, E.B.den));
    const Rat g2 = O.mul(gamma, gamma);
    const RatCurve Ei = make_curve(O, O.mul(E.A, g2), O.mul(E.B, O.mul(g2, g2)));
    RatPoint Q{false, O.mul(P.x, g2), O.mul(P.y, O.mul(g2, gamma))};
    assert(on_curve(Ei, Q));

    for (unsigned k = 0; k <= max_doublings; ++k) {
        if (Q.at_inf) {
            cert.kind = OrderCertificate::Kind::Torsion;
            cert.doublings = k;
            cert.detail = "doubling " + std::to_string(k) + " times reaches the identity";
            return cert;
        }
        // A pole of x on the integral model puts the point in the formal
        // group at that place; no prime-to-p torsion lives there, and the
        // j precondition rules out p-torsion globally.
        std::vector<Place> poles;
        if (!O.R.is_constant(Q.x.den))
            for (const auto& part : factor(O.R, Q.x.den).parts)
                poles.push_back(Place::finite(part.base));
        std::sort(poles.begin(), poles.end(),
                  [&](const Place& a, const Place& b) { return place_less(O, a, b); });
        if (!poles.empty()) {
            cert.kind = OrderCertificate::Kind::InfiniteOrder;
            cert.doublings = k;
            cert.witness = poles.front();
            cert.detail = "after " + std::to_string(k) +
                          " doublings the x-coordinate has a pole at " +
                          place_to_string(O, poles.front());
            return cert;
        }
        Q = ec_dbl(Ei, Q);
    }
    cert.detail = "no decision within " + std::to_string(max_doublings) + " doublings";
    return cert;
}

}  // namespace kappau
