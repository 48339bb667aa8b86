#include "kappau/ratfunc.hpp"

#include <algorithm>

namespace kappau {

namespace {

// Evaluate P at x in the residue field, embedding coefficients from kappa.
Fe eval_embedded(const FqPolyOps& R, const FqPoly& P, const FqPtr& Fv, const Fe& x) {
    Fe acc = Fv->zero();
    for (size_t i = P.c.size(); i-- > 0;)
        acc = Fv->add(Fv->mul(acc, x), Fv->embed_base(P.c[i]));
    return acc;
}

}  // namespace

Place finite_place(const RatOps& O, FqPoly pi) {
    const auto& R = O.R;
    if (!R.is_monic(pi) || !is_irreducible(R, pi))
        throw domain_error("finite place needs a monic irreducible polynomial");
    return Place::finite(std::move(pi));
}

unsigned place_degree(const RatOps& O, const Place& v) {
    return v.infinite ? 1u : static_cast<unsigned>(O.R.deg(v.pi));
}

bool place_eq(const RatOps& O, const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return false;
    return a.infinite || O.R.eq(a.pi, b.pi);
}

bool place_less(const RatOps& O, const Place& a, const Place& b) {
    if (a.infinite != b.infinite) return b.infinite;
    if (a.infinite) return false;
    return poly_less(O.R, a.pi, b.pi);
}

std::string place_to_string(const RatOps& O, const Place& v) {
    return v.infinite ? "inf" : O.R.to_string(v.pi);
}

long long ord_at(const RatOps& O, const Place& v, const Rat& f) {
    const auto& R = O.R;
    if (R.is_zero(f.num)) return kOrdInf;
    if (v.infinite) return R.deg(f.den) - R.deg(f.num);
    long long o = 0;
    if (R.is_zero(R.mod(f.num, v.pi))) o += R.remove_factor(f.num, v.pi).first;
    if (R.is_zero(R.mod(f.den, v.pi))) o -= R.remove_factor(f.den, v.pi).first;
    return o;
}

Completion completion(const RatOps& O, Place v) {
    if (v.infinite) return Completion{std::move(v), O.R.K.F, O.R.K.F->zero()};
    auto rf = residue_field(O.R, v.pi);
    return Completion{std::move(v), rf.field, rf.u_image};
}

Fe unit_residue(const RatOps& O, const Completion& C, const Rat& f) {
    const auto& R = O.R;
    if (R.is_zero(f.num)) throw domain_error("unit residue of zero");
    if (C.v.infinite)
        return C.Fv->div(C.Fv->embed_base(R.lead(f.num)), C.Fv->embed_base(R.lead(f.den)));
    FqPoly n = f.num, d = f.den;
    if (R.is_zero(R.mod(n, C.v.pi))) n = R.remove_factor(n, C.v.pi).second;
    if (R.is_zero(R.mod(d, C.v.pi))) d = R.remove_factor(d, C.v.pi).second;
    const Fe nv = eval_embedded(R, n, C.Fv, C.u_image);
    const Fe dv = eval_embedded(R, d, C.Fv, C.u_image);
    return C.Fv->div(nv, dv);
}

bool is_square_in_completion(const RatOps& O, const Completion& C, const Rat& f) {
    if (O.R.is_zero(f.num)) return true;
    const long long o = ord_at(O, C.v, f);
    if (o % 2 != 0) return false;
    return C.Fv->quad_char(unit_residue(O, C, f)) == 1;
}

bool is_square_at(const RatOps& O, const Place& v, const Rat& f) {
    const auto& R = O.R;
    const auto& F = R.K.F;
    if (R.is_zero(f.num)) return true;
    if (ord_at(O, v, f) % 2 != 0) return false;
    if (v.infinite)
        return F->quad_char(F->div(R.lead(f.num), R.lead(f.den))) == 1;
    // num/den and num*den have the same square class; stripping pi leaves a
    // unit whose residue r generates the same class as that of f.
    FqPoly m = R.mul(f.num, f.den);
    if (R.is_zero(R.mod(m, v.pi))) m = R.remove_factor(m, v.pi).second;
    const FqPoly r = R.mod(m, v.pi);
    const unsigned d = static_cast<unsigned>(R.deg(v.pi));
    FqPoly acc = r, cur = r;
    for (unsigned i = 1; i < d; ++i) {
        cur = R.powmod(cur, F->size(), v.pi);
        acc = R.mulmod(acc, cur, v.pi);
    }
    if (R.deg(acc) > 0)
        throw domain_error("norm of a residue landed outside the base field");
    return F->quad_char(acc.c.empty() ? F->zero() : acc.c[0]) == 1;
}

int chi_at(const RatOps& O, const Completion& C, const Fe& a) {
    const auto& kappa = O.R.K.F;
    const int direct = C.Fv->quad_char(C.Fv->embed_base(a));
    const int viabase = sign_pow(kappa->quad_char(a),
                                 static_cast<long long>(place_degree(O, C.v)));
    if (direct != viabase) throw domain_error("quadratic character norm mismatch");
    return direct;
}

Fe reduce_at(const RatOps& O, const Completion& C, const Rat& f) {
    if (O.R.is_zero(f.num)) return C.Fv->zero();
    const long long o = ord_at(O, C.v, f);
    if (o < 0) throw domain_error("reduction at a pole");
    if (o > 0) return C.Fv->zero();
    return unit_residue(O, C, f);
}

int height(const RatOps& O, const Rat& f) {
    if (O.R.is_zero(f.num)) return 0;
    return std::max(O.R.deg(f.num), O.R.deg(f.den));
}

bool rat_is_square(const RatOps& O, const Rat& f) {
    // reduced: num and den coprime, so f is a square iff num*den is
    return poly_is_square(O.R, O.R.mul(f.num, f.den));
}

std::optional<Rat> rat_sqrt(const RatOps& O, const Rat& f) {
    auto sn = poly_sqrt(O.R, f.num);
    auto sd = poly_sqrt(O.R, f.den);
    if (!sn || !sd) return std::nullopt;
    return O.make(*sn, *sd);
}

bool rat_is_pth_power(const RatOps& O, const Rat& f) {
    // reduced num/den are p-th powers iff their derivatives vanish (the unit
    // adjusts automatically: Frobenius is onto the constants)
    return O.R.is_zero(O.R.derivative(f.num)) && O.R.is_zero(O.R.derivative(f.den));
}

std::vector<Place> support(const RatOps& O, const Rat& f) {
    const auto& R = O.R;
    if (R.is_zero(f.num)) throw domain_error("support of zero");
    std::vector<Place> out;
    for (const auto& part : factor(R, f.num).parts) out.push_back(Place::finite(part.base));
    for (const auto& part : factor(R, f.den).parts) out.push_back(Place::finite(part.base));
    std::sort(out.begin(), out.end(),
              [&](const Place& a, const Place& b) { return place_less(O, a, b); });
    if (R.deg(f.num) != R.deg(f.den)) out.push_back(Place::at_infinity());
    return out;
}

}  // namespace kappau
