#include "kappau/family.hpp"

#include <atomic>
#include <thread>

namespace kappau {

Family make_family(RatOps O, Fe c, Fe d) {
    if (O.R.K.F->is_zero(c) || O.R.K.F->is_zero(d))
        throw domain_error("family parameters c, d must be units");
    return Family{std::move(O), std::move(c), std::move(d)};
}

Family make_family(FqPtr F, long long c, long long d) {
    auto O = rat_field(F);
    const Fe ce = F->from_int(c), de = F->from_int(d);
    return make_family(std::move(O), ce, de);
}

Rat family_A(const Family& fam, const Rat& t) {
    const auto& O = fam.O;
    const uint64_t p = O.R.K.F->p();
    const Rat cpart = O.mul(O.from_ring(O.R.constant(fam.c)), O.pow(t, 2 * p));
    const Rat dpart = O.mul(O.from_ring(O.R.constant(fam.d)), O.from_ring(O.R.X()));
    return O.add(cpart, dpart);
}

RatCurve family_curve(const Family& fam, const Rat& t) {
    const auto& O = fam.O;
    const Rat A = family_A(fam, t);
    if (O.is_zero(A)) throw domain_error("singular fiber: A = 0");
    const Rat B = O.neg(O.mul(A, O.mul(A, A)));
    return make_curve(O, A, B);  // also rejects 1 + 4A = 0
}

RatPoint family_section_P(const Family& fam, const Rat& t) {
    const auto& O = fam.O;
    const Rat A = family_A(fam, t);
    return RatPoint{false, O.neg(A), O.mul(A, A)};
}

RatPoint family_section_Q(const Family& fam, const Rat& t) {
    const auto& O = fam.O;
    const Rat A = family_A(fam, t);
    return RatPoint{false, O.mul(A, A), O.mul(A, O.mul(A, A))};
}

int family_w_closed(const Family& fam, const Rat& t) {
    return ord_at(fam.O, Place::at_infinity(), t) >= 0 ? -1 : 1;
}

int family_w_mu(const Family& fam, const Rat& t) {
    const auto& R = fam.O.R;
    const auto& F = *R.K.F;
    const FqPoly& g1 = t.num;
    const FqPoly& g2 = t.den;
    const uint64_t p = F.p();
    // f = 4c g1^{2p} + (4du+1) g2^{2p}
    const FqPoly lin = R.from_coeffs({F.one(), F.mul(F.from_int(4), fam.d)});
    FqPoly f = R.add(R.scale(F.mul(F.from_int(4), fam.c), R.pow(g1, 2 * p)),
                     R.mul(lin, R.pow(g2, 2 * p)));
    // f' = 4d g2^{2p}, so f is squarefree whenever gcd(g1,g2)=1; check anyway
    if (R.deg(R.gcd_monic(f, R.derivative(f))) != 0)
        throw domain_error("unexpected repeated factor in the root number form");
    const int n = std::max(R.deg(g1), R.deg(g2));  // deg g2 >= 0, so finite
    return sign_pow(F.quad_char(F.from_int(-1)), n) * moebius(R, f);
}

int family_w_product(const Family& fam, const Rat& t) {
    return global_root_number(family_curve(fam, t));
}

FqPoly chowla_poly(const FqPolyOps& R, const Fe& a, const Fe& b,
                   const FqPoly& g1, const FqPoly& g2, unsigned e) {
    if (e != 2 && e != 4) throw domain_error("exponent multiplier must be 2 or 4");
    const uint64_t ep = e * R.K.F->p();
    return R.add(R.scale(a, R.pow(g1, ep)),
                 R.scale(b, R.mul(R.X(), R.pow(g2, ep))));
}

int chowla_mu_closed(const FqPolyOps& R, const Fe& a, const Fe& b,
                     const FqPoly& g1, const FqPoly& g2) {
    const auto& F = *R.K.F;
    if (F.is_zero(a) || F.is_zero(b)) throw domain_error("coefficients must be units");
    if (R.is_zero(g1) && R.is_zero(g2)) throw domain_error("g1 = g2 = 0");
    if (R.deg(R.gcd_monic(g1, g2)) > 0)
        throw domain_error("g1, g2 must be coprime for the mu form");
    const int chim1 = F.quad_char(F.from_int(-1));
    const int n1 = R.deg(g1), n2 = R.deg(g2);
    if (n1 <= n2) return -sign_pow(chim1, n2);
    return sign_pow(chim1, n1);
}

int chowla_lambda_closed(const FqPolyOps& R, const Fe& a, const Fe& b,
                         const FqPoly& g1, const FqPoly& g2) {
    const auto& F = *R.K.F;
    if (F.is_zero(a) || F.is_zero(b)) throw domain_error("coefficients must be units");
    if (R.is_zero(g1) && R.is_zero(g2)) throw domain_error("g1 = g2 = 0");
    return R.deg(g1) <= R.deg(g2) ? -1 : 1;
}

PiPair pi_polys(const Family& fam, const FqPoly& u0) {
    const auto& R = fam.O.R;
    auto rf = residue_field(R, u0);
    PiPair P;
    P.kappa0 = rf.field;
    P.uhat = rf.u_image;
    P.ring = FqPolyOps{FqOps{rf.field}, "T"};
    const auto& F0 = *rf.field;
    const uint64_t p = F0.p();
    const Fe croot = F0.pth_root(F0.embed_base(fam.c));
    const Fe duroot = F0.pth_root(F0.mul(F0.embed_base(fam.d), P.uhat));
    // (T^2 + uhat)^2
    const FqPoly base = P.ring.from_coeffs({P.uhat, F0.zero(), F0.one()});
    P.pi1 = P.ring.add(P.ring.scale(croot, P.ring.mul(base, base)),
                       P.ring.constant(duroot));
    P.pi2 = P.ring.add(P.ring.one(), P.ring.scale(F0.from_int(4), P.pi1));
    // pi1^p must equal c (T^2+uhat)^{2p} + d uhat
    const FqPoly direct =
        P.ring.add(P.ring.scale(F0.embed_base(fam.c), P.ring.pow(base, 2 * p)),
                   P.ring.constant(F0.mul(F0.embed_base(fam.d), P.uhat)));
    if (!P.ring.eq(P.ring.pow(P.pi1, p), direct))
        throw domain_error("Frobenius root identity failed for pi1");
    return P;
}

ScanResult scan_u0(const Family& fam, unsigned min_deg, unsigned max_deg,
                   unsigned threads) {
    const auto& R = fam.O.R;
    std::vector<FqPoly> candidates;
    for (unsigned d = min_deg; d <= max_deg; ++d)
        for (auto& pi : monic_irreducibles(R, d)) candidates.push_back(std::move(pi));

    if (threads == 0) threads = 1;
    std::vector<char> is_hit(candidates.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= candidates.size()) return;
            PiPair P = pi_polys(fam, candidates[i]);
            is_hit[i] = is_irreducible(P.ring, P.pi1) && is_irreducible(P.ring, P.pi2);
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    ScanResult out;
    out.tested = candidates.size();
    for (size_t i = 0; i < candidates.size(); ++i) {
        if (!is_hit[i]) continue;
        ScanHit hit;
        hit.u0 = candidates[i];
        hit.deg = static_cast<unsigned>(R.deg(candidates[i]));
        hit.pis = pi_polys(fam, candidates[i]);
        out.hits.push_back(std::move(hit));
    }
    return out;
}

HitVerification verify_hit(const Family& fam, const ScanHit& hit) {
    const auto& P = hit.pis;
    const auto O0 = RatOps{P.ring};
    const long long p = static_cast<long long>(P.kappa0->p());
    auto fail = [&](const std::string& why) { return HitVerification{false, why}; };

    const Rat A0 = O0.from_ring(P.ring.pow(P.pi1, static_cast<uint64_t>(p)));
    RatCurve E = make_curve(O0, A0, O0.neg(O0.pow(A0, 3)));
    const FqPoly pi1m = P.ring.make_monic(P.pi1);
    const FqPoly pi2m = P.ring.make_monic(P.pi2);

    for (const LocalInfo& L : reduction_survey(E)) {
        if (L.v.infinite) {
            if (L.type != RedType::Good) return fail("expected good reduction at infinity");
            if (L.ord_delta != -36 * p)
                return fail("unexpected ord(Delta) at infinity");
        } else if (P.ring.eq(L.v.pi, pi1m)) {
            if (L.type != RedType::AdditivePotMult)
                return fail("expected additive reduction at pi1");
            if (L.ord_delta != 8 * p || L.ord_c4 != 2 * p || L.ord_j != -2 * p)
                return fail("unexpected valuations at pi1");
        } else if (P.ring.eq(L.v.pi, pi2m)) {
            if (L.type != RedType::SplitMult && L.type != RedType::NonsplitMult)
                return fail("expected multiplicative reduction at pi2");
            if (L.ord_delta != p || L.ord_c4 != 0 || L.ord_j != -p)
                return fail("unexpected valuations at pi2");
        } else if (L.type != RedType::Good) {
            return fail("unexpected bad reduction at " + place_to_string(O0, L.v));
        }
    }
    return HitVerification{true, "reduction pattern as expected"};
}

FamilyQuartics family_quartics(const Family& fam) {
    const auto& O = fam.O;
    const auto& R = O.R;
    const auto& F = *R.K.F;
    const uint64_t p = F.p();
    FamilyQuartics Q;
    Q.a = O.from_ring(R.monomial(F.from_int(2), static_cast<unsigned>(p)));
    const Rat u2p = O.from_ring(R.monomial(F.one(), static_cast<unsigned>(2 * p)));
    const Rat du_over_c =
        O.from_ring(R.monomial(F.div(fam.d, fam.c), 1));
    Q.b1 = O.add(u2p, du_over_c);
    Q.b2 = O.add(Q.b1, O.from_ring(R.constant(F.inv(F.mul(F.from_int(4), fam.c)))));
    return Q;
}

std::vector<Rat> family_radicands(const Family& fam) {
    const auto& O = fam.O;
    const FamilyQuartics Q = family_quartics(fam);
    const Rat four = O.from_int(4);
    const Rat a2 = O.mul(Q.a, Q.a);
    return {Q.b1, O.sub(a2, O.mul(four, Q.b1)), Q.b2, O.sub(a2, O.mul(four, Q.b2))};
}

}  // namespace kappau
