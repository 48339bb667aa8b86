#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "kappau/common.hpp"

namespace kappau {

// Dense univariate polynomials over a coefficient field given by an ops
// bundle (FqOps, or a FracOps for rational-function coefficients).
// Representation: ascending coefficient vector with no trailing zeros; the
// zero polynomial is the empty vector.  PolyOps is itself an ops bundle, so
// Frac<PolyOps> is the fraction field and PolyOps<FracOps<...>> a polynomial
// ring over it.
template <class COps>
struct PolyOps {
    COps K;           // coefficient field
    std::string var;  // display name, e.g. "u" or "T"

    using Coeff = typename COps::Elem;
    struct Elem {
        std::vector<Coeff> c;
    };

    // --- construction ---
    Elem zero() const { return {}; }
    Elem one() const { return Elem{{K.one()}}; }
    Elem from_int(long long n) const { return constant(K.from_int(n)); }
    Elem constant(Coeff a) const {
        if (K.is_zero(a)) return {};
        return Elem{{std::move(a)}};
    }
    Elem X() const { return Elem{{K.zero(), K.one()}}; }
    Elem monomial(Coeff a, unsigned k) const {
        if (K.is_zero(a)) return {};
        Elem r;
        r.c.assign(k, K.zero());
        r.c.push_back(std::move(a));
        return r;
    }
    Elem from_coeffs(std::vector<Coeff> asc) const {
        Elem r{std::move(asc)};
        trim(r);
        return r;
    }

    // --- shape ---
    int deg(const Elem& a) const {
        return a.c.empty() ? kNegInfDeg : static_cast<int>(a.c.size()) - 1;
    }
    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool is_one(const Elem& a) const { return a.c.size() == 1 && K.is_one(a.c[0]); }
    bool is_constant(const Elem& a) const { return a.c.size() <= 1; }
    Coeff coeff(const Elem& a, size_t i) const {
        return i < a.c.size() ? a.c[i] : K.zero();
    }
    Coeff lead(const Elem& a) const {
        if (a.c.empty()) throw domain_error("lead of zero polynomial");
        return a.c.back();
    }
    bool is_monic(const Elem& a) const {
        return !a.c.empty() && K.is_one(a.c.back());
    }
    bool eq(const Elem& a, const Elem& b) const {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i)
            if (!K.eq(a.c[i], b.c[i])) return false;
        return true;
    }

    // --- ring operations ---
    Elem add(const Elem& a, const Elem& b) const {
        Elem r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
        for (size_t i = 0; i < r.c.size(); ++i)
            r.c[i] = K.add(coeff(a, i), coeff(b, i));
        trim(r);
        return r;
    }
    Elem sub(const Elem& a, const Elem& b) const {
        Elem r;
        r.c.resize(std::max(a.c.size(), b.c.size()), K.zero());
        for (size_t i = 0; i < r.c.size(); ++i)
            r.c[i] = K.sub(coeff(a, i), coeff(b, i));
        trim(r);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& x : r.c) x = K.neg(x);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.c.empty() || b.c.empty()) return {};
        Elem r;
        r.c.assign(a.c.size() + b.c.size() - 1, K.zero());
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (K.is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = K.add(r.c[i + j], K.mul(a.c[i], b.c[j]));
        }
        trim(r);
        return r;
    }
    Elem scale(const Coeff& s, const Elem& a) const {
        if (K.is_zero(s)) return {};
        Elem r = a;
        for (auto& x : r.c) x = K.mul(s, x);
        trim(r);
        return r;
    }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    // --- Euclidean structure ---
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        if (b.c.empty()) throw domain_error("polynomial division by zero");
        if (a.c.size() < b.c.size()) return {zero(), a};
        const Coeff linv = K.inv(b.c.back());
        Elem q, r = a;
        q.c.assign(a.c.size() - b.c.size() + 1, K.zero());
        while (r.c.size() >= b.c.size()) {
            const size_t shift = r.c.size() - b.c.size();
            const Coeff f = K.mul(r.c.back(), linv);
            q.c[shift] = f;
            for (size_t j = 0; j < b.c.size(); ++j)
                r.c[shift + j] = K.sub(r.c[shift + j], K.mul(f, b.c[j]));
            trim(r);
            if (r.c.empty()) break;
        }
        trim(q);
        return {std::move(q), std::move(r)};
    }
    Elem mod(const Elem& a, const Elem& b) const { return divmod(a, b).second; }
    Elem divexact(const Elem& a, const Elem& b) const {
        auto [q, r] = divmod(a, b);
        if (!r.c.empty()) throw domain_error("inexact polynomial division");
        return q;
    }
    bool divides(const Elem& b, const Elem& a) const {
        return divmod(a, b).second.c.empty();
    }
    Elem make_monic(const Elem& a) const {
        if (a.c.empty() || K.is_one(a.c.back())) return a;
        return scale(K.inv(a.c.back()), a);
    }
    Elem gcd_monic(Elem a, Elem b) const {
        while (!b.c.empty()) {
            Elem r = mod(a, b);
            a = std::move(b);
            b = std::move(r);
        }
        return make_monic(a);
    }
    // Largest k with f^k | a, plus the cofactor a / f^k.
    std::pair<unsigned, Elem> remove_factor(Elem a, const Elem& f) const {
        if (deg(f) < 1) throw domain_error("remove_factor needs deg >= 1");
        unsigned k = 0;
        for (;;) {
            auto [q, r] = divmod(a, f);
            if (!r.c.empty()) return {k, std::move(a)};
            ++k;
            a = std::move(q);
            if (a.c.empty()) throw domain_error("remove_factor of zero");
        }
    }

    // --- modular arithmetic ---
    Elem mulmod(const Elem& a, const Elem& b, const Elem& m) const {
        return mod(mul(a, b), m);
    }
    Elem powmod(Elem a, uint64_t e, const Elem& m) const {
        Elem r = mod(one(), m);
        a = mod(a, m);
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    }

    // --- calculus / evaluation ---
    Elem derivative(const Elem& a) const {
        if (a.c.size() <= 1) return {};
        Elem r;
        r.c.resize(a.c.size() - 1);
        for (size_t i = 1; i < a.c.size(); ++i) {
            Coeff n = K.from_int(static_cast<long long>(i));
            r.c[i - 1] = K.mul(n, a.c[i]);
        }
        trim(r);
        return r;
    }
    Coeff eval(const Elem& a, const Coeff& x) const {
        Coeff r = K.zero();
        for (size_t i = a.c.size(); i-- > 0;) r = K.add(K.mul(r, x), a.c[i]);
        return r;
    }
    // a(b(X)) by Horner in the polynomial ring.
    Elem compose(const Elem& a, const Elem& b) const {
        Elem r;
        for (size_t i = a.c.size(); i-- > 0;)
            r = add(mul(r, b), constant(a.c[i]));
        return r;
    }
    // X -> s*X (coefficientwise twist), used for variable scalings.
    Elem scale_arg(const Elem& a, const Coeff& s) const {
        Elem r = a;
        Coeff pw = K.one();
        for (size_t i = 0; i < r.c.size(); ++i) {
            r.c[i] = K.mul(r.c[i], pw);
            pw = K.mul(pw, s);
        }
        trim(r);
        return r;
    }

    // --- text ---
    std::string to_string(const Elem& a) const {
        if (a.c.empty()) return "0";
        std::string out;
        for (size_t i = a.c.size(); i-- > 0;) {
            if (K.is_zero(a.c[i])) continue;
            std::string cs = K.to_string(a.c[i]);
            const bool wrap = cs.find_first_of("+-*/^") != std::string::npos;
            std::string term;
            if (i == 0) {
                term = wrap ? "(" + cs + ")" : cs;
            } else {
                if (!K.is_one(a.c[i])) term = (wrap ? "(" + cs + ")" : cs) + "*";
                term += var;
                if (i > 1) term += "^" + std::to_string(i);
            }
            if (!out.empty()) out += "+";
            out += term;
        }
        return out;
    }

    bool same(const PolyOps& o) const { return K.same(o.K) && var == o.var; }

private:
    void trim(Elem& a) const {
        while (!a.c.empty() && K.is_zero(a.c.back())) a.c.pop_back();
    }
};

// Fraction field of a polynomial ring.  Elements are kept reduced: gcd of
// numerator and denominator is 1 and the denominator is monic, so equality is
// componentwise.  Zero is 0/1.
template <class ROps>
struct FracOps {
    ROps R;  // a PolyOps

    using RingElem = typename ROps::Elem;
    struct Elem {
        RingElem num, den;
    };

    Elem make(RingElem num, RingElem den) const {
        if (R.is_zero(den)) throw domain_error("zero denominator");
        if (R.is_zero(num)) return Elem{R.zero(), R.one()};
        RingElem g = R.gcd_monic(num, den);
        if (R.deg(g) > 0) {
            num = R.divexact(num, std::move(g));
            den = R.divexact(den, g);
        }
        const auto linv = R.K.inv(R.lead(den));
        if (!R.K.is_one(R.lead(den))) {
            num = R.scale(linv, num);
            den = R.scale(linv, den);
        }
        return Elem{std::move(num), std::move(den)};
    }
    Elem from_ring(RingElem n) const { return Elem{std::move(n), R.one()}; }

    Elem zero() const { return Elem{R.zero(), R.one()}; }
    Elem one() const { return Elem{R.one(), R.one()}; }
    Elem from_int(long long n) const { return Elem{R.from_int(n), R.one()}; }
    bool is_zero(const Elem& a) const { return R.is_zero(a.num); }
    bool is_one(const Elem& a) const { return R.is_one(a.num) && R.is_one(a.den); }
    bool eq(const Elem& a, const Elem& b) const {
        return R.eq(a.num, b.num) && R.eq(a.den, b.den);
    }
    Elem add(const Elem& a, const Elem& b) const {
        return make(R.add(R.mul(a.num, b.den), R.mul(b.num, a.den)),
                    R.mul(a.den, b.den));
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return make(R.sub(R.mul(a.num, b.den), R.mul(b.num, a.den)),
                    R.mul(a.den, b.den));
    }
    Elem neg(const Elem& a) const { return Elem{R.neg(a.num), a.den}; }
    Elem mul(const Elem& a, const Elem& b) const {
        return make(R.mul(a.num, b.num), R.mul(a.den, b.den));
    }
    Elem inv(const Elem& a) const {
        if (R.is_zero(a.num)) throw domain_error("division by zero");
        return make(a.den, a.num);
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = one();
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }

    std::string to_string(const Elem& a) const {
        if (R.is_one(a.den)) return R.to_string(a.num);
        auto wrap = [](std::string s) {
            return s.find_first_of("+-") != std::string::npos ? "(" + s + ")" : s;
        };
        return wrap(R.to_string(a.num)) + "/" + wrap(R.to_string(a.den));
    }

    bool same(const FracOps& o) const { return R.same(o.R); }
};

template <class POps>
typename POps::Coeff pow_coeff(const POps& R, typename POps::Coeff a, int e) {
    auto r = R.K.one();
    for (int i = 0; i < e; ++i) r = R.K.mul(r, a);
    return r;
}

// Resultant of two polynomials over a field, by the Euclidean method.
// Res(P,Q) = lead(P)^deg Q * prod Q(alpha_i) over the roots of P.
template <class POps>
typename POps::Coeff poly_resultant(const POps& R, typename POps::Elem P,
                                    typename POps::Elem Q) {
    const auto& K = R.K;
    if (R.is_zero(P) || R.is_zero(Q)) return K.zero();
    auto acc = K.one();
    int sign = 1;
    for (;;) {
        const int dp = R.deg(P), dq = R.deg(Q);
        if (dp == 0) {
            acc = K.mul(acc, pow_coeff(R, R.coeff(P, 0), dq));
            break;
        }
        if (dq == 0) {
            acc = K.mul(acc, pow_coeff(R, R.coeff(Q, 0), dp));
            break;
        }
        // One step: Res(P,Q) = (-1)^{dp dq} lead(Q)^{dp-dr} Res(Q, P mod Q).
        // When dp < dq the remainder is P itself and the step is a plain swap.
        auto rem = R.mod(P, Q);
        if (R.is_zero(rem)) return K.zero();
        const int dr = R.deg(rem);
        if (dp > dr) acc = K.mul(acc, pow_coeff(R, R.lead(Q), dp - dr));
        if ((dp & 1) && (dq & 1)) sign = -sign;
        P = std::move(Q);
        Q = std::move(rem);
    }
    return sign == 1 ? acc : K.neg(acc);
}

// Discriminant: (-1)^{n(n-1)/2} lead^{n-2-deg P'} Res(P, P').  Degree <= 1
// gives 1; vanishing derivative in positive characteristic gives 0.
template <class POps>
typename POps::Coeff poly_discriminant(const POps& R, const typename POps::Elem& P) {
    const auto& K = R.K;
    const int n = R.deg(P);
    if (n <= 1) return K.one();
    const auto dP = R.derivative(P);
    if (R.is_zero(dP)) return K.zero();
    auto res = poly_resultant(R, P, dP);
    const int e = n - 2 - R.deg(dP);
    auto l = R.lead(P);
    if (e >= 0)
        res = K.mul(res, pow_coeff(R, l, e));
    else
        res = K.mul(res, pow_coeff(R, K.inv(l), -e));
    const long long s = static_cast<long long>(n) * (n - 1) / 2;
    return (s % 2 == 0) ? res : K.neg(res);
}

// Applies a coefficient map to every coefficient (e.g. embedding into a
// residue field, or specializing rational-function coefficients).
template <class POpsA, class POpsB, class F>
typename POpsB::Elem map_coeffs(const POpsA& A, const POpsB& B,
                                const typename POpsA::Elem& P, F&& f) {
    std::vector<typename POpsB::Coeff> out;
    out.reserve(P.c.size());
    for (const auto& c : P.c) out.push_back(f(c));
    return B.from_coeffs(std::move(out));
}

}  // namespace kappau
