#include "kappau/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <random>

namespace kappau {

namespace {

// x^{q^1}, x^{q^2}, ... mod P (successive Frobenius powers of the variable)
FqPoly frob_step(const FqPolyOps& R, const FqPoly& h, const FqPoly& P) {
    return R.powmod(h, R.K.F->size(), P);
}

FqPoly pth_root_poly(const FqPolyOps& R, const FqPoly& W) {
    // W' = 0, so only exponents divisible by p occur
    const auto& F = *R.K.F;
    const auto p = static_cast<size_t>(F.p());
    std::vector<Fe> out;
    for (size_t i = 0; i < W.c.size(); i += p) {
        assert([&] {
            for (size_t j = 1; j < p && i + j < W.c.size(); ++j)
                if (!F.is_zero(W.c[i + j])) return false;
            return true;
        }());
        out.push_back(F.pth_root(W.c[i]));
    }
    return R.from_coeffs(std::move(out));
}

// Cantor-Zassenhaus equal-degree splitting of monic squarefree G, all of
// whose irreducible factors have degree d.
void equal_degree(const FqPolyOps& R, FqPoly G, unsigned d,
                  std::mt19937_64& rng, std::vector<FqPoly>& out) {
    const auto& F = *R.K.F;
    const unsigned k = static_cast<unsigned>(R.deg(G)) / d;
    if (k == 1) {
        out.push_back(std::move(G));
        return;
    }
    std::uniform_int_distribution<uint64_t> dist(0, F.size() - 1);
    for (;;) {
        // random poly of degree < deg G
        std::vector<Fe> rc(static_cast<size_t>(R.deg(G)));
        for (auto& c : rc) c = F.from_id(dist(rng));
        FqPoly r = R.from_coeffs(std::move(rc));
        if (R.deg(r) < 1) continue;
        FqPoly g0 = R.gcd_monic(r, G);
        if (R.deg(g0) > 0 && R.deg(g0) < R.deg(G)) {
            equal_degree(R, g0, d, rng, out);
            equal_degree(R, R.divexact(G, g0), d, rng, out);
            return;
        }
        // s = r^{1+q+...+q^{d-1}}, then m = s^{(q-1)/2}; both mod G.
        // (q^d-1)/2 = (1+q+...+q^{d-1}) * (q-1)/2 keeps exponents in 64 bits.
        FqPoly s = R.mod(R.one(), G);
        FqPoly t = R.mod(r, G);
        for (unsigned i = 0; i < d; ++i) {
            s = R.mulmod(s, t, G);
            if (i + 1 < d) t = frob_step(R, t, G);
        }
        FqPoly m = R.powmod(s, (F.size() - 1) / 2, G);
        FqPoly split = R.gcd_monic(R.sub(m, R.one()), G);
        if (R.deg(split) > 0 && R.deg(split) < R.deg(G)) {
            equal_degree(R, split, d, rng, out);
            equal_degree(R, R.divexact(G, split), d, rng, out);
            return;
        }
    }
}

// Distinct-degree phase on monic squarefree A; irreducible factors appended.
void factor_squarefree(const FqPolyOps& R, FqPoly A, std::mt19937_64& rng,
                       std::vector<FqPoly>& out) {
    FqPoly h = R.mod(R.X(), A);
    for (unsigned d = 1; 2 * d <= static_cast<unsigned>(R.deg(A)); ++d) {
        h = frob_step(R, h, A);
        FqPoly g = R.gcd_monic(R.sub(h, R.X()), A);
        if (R.deg(g) > 0) {
            equal_degree(R, g, d, rng, out);
            A = R.divexact(A, g);
            if (R.deg(A) == 0) return;
            h = R.mod(h, A);
        }
    }
    if (R.deg(A) > 0) out.push_back(std::move(A));
}

void factor_monic(const FqPolyOps& R, FqPoly W, unsigned outer_mult,
                  std::mt19937_64& rng, std::vector<PolyFactor>& parts) {
    if (R.deg(W) <= 0) return;
    FqPoly dW = R.derivative(W);
    if (R.is_zero(dW)) {
        factor_monic(R, pth_root_poly(R, W), outer_mult * static_cast<unsigned>(R.K.F->p()),
                     rng, parts);
        return;
    }
    FqPoly g = R.gcd_monic(W, dW);
    FqPoly A = R.divexact(W, g);  // product of factors whose multiplicity is not divisible by p
    std::vector<FqPoly> irr;
    factor_squarefree(R, A, rng, irr);
    for (FqPoly& pi : irr) {
        auto [mult, rest] = R.remove_factor(W, pi);
        W = std::move(rest);
        parts.push_back(PolyFactor{std::move(pi), mult * outer_mult});
    }
    // whatever remains has every multiplicity divisible by p
    if (R.deg(W) > 0) {
        assert(R.is_zero(R.derivative(W)));
        factor_monic(R, pth_root_poly(R, W), outer_mult * static_cast<unsigned>(R.K.F->p()),
                     rng, parts);
    }
}

}  // namespace

uint64_t poly_hash(const FqPoly& P) {
    uint64_t h = 14695981039346656037ull;
    for (const Fe& c : P.c)
        for (uint32_t d : c.d) {
            h ^= d;
            h *= 1099511628211ull;
        }
    return h;
}

bool poly_less(const FqPolyOps& R, const FqPoly& a, const FqPoly& b) {
    const int da = R.deg(a), db = R.deg(b);
    if (da != db) return da < db;
    const auto& F = *R.K.F;
    for (size_t i = a.c.size(); i-- > 0;) {
        const uint64_t ia = F.to_id(a.c[i]), ib = F.to_id(b.c[i]);
        if (ia != ib) return ia < ib;
    }
    return false;
}

Factorization factor(const FqPolyOps& R, const FqPoly& P, uint64_t seed) {
    if (R.is_zero(P)) throw domain_error("cannot factor the zero polynomial");
    Factorization out;
    out.unit = R.lead(P);
    std::mt19937_64 rng(seed ^ poly_hash(P) ^ 0x9e3779b97f4a7c15ull);
    factor_monic(R, R.make_monic(P), 1, rng, out.parts);
    std::sort(out.parts.begin(), out.parts.end(),
              [&](const PolyFactor& x, const PolyFactor& y) {
                  return poly_less(R, x.base, y.base);
              });
    return out;
}

bool is_irreducible(const FqPolyOps& R, const FqPoly& P) {
    const int n = R.deg(P);
    if (n < 1) return false;
    if (n == 1) return true;
    const FqPoly M = R.make_monic(P);
    const FqPoly x = R.X();
    std::vector<FqPoly> frob(static_cast<size_t>(n) + 1);
    frob[0] = R.mod(x, M);
    for (int k = 1; k <= n; ++k) frob[k] = frob_step(R, frob[k - 1], M);
    if (!R.eq(frob[n], R.mod(x, M))) return false;
    for (int l = 2; l <= n; ++l) {
        if (n % l != 0) continue;
        bool prime = true;
        for (int d = 2; d * d <= l; ++d)
            if (l % d == 0) prime = false;
        if (!prime) continue;
        FqPoly g = R.gcd_monic(R.sub(frob[n / l], x), M);
        if (R.deg(g) > 0) return false;
    }
    return true;
}

std::vector<FqPoly> monic_irreducibles(const FqPolyOps& R, unsigned deg) {
    if (deg == 0) return {};
    const auto& F = *R.K.F;
    const uint64_t q = F.size();
    // guard against absurd enumeration sizes
    double total = 1;
    for (unsigned i = 0; i < deg; ++i) total *= static_cast<double>(q);
    if (total > 1e9) throw domain_error("irreducible enumeration too large");
    std::vector<FqPoly> out;
    std::vector<Fe> coeffs(deg + 1, F.zero());
    coeffs[deg] = F.one();
    const uint64_t count = static_cast<uint64_t>(total);
    for (uint64_t id = 0; id < count; ++id) {
        uint64_t t = id;
        for (unsigned i = 0; i < deg; ++i) {
            coeffs[i] = F.from_id(t % q);
            t /= q;
        }
        FqPoly P = R.from_coeffs(coeffs);
        if (is_irreducible(R, P)) out.push_back(std::move(P));
    }
    return out;
}

uint64_t count_monic_irreducibles(uint64_t q, unsigned n) {
    if (n == 0) return 0;
    auto int_moebius = [](unsigned m) {
        int mu = 1;
        for (unsigned d = 2; d * d <= m; ++d)
            if (m % d == 0) {
                m /= d;
                if (m % d == 0) return 0;
                mu = -mu;
            }
        if (m > 1) mu = -mu;
        return mu;
    };
    long long sum = 0;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const int mu = int_moebius(d);
        if (mu == 0) continue;
        long long pw = 1;
        for (unsigned i = 0; i < n / d; ++i) pw *= static_cast<long long>(q);
        sum += mu * pw;
    }
    return static_cast<uint64_t>(sum / n);
}

int moebius(const FqPolyOps& R, const FqPoly& P, uint64_t seed) {
    if (R.is_zero(P)) return 0;
    if (R.is_constant(P)) return 1;
    // squarefree iff gcd(P, P') is constant and P' != 0; cheap pre-check
    FqPoly dP = R.derivative(P);
    if (R.is_zero(dP)) return 0;
    if (R.deg(R.gcd_monic(P, dP)) > 0) return 0;
    const auto f = factor(R, P, seed);
    return (f.parts.size() % 2 == 0) ? 1 : -1;
}

int moebius_disc(const FqPolyOps& R, const FqPoly& P) {
    if (R.is_zero(P)) return 0;
    const int chi = R.K.F->quad_char(discriminant(R, P));
    return sign_pow(-1, static_cast<long long>(R.deg(P))) * chi;
}

int liouville(const FqPolyOps& R, const FqPoly& P, uint64_t seed) {
    if (R.is_zero(P)) return 0;
    if (R.is_constant(P)) return 1;
    const auto f = factor(R, P, seed);
    unsigned long long omega = 0;
    for (const auto& part : f.parts) omega += part.mult;
    return (omega % 2 == 0) ? 1 : -1;
}

bool poly_is_square(const FqPolyOps& R, const FqPoly& P, uint64_t seed) {
    if (R.is_zero(P)) return true;
    if (R.K.F->quad_char(R.lead(P)) != 1) return false;
    const auto f = factor(R, P, seed);
    for (const auto& part : f.parts)
        if (part.mult % 2 != 0) return false;
    return true;
}

std::optional<FqPoly> poly_sqrt(const FqPolyOps& R, const FqPoly& P, uint64_t seed) {
    if (R.is_zero(P)) return R.zero();
    const auto su = R.K.F->sqrt(R.lead(P));
    if (!su) return std::nullopt;
    const auto f = factor(R, P, seed);
    FqPoly r = R.constant(*su);
    for (const auto& part : f.parts) {
        if (part.mult % 2 != 0) return std::nullopt;
        r = R.mul(r, R.pow(part.base, part.mult / 2));
    }
    return r;
}

Fe resultant(const FqPolyOps& R, const FqPoly& P, const FqPoly& Q) {
    return poly_resultant(R, P, Q);
}

Fe discriminant(const FqPolyOps& R, const FqPoly& P) {
    return poly_discriminant(R, P);
}

ResidueField residue_field(const FqPolyOps& R, const FqPoly& pi) {
    const int d = R.deg(pi);
    if (d < 1 || !R.is_monic(pi)) throw domain_error("residue field needs a monic irreducible");
    if (d == 1) return ResidueField{R.K.F, R.K.F->neg(pi.c[0])};
    auto F = Fq::extend(R.K.F, pi.c, R.var);
    return ResidueField{F, F->gen()};
}

}  // namespace kappau
