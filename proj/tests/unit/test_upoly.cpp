#include "doctest.h"
#include "kappau/upoly.hpp"

#include <map>
#include <random>
#include <set>

using namespace kappau;

namespace {

FqPoly mk(const FqPolyOps& R, std::initializer_list<int> asc) {
    std::vector<Fe> c;
    for (int v : asc) c.push_back(R.K.F->from_int(v));
    return R.from_coeffs(std::move(c));
}

FqPoly random_poly(const FqPolyOps& R, std::mt19937_64& rng, int maxdeg) {
    std::uniform_int_distribution<int> dd(0, maxdeg);
    std::uniform_int_distribution<uint64_t> dc(0, R.K.F->size() - 1);
    const int d = dd(rng);
    std::vector<Fe> c;
    for (int i = 0; i <= d; ++i) c.push_back(R.K.F->from_id(dc(rng)));
    return R.from_coeffs(std::move(c));
}

// Independent irreducibility oracle: sieve all monic polynomials of degree
// <= maxdeg by crossing out every product of two smaller monic polynomials.
// Uses only poly multiplication.
std::set<std::string> irreducible_sieve(const FqPolyOps& R, unsigned maxdeg) {
    const uint64_t q = R.K.F->size();
    std::map<unsigned, std::vector<FqPoly>> monic;  // by degree
    for (unsigned d = 1; d <= maxdeg; ++d) {
        uint64_t total = 1;
        for (unsigned i = 0; i < d; ++i) total *= q;
        for (uint64_t id = 0; id < total; ++id) {
            std::vector<Fe> c;
            uint64_t t = id;
            for (unsigned i = 0; i < d; ++i) {
                c.push_back(R.K.F->from_id(t % q));
                t /= q;
            }
            c.push_back(R.K.F->one());
            monic[d].push_back(R.from_coeffs(std::move(c)));
        }
    }
    std::set<std::string> composite;
    for (unsigned da = 1; 2 * da <= maxdeg; ++da)
        for (unsigned db = da; da + db <= maxdeg; ++db)
            for (const auto& A : monic[da])
                for (const auto& B : monic[db])
                    composite.insert(R.to_string(R.mul(A, B)));
    std::set<std::string> irr;
    for (unsigned d = 1; d <= maxdeg; ++d)
        for (const auto& P : monic[d])
            if (!composite.count(R.to_string(P))) irr.insert(R.to_string(P));
    return irr;
}

}  // namespace

TEST_CASE("polynomial ring basics over GF(3)") {
    auto R = poly_ring(Fq::make(3));
    const FqPoly a = mk(R, {1, 1});       // u+1
    const FqPoly b = mk(R, {2, 1});       // u+2
    CHECK(R.to_string(R.mul(a, b)) == "u^2+2");
    CHECK(R.to_string(mk(R, {2, 0, 2, 0, 1})) == "u^4+2*u^2+2");
    CHECK(R.deg(R.zero()) == kNegInfDeg);
    CHECK(R.to_string(R.zero()) == "0");
    CHECK(R.is_zero(R.derivative(mk(R, {1, 0, 0, 2}))));  // (2u^3+1)' = 0 in char 3
    CHECK(R.eq(R.derivative(mk(R, {0, 0, 0, 0, 1})), mk(R, {0, 0, 0, 1})));  // (u^4)' = u^3
    // compose: (u^2+1) o (u+2) = u^2+4u+5 = u^2+u+2
    CHECK(R.eq(R.compose(mk(R, {1, 0, 1}), b), mk(R, {2, 1, 1})));
}

TEST_CASE("division properties over GF(5)") {
    auto R = poly_ring(Fq::make(5));
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        FqPoly A = random_poly(R, rng, 9);
        FqPoly B = random_poly(R, rng, 5);
        if (R.is_zero(B)) continue;
        auto [Q, rem] = R.divmod(A, B);
        CHECK(R.eq(A, R.add(R.mul(Q, B), rem)));
        CHECK(R.deg(rem) < R.deg(B));
        // gcd divides both
        FqPoly g = R.gcd_monic(A, B);
        if (!R.is_zero(A)) CHECK(R.is_zero(R.mod(A, g)));
        CHECK(R.is_zero(R.mod(B, g)));
    }
    // common factor is found
    for (int trial = 0; trial < 50; ++trial) {
        FqPoly f = random_poly(R, rng, 3);
        if (R.deg(f) < 1) continue;
        FqPoly g1 = random_poly(R, rng, 3), g2 = random_poly(R, rng, 3);
        if (R.is_zero(g1) || R.is_zero(g2)) continue;
        FqPoly g = R.gcd_monic(R.mul(f, g1), R.mul(f, g2));
        CHECK(R.eq(g, R.mul(R.make_monic(f), R.gcd_monic(g1, g2))));
        CHECK(R.is_zero(R.mod(R.mul(f, g1), g)));
    }
}

TEST_CASE("irreducibility matches a multiplication sieve") {
    for (uint64_t p : {3ull, 5ull}) {
        auto R = poly_ring(Fq::make(p));
        const unsigned maxdeg = p == 3 ? 5 : 3;
        auto irr = irreducible_sieve(R, maxdeg);
        const uint64_t q = p;
        for (unsigned d = 1; d <= maxdeg; ++d) {
            uint64_t total = 1;
            for (unsigned i = 0; i < d; ++i) total *= q;
            uint64_t found = 0;
            for (uint64_t id = 0; id < total; ++id) {
                std::vector<Fe> c;
                uint64_t t = id;
                for (unsigned i = 0; i < d; ++i) {
                    c.push_back(R.K.F->from_id(t % q));
                    t /= q;
                }
                c.push_back(R.K.F->one());
                FqPoly P = R.from_coeffs(std::move(c));
                const bool lib = is_irreducible(R, P);
                CHECK(lib == (irr.count(R.to_string(P)) > 0));
                if (lib) ++found;
            }
            CHECK(found == count_monic_irreducibles(q, d));
            CHECK(monic_irreducibles(R, d).size() == found);
        }
    }
}

TEST_CASE("irreducible counts for GF(9)") {
    auto R = poly_ring(Fq::make(3, 2));
    CHECK(monic_irreducibles(R, 1).size() == 9);
    CHECK(monic_irreducibles(R, 2).size() == 36);
    CHECK(count_monic_irreducibles(9, 2) == 36);
    CHECK(count_monic_irreducibles(9, 3) == 240);
    CHECK(count_monic_irreducibles(3, 6) == 116);
    // enumeration is strictly increasing in the canonical order
    auto v = monic_irreducibles(R, 2);
    for (size_t i = 1; i < v.size(); ++i) CHECK(poly_less(R, v[i - 1], v[i]));
    for (const auto& P : v) CHECK(is_irreducible(R, P));
}

TEST_CASE("factorization round-trips") {
    std::mt19937_64 rng(11);
    for (auto [p, m] : {std::pair<uint64_t, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
        auto R = poly_ring(Fq::make(p, m));
        for (int trial = 0; trial < 120; ++trial) {
            FqPoly P = random_poly(R, rng, 8);
            if (R.deg(P) < 1) continue;
            auto f = factor(R, P);
            FqPoly prod = R.constant(f.unit);
            for (const auto& part : f.parts) {
                CHECK(is_irreducible(R, part.base));
                CHECK(R.is_monic(part.base));
                CHECK(part.mult >= 1);
                prod = R.mul(prod, R.pow(part.base, part.mult));
            }
            CHECK(R.eq(prod, P));
            // canonical order, no duplicates
            for (size_t i = 1; i < f.parts.size(); ++i)
                CHECK(poly_less(R, f.parts[i - 1].base, f.parts[i].base));
            // seed independence of the canonical result
            auto f2 = factor(R, P, 42);
            REQUIRE(f2.parts.size() == f.parts.size());
            for (size_t i = 0; i < f.parts.size(); ++i) {
                CHECK(R.eq(f2.parts[i].base, f.parts[i].base));
                CHECK(f2.parts[i].mult == f.parts[i].mult);
            }
        }
    }
}

TEST_CASE("factorization handles p-th powers and mixed multiplicities") {
    auto R = poly_ring(Fq::make(3));
    // (u^2+1)^3 * (u+1)^2 * u
    FqPoly P = R.mul(R.mul(R.pow(mk(R, {1, 0, 1}), 3), R.pow(mk(R, {1, 1}), 2)),
                     mk(R, {0, 1}));
    auto f = factor(R, P);
    REQUIRE(f.parts.size() == 3);
    CHECK(R.to_string(f.parts[0].base) == "u");
    CHECK(f.parts[0].mult == 1);
    CHECK(R.to_string(f.parts[1].base) == "u+1");
    CHECK(f.parts[1].mult == 2);
    CHECK(R.to_string(f.parts[2].base) == "u^2+1");
    CHECK(f.parts[2].mult == 3);
    // pure Frobenius power: (u^3+2u+1)^9
    FqPoly Q = R.pow(mk(R, {1, 2, 0, 1}), 9);
    auto fq_ = factor(R, Q);
    REQUIRE(fq_.parts.size() == 1);
    CHECK(fq_.parts[0].mult == 9);
    CHECK(R.to_string(fq_.parts[0].base) == "u^3+2*u+1");
    CHECK_THROWS_AS(factor(R, R.zero()), domain_error);
}

TEST_CASE("discriminant and resultant against closed forms") {
    for (uint64_t p : {5ull, 7ull}) {
        auto R = poly_ring(Fq::make(p));
        auto F = R.K.F;
        // quadratic: disc(x^2+bx+c) = b^2-4c
        for (uint64_t b = 0; b < p; ++b)
            for (uint64_t c = 0; c < p; ++c) {
                FqPoly P = R.from_coeffs({F->from_id(c), F->from_id(b), F->one()});
                Fe expect = F->sub(F->mul(F->from_id(b), F->from_id(b)),
                                   F->mul(F->from_int(4), F->from_id(c)));
                CHECK(discriminant(R, P) == expect);
            }
        // depressed cubic: disc(x^3+ax+b) = -4a^3-27b^2
        for (uint64_t a = 0; a < p; ++a)
            for (uint64_t b = 0; b < p; ++b) {
                FqPoly P = R.from_coeffs({F->from_id(b), F->from_id(a), F->zero(), F->one()});
                Fe a3 = F->pow(F->from_id(a), 3);
                Fe b2 = F->mul(F->from_id(b), F->from_id(b));
                Fe expect = F->sub(F->mul(F->from_int(-4), a3), F->mul(F->from_int(27), b2));
                CHECK(discriminant(R, P) == expect);
            }
    }
    auto R5 = poly_ring(Fq::make(5));
    CHECK(R5.K.F->is_one(resultant(R5, mk(R5, {1, 0, 1}), mk(R5, {0, 1}))));
    CHECK(discriminant(R5, mk(R5, {1, 1, 0, 1})) == R5.K.F->from_int(4));
    // repeated root means discriminant 0
    auto R3 = poly_ring(Fq::make(3));
    FqPoly sq = R3.mul(R3.pow(mk(R3, {1, 1}), 2), mk(R3, {2, 1}));
    CHECK(R3.K.F->is_zero(discriminant(R3, sq)));
    // degree <= 1 convention
    CHECK(R3.K.F->is_one(discriminant(R3, mk(R3, {2, 1}))));
    CHECK(R3.K.F->is_one(discriminant(R3, mk(R3, {2}))));
    // derivative identically zero (char divides every exponent)
    CHECK(R3.K.F->is_zero(discriminant(R3, mk(R3, {1, 0, 0, 1}))));  // u^3+1 = (u+1)^3
}

TEST_CASE("resultant as product over roots") {
    auto R = poly_ring(Fq::make(3, 2));
    auto F = R.K.F;
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<uint64_t> dc(0, 8);
    for (int trial = 0; trial < 60; ++trial) {
        // P = lc * prod (x - r_i) with known roots
        const int nroots = 1 + int(trial % 4);
        Fe lc = F->from_id(1 + dc(rng) % 8);
        FqPoly P = R.constant(lc);
        std::vector<Fe> roots;
        for (int i = 0; i < nroots; ++i) {
            roots.push_back(F->from_id(dc(rng)));
            P = R.mul(P, R.from_coeffs({F->neg(roots.back()), F->one()}));
        }
        FqPoly Q = random_poly(R, rng, 4);
        if (R.is_zero(Q)) continue;
        Fe expect = F->pow(lc, static_cast<uint64_t>(R.deg(Q)));
        for (const Fe& r : roots) expect = F->mul(expect, R.eval(Q, r));
        CHECK(resultant(R, P, Q) == expect);
    }
}

TEST_CASE("moebius, liouville, squares") {
    std::mt19937_64 rng(23);
    for (uint64_t p : {3ull, 5ull}) {
        auto R = poly_ring(Fq::make(p));
        // moebius by definition vs discriminant route, exhaustive small degrees
        const uint64_t q = p;
        for (unsigned d = 0; d <= 4; ++d) {
            uint64_t total = 1;
            for (unsigned i = 0; i < d; ++i) total *= q;
            for (uint64_t id = 0; id < total; ++id) {
                std::vector<Fe> c;
                uint64_t t = id;
                for (unsigned i = 0; i < d; ++i) {
                    c.push_back(R.K.F->from_id(t % q));
                    t /= q;
                }
                c.push_back(R.K.F->one());
                FqPoly P = R.from_coeffs(std::move(c));
                CHECK(moebius(R, P) == moebius_disc(R, P));
            }
        }
        CHECK(moebius(R, R.zero()) == 0);
        CHECK(moebius_disc(R, R.zero()) == 0);
        CHECK(moebius(R, R.from_int(2)) == 1);
        // liouville is completely multiplicative
        for (int trial = 0; trial < 80; ++trial) {
            FqPoly A = random_poly(R, rng, 5), B = random_poly(R, rng, 5);
            if (R.is_zero(A) || R.is_zero(B)) continue;
            CHECK(liouville(R, R.mul(A, B)) == liouville(R, A) * liouville(R, B));
        }
        // squares
        for (int trial = 0; trial < 60; ++trial) {
            FqPoly A = random_poly(R, rng, 4);
            FqPoly S = R.mul(A, A);
            CHECK(poly_is_square(R, S));
            auto s = poly_sqrt(R, S);
            REQUIRE(s.has_value());
            CHECK(R.eq(R.mul(*s, *s), S));
            if (R.deg(A) >= 0) {
                // times a non-square unit: never a square
                Fe ns = R.K.F->zero();
                for (uint64_t i = 1; i < q; ++i)
                    if (R.K.F->quad_char(R.K.F->from_id(i)) == -1) ns = R.K.F->from_id(i);
                CHECK(!poly_is_square(R, R.scale(ns, S)));
            }
        }
        CHECK(poly_is_square(R, R.zero()));
        // odd multiplicity: u^2 * (u+1)
        FqPoly odd = R.mul(R.mul(mk(R, {0, 1}), mk(R, {0, 1})), mk(R, {1, 1}));
        CHECK(!poly_is_square(R, odd));
    }
}

TEST_CASE("residue fields") {
    auto R = poly_ring(Fq::make(3));
    // degree 1: kappa itself, u -> -c0
    auto rf1 = residue_field(R, mk(R, {2, 1}));  // u+2
    CHECK(rf1.field == R.K.F);
    CHECK(rf1.u_image == R.K.F->one());  // -2 = 1 mod 3
    // degree 3: extension where the polynomial vanishes at the image of u
    FqPoly pi = mk(R, {1, 2, 0, 1});  // u^3+2u+1, irreducible
    REQUIRE(is_irreducible(R, pi));
    auto rf3 = residue_field(R, pi);
    CHECK(rf3.field->size() == 27);
    CHECK(rf3.field->base() == R.K.F);
    // evaluate pi at u_image with embedded coefficients: must vanish
    Fe acc = rf3.field->zero();
    for (size_t i = pi.c.size(); i-- > 0;)
        acc = rf3.field->add(rf3.field->mul(acc, rf3.u_image),
                             rf3.field->embed_base(pi.c[i]));
    CHECK(rf3.field->is_zero(acc));
    CHECK_THROWS_AS(residue_field(R, mk(R, {1, 2})), domain_error);   // not monic
    CHECK_THROWS_AS(residue_field(R, mk(R, {1})), domain_error);      // constant
    // non-prime base field
    auto R9 = poly_ring(Fq::make(3, 2));
    auto irr9 = monic_irreducibles(R9, 2);
    auto rf9 = residue_field(R9, irr9.front());
    CHECK(rf9.field->size() == 81);
    CHECK(rf9.field->base() == R9.K.F);
}

TEST_CASE("canonical polynomial order") {
    auto R = poly_ring(Fq::make(3));
    FqPoly u = mk(R, {0, 1});
    CHECK(poly_less(R, u, mk(R, {1, 1})));
    CHECK(poly_less(R, mk(R, {2, 1}), mk(R, {0, 0, 1})));  // degree dominates
    CHECK(!poly_less(R, u, u));
    // top coefficient compared first at equal degree
    CHECK(poly_less(R, mk(R, {2, 1, 1}), mk(R, {0, 2, 1})));
}
