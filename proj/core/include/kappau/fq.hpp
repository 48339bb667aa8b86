#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kappau/common.hpp"

namespace kappau {

class Fq;
using FqPtr = std::shared_ptr<const Fq>;

// Element of a finite field: flat vector of digits mod p.  A prime-field
// element is one digit; an element of an extension of degree m over its base
// is m consecutive blocks, each a base element.  Elements are plain values;
// the owning Fq interprets them.
struct Fe {
    std::vector<uint32_t> d;
    bool operator==(const Fe&) const = default;
};

// A finite field of odd characteristic.  Either the prime field GF(p), or an
// extension of another Fq by a monic irreducible modulus over it.  GF(p^m)
// built by make() uses the first irreducible modulus in the canonical order
// (lexicographic on the coefficient tuple (c_{m-1},...,c_0), digits 0<1<...);
// this is deterministic but NOT the Conway polynomial convention.
//
// Contexts are immutable after construction and safe to share across threads.
class Fq : public std::enable_shared_from_this<Fq> {
public:
    // GF(p^m) with the canonical modulus.  Throws domain_error unless p is an
    // odd prime, m >= 1 and p^m fits in 62 bits.
    static FqPtr make(uint64_t p, unsigned m = 1);

    // Extension of `base` by a monic modulus of degree >= 2 with coefficients
    // in `base` (coeffs ascending, coeffs.size() == degree+1, lead == 1).
    // The modulus must be irreducible over `base`; this is the caller's
    // responsibility (checked upstream where moduli are discovered).
    static FqPtr extend(FqPtr base, std::vector<Fe> modulus_coeffs,
                        std::string gen_name);

    uint64_t p() const { return p_; }
    unsigned degree() const { return degree_; }      // over GF(p)
    uint64_t size() const { return q_; }             // p^degree
    const FqPtr& base() const { return base_; }      // null for prime fields
    unsigned ext_degree() const { return ext_degree_; }  // over base
    unsigned words() const { return words_; }        // digits per element
    bool is_prime_field() const { return base_ == nullptr; }
    // Modulus over the base field (ascending, monic); empty for prime fields.
    const std::vector<Fe>& modulus() const { return modulus_; }
    const std::string& gen_name() const { return gen_name_; }
    std::string describe() const;

    Fe zero() const;
    Fe one() const;
    Fe from_int(long long n) const;   // n mod p in the prime subfield
    // Embeds a base-field element into this field (identity for prime fields
    // when e already lives here).
    Fe embed_base(const Fe& e) const;
    // Generator of the extension (class of the modulus variable); the unique
    // root of the modulus this field is built around.  Prime fields: throws.
    Fe gen() const;

    bool is_zero(const Fe& a) const;
    bool is_one(const Fe& a) const;
    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe inv(const Fe& a) const;                       // throws on 0
    Fe div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }
    Fe pow(const Fe& a, uint64_t e) const;

    // Quadratic character: 0 on 0, +1 on nonzero squares, -1 otherwise.
    int quad_char(const Fe& a) const;
    // The unique r with r^p = a (Frobenius is bijective): r = a^{q/p}.
    Fe pth_root(const Fe& a) const;
    // A square root if one exists.
    std::optional<Fe> sqrt(const Fe& a) const;

    // Dense-id bijection with [0, q): id = sum of digit_i * p^i.
    uint64_t to_id(const Fe& a) const;
    Fe from_id(uint64_t id) const;

    // Discrete-log tables, built at construction when q <= 2^16.  All arrays
    // are indexed by element id; `exp` is doubled so exp[i+j] needs no
    // reduction for i,j < q-1.  zech[k] = log(1 + g^k), or kZechNeg when
    // 1 + g^k = 0.
    struct Tables {
        uint64_t q1;                   // q - 1
        uint32_t generator_id;
        std::vector<uint32_t> logt;    // size q; logt[0] unused
        std::vector<uint32_t> expt;    // size 2(q-1)
        std::vector<uint32_t> zech;    // size q-1
        std::vector<int8_t> chi;       // size q
        static constexpr uint32_t kZechNeg = 0xFFFFFFFFu;
    };
    bool has_tables() const { return tables_ != nullptr; }
    const Tables* tables() const { return tables_.get(); }

    // Element text form: prime fields print the digit; extensions print a
    // polynomial in the generator name, e.g. "2*a+1".
    std::string to_string(const Fe& a) const;

private:
    Fq() = default;

    uint64_t p_ = 0;
    unsigned degree_ = 1;
    uint64_t q_ = 0;
    FqPtr base_;
    unsigned ext_degree_ = 1;
    unsigned words_ = 1;
    std::vector<Fe> modulus_;      // over base, ascending, monic
    std::string gen_name_;
    std::unique_ptr<Tables> tables_;

    void build_tables();

    // span-level kernels (digit arrays of length words_)
    void raw_mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const;
    void raw_inv(const uint32_t* a, uint32_t* out) const;
};

// Value-semantics ops bundle used to instantiate the generic polynomial /
// fraction templates over a finite field.
struct FqOps {
    FqPtr F;
    using Elem = Fe;

    Elem zero() const { return F->zero(); }
    Elem one() const { return F->one(); }
    Elem from_int(long long n) const { return F->from_int(n); }
    bool is_zero(const Elem& a) const { return F->is_zero(a); }
    bool is_one(const Elem& a) const { return F->is_one(a); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return F->add(a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return F->sub(a, b); }
    Elem neg(const Elem& a) const { return F->neg(a); }
    Elem mul(const Elem& a, const Elem& b) const { return F->mul(a, b); }
    Elem inv(const Elem& a) const { return F->inv(a); }
    Elem div(const Elem& a, const Elem& b) const { return F->div(a, b); }
    std::string to_string(const Elem& a) const { return F->to_string(a); }
    bool same(const FqOps& o) const { return F == o.F; }
};

}  // namespace kappau
