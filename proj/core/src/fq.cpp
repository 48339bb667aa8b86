#include "kappau/fq.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

namespace kappau {

namespace {

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// --- minimal GF(p)[x] toolkit, used only to discover canonical moduli ---

using PPoly = std::vector<uint32_t>;  // ascending coefficients mod p

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<uint32_t>((r[i + j] + uint64_t(a[i]) * b[j]) % p);
    }
    ptrim(r);
    return r;
}

uint32_t pinv_digit(uint32_t a, uint64_t p) {
    // Fermat: a^(p-2)
    uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(r);
}

PPoly pmod(PPoly a, const PPoly& m, uint64_t p) {
    ptrim(a);
    if (m.empty()) return a;
    const uint32_t linv = pinv_digit(m.back(), p);
    while (a.size() >= m.size()) {
        uint64_t c = uint64_t(a.back()) * linv % p;
        size_t shift = a.size() - m.size();
        if (c != 0)
            for (size_t j = 0; j < m.size(); ++j) {
                uint64_t sub = c * m[j] % p;
                a[shift + j] = static_cast<uint32_t>((a[shift + j] + p - sub) % p);
            }
        ptrim(a);
        if (a.size() < m.size()) break;
    }
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint64_t p) {
    return pmod(pmul(a, b, p), m, p);
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& m, uint64_t p) {
    PPoly r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin irreducibility over GF(p) for monic f of degree n >= 1.
bool pirreducible(const PPoly& f, uint64_t p) {
    const size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    const PPoly x{0, 1};
    // x^(p^k) mod f for k = 1..n via iterated Frobenius
    std::vector<PPoly> frob(n + 1);
    frob[0] = x;
    for (size_t k = 1; k <= n; ++k) frob[k] = ppowmod(frob[k - 1], p, f, p);
    {
        PPoly t = frob[n];  // must equal x
        if (t.size() != 2 || t[0] != 0 || t[1] != 1) return false;
    }
    for (size_t l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_prime_u64(l)) continue;
        PPoly t = frob[n / l];
        // gcd(t - x, f) must be constant
        PPoly diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<uint32_t>((diff[1] + p - 1) % p);
        ptrim(diff);
        PPoly g = pgcd(f, diff, p);
        if (g.size() > 1) return false;
    }
    return true;
}

// First monic irreducible of degree m over GF(p) in lexicographic order on
// the coefficient tuple (c_{m-1},...,c_0) with digits ordered 0 < 1 < ... .
PPoly canonical_modulus(uint64_t p, unsigned m) {
    std::vector<uint32_t> tuple(m, 0);  // tuple[0] = c_{m-1}, ..., tuple[m-1] = c_0
    for (;;) {
        PPoly f(m + 1, 0);
        f[m] = 1;
        for (unsigned i = 0; i < m; ++i) f[m - 1 - i] = tuple[i];
        if (pirreducible(f, p)) return f;
        int i = static_cast<int>(m) - 1;
        while (i >= 0 && tuple[i] == p - 1) tuple[i--] = 0;
        if (i < 0) throw domain_error("no irreducible modulus found");  // unreachable
        ++tuple[i];
    }
}

void digits_add(const uint32_t* a, const uint32_t* b, uint32_t* out, unsigned n,
                uint64_t p) {
    for (unsigned i = 0; i < n; ++i) {
        uint32_t s = a[i] + b[i];
        out[i] = s >= p ? s - static_cast<uint32_t>(p) : s;
    }
}

void digits_sub(const uint32_t* a, const uint32_t* b, uint32_t* out, unsigned n,
                uint64_t p) {
    for (unsigned i = 0; i < n; ++i) {
        uint32_t s = a[i] + static_cast<uint32_t>(p) - b[i];
        out[i] = s >= p ? s - static_cast<uint32_t>(p) : s;
    }
}

}  // namespace

FqPtr Fq::make(uint64_t p, unsigned m) {
    if (p == 2 || !is_prime_u64(p)) throw domain_error("odd prime required");
    if (p >= (1ull << 31)) throw domain_error("characteristic too large");
    if (m < 1) throw domain_error("extension degree must be >= 1");
    // overflow guard on q = p^m
    uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (q > (1ull << 62) / p) throw domain_error("field too large");
        q *= p;
    }
    auto prime = std::shared_ptr<Fq>(new Fq());
    prime->p_ = p;
    prime->degree_ = 1;
    prime->q_ = p;
    prime->ext_degree_ = 1;
    prime->words_ = 1;
    prime->gen_name_.clear();
    if (p <= 65536) prime->build_tables();
    if (m == 1) return prime;

    PPoly mod = canonical_modulus(p, m);
    std::vector<Fe> coeffs(m + 1);
    for (unsigned i = 0; i <= m; ++i) coeffs[i] = Fe{{mod[i]}};
    return extend(prime, std::move(coeffs), "a");
}

FqPtr Fq::extend(FqPtr base, std::vector<Fe> modulus_coeffs, std::string gen_name) {
    if (!base) throw domain_error("null base field");
    if (modulus_coeffs.size() < 3) throw domain_error("extension degree must be >= 2");
    const unsigned m = static_cast<unsigned>(modulus_coeffs.size()) - 1;
    for (const Fe& c : modulus_coeffs)
        if (c.d.size() != base->words_) throw domain_error("modulus coefficient shape mismatch");
    if (!base->is_one(modulus_coeffs.back())) throw domain_error("modulus must be monic");

    auto f = std::shared_ptr<Fq>(new Fq());
    f->p_ = base->p_;
    f->degree_ = base->degree_ * m;
    uint64_t q = 1;
    for (unsigned i = 0; i < f->degree_; ++i) {
        if (q > (1ull << 62) / f->p_) throw domain_error("field too large");
        q *= f->p_;
    }
    f->q_ = q;
    f->base_ = std::move(base);
    f->ext_degree_ = m;
    f->words_ = f->base_->words_ * m;
    f->modulus_ = std::move(modulus_coeffs);
    f->gen_name_ = std::move(gen_name);
    if (f->q_ <= 65536) f->build_tables();
    return f;
}

Fe Fq::zero() const { return Fe{std::vector<uint32_t>(words_, 0)}; }

Fe Fq::one() const {
    Fe e = zero();
    e.d[0] = 1;
    return e;
}

Fe Fq::from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += static_cast<long long>(p_);
    Fe e = zero();
    e.d[0] = static_cast<uint32_t>(r);
    return e;
}

Fe Fq::embed_base(const Fe& e) const {
    if (!base_) {
        if (e.d.size() != words_) throw domain_error("element shape mismatch");
        return e;
    }
    if (e.d.size() == words_) return e;  // already here
    if (e.d.size() != base_->words_) throw domain_error("element shape mismatch");
    Fe r = zero();
    std::copy(e.d.begin(), e.d.end(), r.d.begin());
    return r;
}

Fe Fq::gen() const {
    if (!base_) throw domain_error("prime field has no extension generator");
    Fe r = zero();
    r.d[base_->words_] = 1;  // block 1 = base one
    return r;
}

bool Fq::is_zero(const Fe& a) const {
    for (uint32_t x : a.d)
        if (x) return false;
    return true;
}

bool Fq::is_one(const Fe& a) const {
    if (a.d.empty() || a.d[0] != 1) return false;
    for (size_t i = 1; i < a.d.size(); ++i)
        if (a.d[i]) return false;
    return true;
}

Fe Fq::add(const Fe& a, const Fe& b) const {
    Fe r = zero();
    digits_add(a.d.data(), b.d.data(), r.d.data(), words_, p_);
    return r;
}

Fe Fq::sub(const Fe& a, const Fe& b) const {
    Fe r = zero();
    digits_sub(a.d.data(), b.d.data(), r.d.data(), words_, p_);
    return r;
}

Fe Fq::neg(const Fe& a) const {
    Fe r = zero();
    for (unsigned i = 0; i < words_; ++i)
        r.d[i] = a.d[i] ? static_cast<uint32_t>(p_) - a.d[i] : 0;
    return r;
}

void Fq::raw_mul(const uint32_t* a, const uint32_t* b, uint32_t* out) const {
    if (!base_) {
        out[0] = static_cast<uint32_t>(uint64_t(a[0]) * b[0] % p_);
        return;
    }
    const Fq& B = *base_;
    const unsigned m = ext_degree_, bw = B.words_;
    std::vector<uint32_t> tmp((2 * m - 1) * bw, 0);
    std::vector<uint32_t> prod(bw);
    for (unsigned i = 0; i < m; ++i) {
        bool azero = true;
        for (unsigned k = 0; k < bw; ++k) azero = azero && a[i * bw + k] == 0;
        if (azero) continue;
        for (unsigned j = 0; j < m; ++j) {
            B.raw_mul(a + i * bw, b + j * bw, prod.data());
            digits_add(tmp.data() + (i + j) * bw, prod.data(),
                       tmp.data() + (i + j) * bw, bw, p_);
        }
    }
    // reduce modulo the (monic) modulus, top block down
    for (unsigned k = 2 * m - 2; k >= m; --k) {
        uint32_t* top = tmp.data() + k * bw;
        bool z = true;
        for (unsigned t = 0; t < bw; ++t) z = z && top[t] == 0;
        if (!z) {
            for (unsigned j = 0; j < m; ++j) {
                B.raw_mul(top, modulus_[j].d.data(), prod.data());
                digits_sub(tmp.data() + (k - m + j) * bw, prod.data(),
                           tmp.data() + (k - m + j) * bw, bw, p_);
            }
        }
        if (k == m) break;
    }
    std::copy(tmp.begin(), tmp.begin() + m * bw, out);
}

Fe Fq::mul(const Fe& a, const Fe& b) const {
    if (tables_) {
        const uint64_t ia = to_id(a), ib = to_id(b);
        if (ia == 0 || ib == 0) return zero();
        const uint64_t s = uint64_t(tables_->logt[ia]) + tables_->logt[ib];
        return from_id(tables_->expt[s]);
    }
    Fe r = zero();
    raw_mul(a.d.data(), b.d.data(), r.d.data());
    return r;
}

void Fq::raw_inv(const uint32_t* a, uint32_t* out) const {
    if (!base_) {
        if (a[0] == 0) throw domain_error("division by zero");
        out[0] = pinv_digit(a[0], p_);
        return;
    }
    // extended Euclid on (element as base-poly, modulus) over the base field
    const Fq& B = *base_;
    const unsigned m = ext_degree_, bw = B.words_;
    using BV = std::vector<Fe>;  // base-coefficient vector, ascending
    auto trim = [&](BV& v) {
        while (!v.empty() && B.is_zero(v.back())) v.pop_back();
    };
    BV r0 = modulus_;
    BV r1(m);
    for (unsigned i = 0; i < m; ++i)
        r1[i] = Fe{std::vector<uint32_t>(a + i * bw, a + (i + 1) * bw)};
    trim(r1);
    if (r1.empty()) throw domain_error("division by zero");
    BV s0{}, s1{B.one()};  // Bezout coefficients for the element argument
    while (r1.size() != 1) {
        // divide r0 by r1
        BV q;
        BV rem = r0;
        const Fe linv = B.inv(r1.back());
        while (rem.size() >= r1.size()) {
            const size_t shift = rem.size() - r1.size();
            const Fe c = B.mul(rem.back(), linv);
            if (q.size() < shift + 1) q.resize(shift + 1, B.zero());
            q[shift] = B.add(q[shift], c);
            for (size_t j = 0; j < r1.size(); ++j)
                rem[shift + j] = B.sub(rem[shift + j], B.mul(c, r1[j]));
            trim(rem);
            if (rem.empty()) break;
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        BV qs(q.size() + (s1.empty() ? 0 : s1.size()) , B.zero());
        if (!s1.empty() && !q.empty()) {
            qs.assign(q.size() + s1.size() - 1, B.zero());
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < s1.size(); ++j)
                    qs[i + j] = B.add(qs[i + j], B.mul(q[i], s1[j]));
        } else {
            qs.clear();
        }
        BV ns(std::max(s0.size(), qs.size()), B.zero());
        for (size_t i = 0; i < ns.size(); ++i) {
            Fe x = i < s0.size() ? s0[i] : B.zero();
            Fe y = i < qs.size() ? qs[i] : B.zero();
            ns[i] = B.sub(x, y);
        }
        trim(ns);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(ns);
        if (r1.empty()) throw domain_error("element not invertible (modulus not irreducible?)");
    }
    // r1 is a nonzero constant: inverse = s1 / r1
    const Fe c = B.inv(r1[0]);
    std::fill(out, out + words_, 0);
    for (size_t i = 0; i < s1.size(); ++i) {
        const Fe v = B.mul(s1[i], c);
        std::copy(v.d.begin(), v.d.end(), out + i * bw);
    }
}

Fe Fq::inv(const Fe& a) const {
    if (tables_) {
        const uint64_t ia = to_id(a);
        if (ia == 0) throw domain_error("division by zero");
        const uint64_t k = tables_->logt[ia];
        return from_id(tables_->expt[(tables_->q1 - k) % tables_->q1]);
    }
    Fe r = zero();
    raw_inv(a.d.data(), r.d.data());
    return r;
}

Fe Fq::pow(const Fe& a, uint64_t e) const {
    Fe r = one();
    Fe b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

int Fq::quad_char(const Fe& a) const {
    if (tables_) return tables_->chi[to_id(a)];
    if (is_zero(a)) return 0;
    const Fe z = pow(a, (q_ - 1) / 2);
    if (is_one(z)) return 1;
    assert(is_zero(add(z, one())));
    return -1;
}

Fe Fq::pth_root(const Fe& a) const {
    uint64_t e = 1;
    for (unsigned i = 1; i < degree_; ++i) e *= p_;  // q/p
    return pow(a, e);
}

std::optional<Fe> Fq::sqrt(const Fe& a) const {
    if (is_zero(a)) return zero();
    if (tables_) {
        const uint64_t k = tables_->logt[to_id(a)];
        if (k & 1) return std::nullopt;
        return from_id(tables_->expt[k / 2]);
    }
    if (quad_char(a) != 1) return std::nullopt;
    // Tonelli-Shanks
    uint64_t s = q_ - 1;
    unsigned e = 0;
    while ((s & 1) == 0) {
        s >>= 1;
        ++e;
    }
    if (e == 1) return pow(a, (q_ + 1) / 4);
    Fe n = from_id(2);
    while (quad_char(n) != -1) n = from_id(to_id(n) + 1);
    Fe x = pow(a, (s + 1) / 2);
    Fe b = pow(a, s);
    Fe g = pow(n, s);
    unsigned r = e;
    for (;;) {
        Fe t = b;
        unsigned m = 0;
        while (!is_one(t) && m < r) {
            t = mul(t, t);
            ++m;
        }
        if (m == 0) return x;
        Fe gs = g;
        for (unsigned i = 0; i + 1 < r - m; ++i) gs = mul(gs, gs);
        g = mul(gs, gs);
        x = mul(x, gs);
        b = mul(b, g);
        r = m;
    }
}

uint64_t Fq::to_id(const Fe& a) const {
    uint64_t id = 0;
    for (unsigned i = words_; i-- > 0;) id = id * p_ + a.d[i];
    return id;
}

Fe Fq::from_id(uint64_t id) const {
    Fe r = zero();
    for (unsigned i = 0; i < words_; ++i) {
        r.d[i] = static_cast<uint32_t>(id % p_);
        id /= p_;
    }
    return r;
}

void Fq::build_tables() {
    auto T = std::make_unique<Tables>();
    const uint64_t q1 = q_ - 1;
    T->q1 = q1;
    // prime factors of q-1
    std::vector<uint64_t> primes;
    uint64_t n = q1;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) primes.push_back(n);
    // deterministic generator search
    Fe g = zero();
    for (uint64_t cand = 2;; ++cand) {
        if (cand >= q_) throw domain_error("generator search failed");
        const Fe c = from_id(cand);
        bool ok = !is_zero(c);
        for (uint64_t l : primes)
            ok = ok && !is_one(pow(c, q1 / l));
        if (ok) {
            g = c;
            break;
        }
    }
    T->generator_id = static_cast<uint32_t>(to_id(g));
    T->expt.resize(2 * q1);
    T->logt.assign(q_, 0);
    Fe cur = one();
    for (uint64_t k = 0; k < q1; ++k) {
        const uint32_t id = static_cast<uint32_t>(to_id(cur));
        T->expt[k] = id;
        T->expt[k + q1] = id;
        T->logt[id] = static_cast<uint32_t>(k);
        cur = mul(cur, g);  // tables_ not yet installed: generic path
    }
    T->zech.resize(q1);
    const Fe one_ = one();
    for (uint64_t k = 0; k < q1; ++k) {
        const Fe v = add(one_, from_id(T->expt[k]));
        T->zech[k] = is_zero(v) ? Tables::kZechNeg
                                : T->logt[to_id(v)];
    }
    T->chi.assign(q_, 0);
    for (uint64_t k = 0; k < q1; ++k) T->chi[T->expt[k]] = (k & 1) ? -1 : 1;
    tables_ = std::move(T);
}

std::string Fq::describe() const {
    if (!base_) return "GF(" + std::to_string(p_) + ")";
    std::string mod;
    for (unsigned i = ext_degree_ + 1; i-- > 0;) {
        const Fe& c = modulus_[i];
        if (base_->is_zero(c) && i != ext_degree_) continue;
        std::string term;
        const std::string cs = base_->to_string(c);
        const bool needs_paren = cs.find_first_of("+-*^") != std::string::npos;
        if (i == 0) {
            term = needs_paren ? "(" + cs + ")" : cs;
        } else {
            if (!base_->is_one(c)) term = (needs_paren ? "(" + cs + ")" : cs) + "*";
            term += gen_name_;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!mod.empty()) mod += "+";
        mod += term;
    }
    return "GF(" + std::to_string(q_) + ") = " + base_->describe() + "[" + gen_name_ +
           "]/(" + mod + ")";
}

std::string Fq::to_string(const Fe& a) const {
    if (!base_) return std::to_string(a.d[0]);
    if (is_zero(a)) return "0";
    const unsigned bw = base_->words_;
    std::string out;
    for (unsigned i = ext_degree_; i-- > 0;) {
        Fe c{std::vector<uint32_t>(a.d.begin() + i * bw, a.d.begin() + (i + 1) * bw)};
        if (base_->is_zero(c)) continue;
        std::string cs = base_->to_string(c);
        const bool needs_paren = cs.find_first_of("+-*^") != std::string::npos;
        std::string term;
        if (i == 0) {
            term = needs_paren ? "(" + cs + ")" : cs;
        } else {
            if (!base_->is_one(c)) term = (needs_paren ? "(" + cs + ")" : cs) + "*";
            term += gen_name_;
            if (i > 1) term += "^" + std::to_string(i);
        }
        if (!out.empty()) out += "+";
        out += term;
    }
    return out;
}

}  // namespace kappau
