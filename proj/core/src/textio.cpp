#include "kappau/textio.hpp"

#include <cctype>
#include <map>

namespace kappau {

namespace {

// Recursive-descent parser evaluating directly in kappa(u).
class RatParser {
public:
    RatParser(const RatOps& O, const std::string& s) : O_(O), s_(s) {
        // symbol table: the ring variable, then the tower generators (each
        // embedded step by step up to the coefficient field)
        symbols_[O_.R.var] = O_.make(O_.R.X(), O_.R.one());
        std::vector<FqPtr> chain;
        for (FqPtr F = O_.R.K.F; F; F = F->base()) chain.push_back(F);
        for (size_t i = 0; i < chain.size(); ++i) {
            if (chain[i]->is_prime_field()) continue;
            Fe g = chain[i]->gen();
            for (size_t j = i; j-- > 0;) g = chain[j]->embed_base(g);
            symbols_.emplace(chain[i]->gen_name(),
                             O_.from_ring(O_.R.constant(std::move(g))));
        }
    }

    Rat parse() {
        Rat r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    const RatOps& O_;
    const std::string& s_;
    size_t pos_ = 0;
    std::map<std::string, Rat> symbols_;

    [[noreturn]] void fail(const std::string& why) const {
        throw usage_error("cannot parse '" + s_ + "' at position " +
                          std::to_string(pos_) + ": " + why);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Rat expr() {
        Rat r = eat('-') ? O_.neg(term()) : (eat('+'), term());
        for (;;) {
            if (eat('+'))
                r = O_.add(r, term());
            else if (eat('-'))
                r = O_.sub(r, term());
            else
                return r;
        }
    }

    Rat term() {
        Rat r = factor();
        for (;;) {
            if (eat('*'))
                r = O_.mul(r, factor());
            else if (eat('/')) {
                Rat d = factor();
                if (O_.is_zero(d)) fail("division by zero");
                r = O_.div(r, d);
            } else
                return r;
        }
    }

    Rat factor() {
        Rat b = base();
        if (eat('^')) {
            skip_ws();
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("exponent must be a nonnegative integer");
            uint64_t e = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                e = e * 10 + static_cast<uint64_t>(s_[pos_] - '0');
                if (e > 1000000) fail("exponent too large");
                ++pos_;
            }
            return O_.pow(b, e);
        }
        return b;
    }

    Rat base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Rat r = expr();
            if (!eat(')')) fail("missing ')'");
            return r;
        }
        if (c == '-') {
            ++pos_;
            return O_.neg(factor());
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long long n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                if (n > (1ll << 40)) fail("integer literal too large");
                ++pos_;
            }
            return O_.from_int(n);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            auto it = symbols_.find(name);
            if (it == symbols_.end()) fail("unknown symbol '" + name + "'");
            return it->second;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

FieldLit parse_field_literal(const std::string& s) {
    FieldLit lit;
    size_t i = 0;
    auto read_uint = [&](const char* what) -> uint64_t {
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw usage_error(std::string("bad field literal '") + s + "': expected " + what);
        uint64_t n = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            n = n * 10 + static_cast<uint64_t>(s[i] - '0');
            if (n > (1ull << 40)) throw usage_error("field literal out of range");
            ++i;
        }
        return n;
    };
    lit.p = read_uint("a prime");
    if (i < s.size()) {
        if (s[i] != '^') throw usage_error("bad field literal '" + s + "': expected 'p' or 'p^m'");
        ++i;
        const uint64_t m = read_uint("an exponent");
        if (i != s.size() || m == 0 || m > 64)
            throw usage_error("bad field literal '" + s + "'");
        lit.m = static_cast<unsigned>(m);
    }
    return lit;
}

FqPtr make_field_from_literal(const std::string& s) {
    const FieldLit lit = parse_field_literal(s);
    try {
        return Fq::make(lit.p, lit.m);
    } catch (const domain_error& e) {
        throw usage_error("bad field literal '" + s + "': " + e.what());
    }
}

Rat parse_ratfunc(const RatOps& O, const std::string& s) {
    return RatParser(O, s).parse();
}

FqPoly parse_poly(const FqPolyOps& R, const std::string& s) {
    const RatOps O{R};
    Rat r = parse_ratfunc(O, s);
    if (!R.is_one(r.den)) throw usage_error("'" + s + "' is not a polynomial");
    return r.num;
}

Fe parse_element(const FqPtr& F, const std::string& s) {
    auto O = rat_field(F, "@u");  // variable name that cannot appear in input
    Rat r = parse_ratfunc(O, s);
    if (!O.R.is_one(r.den) || O.R.deg(r.num) > 0)
        throw usage_error("'" + s + "' is not a field element");
    return O.R.is_zero(r.num) ? F->zero() : r.num.c[0];
}

}  // namespace kappau
