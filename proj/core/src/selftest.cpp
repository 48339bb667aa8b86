#include "kappau/selftest.hpp"

#include <sstream>

#include "kappau/family.hpp"
#include "kappau/nagao.hpp"
#include "kappau/textio.hpp"

namespace kappau {

namespace {

void add(std::vector<SelfCheck>& out, const std::string& name, bool ok,
         std::string detail = "") {
    out.push_back(SelfCheck{name, ok, std::move(detail)});
}

template <class Fn>
void guarded(std::vector<SelfCheck>& out, const std::string& name, Fn&& fn) {
    try {
        fn();
    } catch (const std::exception& e) {
        add(out, name, false, std::string("exception: ") + e.what());
    }
}

}  // namespace

std::vector<SelfCheck> run_selftests() {
    std::vector<SelfCheck> out;

    guarded(out, "field-moduli", [&] {
        const auto F9 = Fq::make(3, 2);
        const auto F27 = Fq::make(3, 3);
        const bool ok9 = F9->describe().find("a^2+1") != std::string::npos;
        const bool ok27 = F27->describe().find("a^3+2*a+1") != std::string::npos;
        add(out, "field-moduli", ok9 && ok27,
            F9->describe() + "; " + F27->describe());
    });

    guarded(out, "field-inverse", [&] {
        const auto F = Fq::make(3, 4);
        bool ok = true;
        for (uint64_t id = 1; id < F->size() && ok; ++id) {
            const Fe a = F->from_id(id);
            ok = F->is_one(F->mul(a, F->inv(a)));
        }
        add(out, "field-inverse", ok, "all units of a degree-4 extension");
    });

    guarded(out, "factor-roundtrip", [&] {
        const auto F = Fq::make(3, 1);
        auto R = poly_ring(F);
        // (u^2+1)^3 (u+1)^2 u over GF(3)
        const auto f = R.mul(R.mul(R.pow(parse_poly(R, "u^2+1"), 3),
                                   R.pow(parse_poly(R, "u+1"), 2)),
                             R.X());
        const auto fac = factor(R, f);
        FqPoly back = R.constant(fac.unit);
        for (const auto& part : fac.parts) back = R.mul(back, R.pow(part.base, part.mult));
        add(out, "factor-roundtrip", R.eq(back, f) && fac.parts.size() == 3,
            std::to_string(fac.parts.size()) + " distinct factors");
    });

    guarded(out, "moebius-routes", [&] {
        const auto F = Fq::make(5, 1);
        auto R = poly_ring(F);
        bool ok = true;
        for (const char* s : {"u^3+u+1", "u^2+4", "u^4+2*u+3", "u^2"}) {
            const auto f = parse_poly(R, s);
            ok = ok && moebius(R, f) == moebius_disc(R, f);
        }
        add(out, "moebius-routes", ok, "factorization route matches the discriminant route");
    });

    guarded(out, "completion-character", [&] {
        const auto F = Fq::make(3, 1);
        auto O = rat_field(F);
        const auto C = completion(O, finite_place(O, parse_poly(O.R, "u^2+1")));
        // chi_at verifies chi_v(a) = chi_kappa(a)^{deg v} internally
        const bool ok = chi_at(O, C, F->from_int(2)) == 1;
        add(out, "completion-character", ok, "degree-2 place over GF(3)");
    });

    guarded(out, "root-number-routes", [&] {
        const auto F = Fq::make(3, 1);
        auto O = rat_field(F);
        const auto fam = make_family(O, F->from_int(1), F->from_int(1));
        bool ok = true;
        for (const char* s : {"u", "u^2+1", "1/u", "(u+1)/(u^2+2)"}) {
            const Rat t = parse_ratfunc(O, s);
            const int w = family_w_closed(fam, t);
            ok = ok && w == family_w_mu(fam, t) && w == family_w_product(fam, t);
        }
        add(out, "root-number-routes", ok, "closed form, Moebius form and local product agree");
    });

    guarded(out, "order-certificate", [&] {
        const auto F = Fq::make(3, 1);
        auto O = rat_field(F, "T");
        const Rat T = O.from_ring(O.R.X());
        const auto E = make_curve(O, T, O.neg(O.pow(T, 3)));
        const auto cert = order_certificate(E, make_point(E, O.neg(T), O.pow(T, 2)));
        const bool ok = cert.kind == OrderCertificate::Kind::InfiniteOrder &&
                        cert.doublings == 2 && !cert.witness.infinite &&
                        O.R.eq(cert.witness.pi, parse_poly(O.R, "T+1"));
        add(out, "order-certificate", ok, cert.detail);
    });

    guarded(out, "fiber-sum", [&] {
        const auto fam = make_family(Fq::make(3, 1), 1, 1);
        const auto row = nagao_row(fam, 2);
        add(out, "fiber-sum", row.left == 17 && row.ratio_str == "2.382",
            "level 2 over GF(3): left = " + std::to_string(row.left) +
                ", ratio = " + row.ratio_str);
    });

    return out;
}

}  // namespace kappau
