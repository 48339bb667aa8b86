// Command-line front end for the kappau library: finite fields, polynomial
// arithmetic over kappa[u], reduction types and root numbers of curves
// y^2 = x^3 + A x^2 + B x over kappa(u), the explicit twist family, and the
// fiber-averaged character-sum tables.
//
// Exit codes: 0 success, 1 domain error (a violated mathematical
// precondition), 2 usage error (bad flags or malformed input text).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "kappau/ec.hpp"
#include "kappau/family.hpp"
#include "kappau/nagao.hpp"
#include "kappau/selftest.hpp"
#include "kappau/textio.hpp"

namespace {

using nlohmann::ordered_json;
using namespace kappau;

struct RunConfig {
    std::string field = "3";
    std::string c = "1", d = "1";
    std::string var = "u";
    uint64_t seed = 0;
    unsigned threads = 0;  // 0 = use available parallelism
    std::string format = "text";
    std::string out;  // empty = stdout
    bool quiet = false;
};

unsigned effective_threads(const RunConfig& cfg) {
    if (cfg.threads != 0) return cfg.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// All payloads go through here so --out always receives exactly the bytes
// that would have gone to stdout.
void emit(const RunConfig& cfg, const std::string& payload) {
    if (cfg.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream os(cfg.out, std::ios::binary);
    if (!os) throw domain_error("cannot open output file: " + cfg.out);
    os << payload;
}

void note(const RunConfig& cfg, const std::string& line) {
    if (!cfg.quiet) std::cerr << line << "\n";
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

// Shared curve input: either --t (the curve y^2 = x^3 + t x^2 - t^3 x) or an
// explicit pair --A/--B.
struct CurveArgs {
    std::string t, A, B;
};

RatCurve build_curve(const RatOps& O, const CurveArgs& ca) {
    const bool has_t = !ca.t.empty();
    const bool has_ab = !ca.A.empty() || !ca.B.empty();
    if (has_t == has_ab)
        throw usage_error("give either --t or both --A and --B");
    if (has_t) {
        const Rat t = parse_ratfunc(O, ca.t);
        return make_curve(O, t, O.neg(O.pow(t, 3)));
    }
    if (ca.A.empty() || ca.B.empty())
        throw usage_error("both --A and --B are required");
    return make_curve(O, parse_ratfunc(O, ca.A), parse_ratfunc(O, ca.B));
}

ordered_json local_json(const RatOps& O, const LocalInfo& L) {
    ordered_json j;
    j["place"] = place_to_string(O, L.v);
    j["degree"] = L.v.infinite ? 1 : O.R.deg(L.v.pi);
    j["type"] = red_type_name(L.type);
    j["ord_delta"] = L.ord_delta;
    j["ord_c4"] = ord_is_finite(L.ord_c4) ? ordered_json(L.ord_c4)
                                          : ordered_json(nullptr);
    j["ord_c6"] = ord_is_finite(L.ord_c6) ? ordered_json(L.ord_c6)
                                          : ordered_json(nullptr);
    j["ord_j"] = ord_is_finite(L.ord_j) ? ordered_json(L.ord_j)
                                        : ordered_json(nullptr);
    j["ram_index"] = L.ram_index;
    j["w"] = L.w;
    return j;
}

std::string ord_text(long long v) {
    return ord_is_finite(v) ? std::to_string(v) : std::string("inf");
}

// ---------------------------------------------------------------- field-info

void cmd_field_info(const RunConfig& cfg) {
    const FqPtr F = make_field_from_literal(cfg.field);
    if (cfg.format == "json") {
        ordered_json j;
        j["field"] = cfg.field;
        j["p"] = F->p();
        j["degree"] = F->degree();
        j["size"] = F->size();
        j["description"] = F->describe();
        j["generator"] = F->is_prime_field() ? ordered_json(nullptr)
                                             : ordered_json(F->gen_name());
        j["log_tables"] = F->has_tables();
        emit(cfg, json_text(j));
        return;
    }
    if (cfg.format == "csv") throw usage_error("field-info has no CSV form");
    std::ostringstream os;
    os << F->describe() << "\n"
       << "characteristic: " << F->p() << "\n"
       << "degree over prime field: " << F->degree() << "\n"
       << "size: " << F->size() << "\n"
       << "log tables: " << (F->has_tables() ? "yes" : "no") << "\n";
    emit(cfg, os.str());
}

// ------------------------------------------------------------------------ mu

void cmd_mu(const RunConfig& cfg, const std::string& poly_s,
            const std::string& method) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const FqPolyOps R{FqOps{F}, cfg.var};
    const FqPoly P = parse_poly(R, poly_s);
    std::optional<int> via_factor, via_disc;
    if (method == "factor" || method == "both")
        via_factor = moebius(R, P, cfg.seed);
    if (method == "disc" || method == "both") via_disc = moebius_disc(R, P);
    if (via_factor && via_disc && *via_factor != *via_disc)
        throw domain_error("Moebius routes disagree; this is a bug");

    if (cfg.format == "json") {
        ordered_json j;
        j["field"] = cfg.field;
        j["poly"] = R.to_string(P);
        if (via_factor) j["mu_factor"] = *via_factor;
        if (via_disc) j["mu_disc"] = *via_disc;
        if (via_factor && via_disc) j["agree"] = true;
        emit(cfg, json_text(j));
        return;
    }
    if (cfg.format == "csv") throw usage_error("mu has no CSV form");
    std::ostringstream os;
    if (via_factor) os << "mu via factorization: " << *via_factor << "\n";
    if (via_disc) os << "mu via discriminant:  " << *via_disc << "\n";
    emit(cfg, os.str());
}

// -------------------------------------------------------------------- chowla

void cmd_chowla(const RunConfig& cfg, const std::string& exp,
                const std::string& a_s, const std::string& b_s,
                const std::string& g1_s, const std::string& g2_s) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const FqPolyOps R{FqOps{F}, cfg.var};
    const Fe a = parse_element(F, a_s);
    const Fe b = parse_element(F, b_s);
    const FqPoly g1 = parse_poly(R, g1_s);
    const FqPoly g2 = parse_poly(R, g2_s);
    const unsigned e = exp == "2p" ? 2 : 4;

    const FqPoly P = chowla_poly(R, a, b, g1, g2, e);
    const int closed = e == 2 ? chowla_mu_closed(R, a, b, g1, g2)
                              : chowla_lambda_closed(R, a, b, g1, g2);
    const int direct =
        e == 2 ? moebius(R, P, cfg.seed) : liouville(R, P, cfg.seed);
    if (closed != direct)
        throw domain_error("closed form disagrees with direct value; "
                           "this is a bug");

    if (cfg.format == "json") {
        ordered_json j;
        j["field"] = cfg.field;
        j["exp"] = exp;
        j["a"] = F->to_string(a);
        j["b"] = F->to_string(b);
        j["g1"] = R.to_string(g1);
        j["g2"] = R.to_string(g2);
        j["poly"] = R.to_string(P);
        j["function"] = e == 2 ? "mu" : "lambda";
        j["closed"] = closed;
        j["direct"] = direct;
        j["agree"] = true;
        emit(cfg, json_text(j));
        return;
    }
    if (cfg.format == "csv") throw usage_error("chowla has no CSV form");
    std::ostringstream os;
    os << (e == 2 ? "mu" : "lambda") << "(" << R.to_string(P) << ")\n"
       << "closed form: " << closed << "\n"
       << "direct:      " << direct << "\n";
    emit(cfg, os.str());
}

// ------------------------------------------------------- reduction/rootnumber

void cmd_reduction(const RunConfig& cfg, const CurveArgs& ca) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const RatOps O = rat_field(F, cfg.var);
    const RatCurve E = build_curve(O, ca);
    const auto survey = reduction_survey(E);

    std::ostringstream os;
    if (cfg.format == "json") {
        // One JSON object per line, one line per examined place.
        for (const auto& L : survey) os << local_json(O, L).dump() << "\n";
    } else if (cfg.format == "csv") {
        os << "place,degree,type,ord_delta,ord_c4,ord_c6,ord_j,ram_index,w\n";
        for (const auto& L : survey)
            os << '"' << place_to_string(O, L.v) << "\","
               << (L.v.infinite ? 1 : O.R.deg(L.v.pi)) << ",\""
               << red_type_name(L.type) << "\"," << L.ord_delta << ","
               << ord_text(L.ord_c4) << "," << ord_text(L.ord_c6) << ","
               << ord_text(L.ord_j) << "," << L.ram_index << "," << L.w
               << "\n";
    } else {
        for (const auto& L : survey) {
            os << place_to_string(O, L.v) << ": " << red_type_name(L.type)
               << "  [ord(Delta) = " << L.ord_delta
               << ", ord(c4) = " << ord_text(L.ord_c4)
               << ", ord(j) = " << ord_text(L.ord_j);
            if (L.type == RedType::AdditivePotGood)
                os << ", e = " << L.ram_index;
            os << ", w = " << (L.w > 0 ? "+1" : "-1") << "]\n";
        }
    }
    emit(cfg, os.str());
}

void cmd_rootnumber(const RunConfig& cfg, const CurveArgs& ca) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const RatOps O = rat_field(F, cfg.var);
    const RatCurve E = build_curve(O, ca);
    const auto survey = reduction_survey(E);
    int W = 1;
    for (const auto& L : survey) W *= L.w;

    if (cfg.format == "json") {
        ordered_json places = ordered_json::array();
        for (const auto& L : survey) {
            ordered_json j;
            j["place"] = place_to_string(O, L.v);
            j["type"] = red_type_name(L.type);
            j["w"] = L.w;
            places.push_back(j);
        }
        ordered_json j;
        j["places"] = places;
        j["W"] = W;
        emit(cfg, json_text(j));
        return;
    }
    if (cfg.format == "csv") throw usage_error("rootnumber has no CSV form");
    std::ostringstream os;
    for (const auto& L : survey)
        os << place_to_string(O, L.v) << ": " << (L.w > 0 ? "+1" : "-1")
           << "\n";
    os << "W = " << (W > 0 ? "+1" : "-1") << "\n";
    emit(cfg, os.str());
}

// ------------------------------------------------------------------ family-w

void cmd_family_w(const RunConfig& cfg, const std::string& t_s,
                  const std::string& mode) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const RatOps O = rat_field(F, cfg.var);
    auto fam = make_family(O, parse_element(F, cfg.c), parse_element(F, cfg.d));
    const Rat t = parse_ratfunc(O, t_s);

    std::optional<int> closed, endglobal, product;
    if (mode == "closed" || mode == "all") closed = family_w_closed(fam, t);
    if (mode == "endglobal" || mode == "all")
        endglobal = family_w_mu(fam, t);
    if (mode == "product" || mode == "all") product = family_w_product(fam, t);
    if (mode == "all" && !(closed == endglobal && endglobal == product))
        throw domain_error("root-number routes disagree; this is a bug");

    if (cfg.format == "json") {
        ordered_json j;
        j["field"] = cfg.field;
        j["c"] = F->to_string(fam.c);
        j["d"] = F->to_string(fam.d);
        j["t"] = O.to_string(t);
        if (closed) j["closed"] = *closed;
        if (endglobal) j["endglobal"] = *endglobal;
        if (product) j["product"] = *product;
        if (mode == "all") j["agree"] = true;
        emit(cfg, json_text(j));
        return;
    }
    if (cfg.format == "csv") throw usage_error("family-w has no CSV form");
    std::ostringstream os;
    if (closed) os << "closed form:       " << *closed << "\n";
    if (endglobal) os << "Moebius form:      " << *endglobal << "\n";
    if (product) os << "product of locals: " << *product << "\n";
    emit(cfg, os.str());
}

// --------------------------------------------------------------- torsion-cert

void cmd_torsion_cert(const RunConfig& cfg, const CurveArgs& ca,
                      const std::string& x_s, const std::string& y_s,
                      unsigned max_doublings) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const RatOps O = rat_field(F, cfg.var);
    const RatCurve E = build_curve(O, ca);
    const RatPoint P{false, parse_ratfunc(O, x_s), parse_ratfunc(O, y_s)};
    const OrderCertificate cert = order_certificate(E, P, max_doublings);

    const char* verdict =
        cert.kind == OrderCertificate::Kind::InfiniteOrder ? "infinite-order"
        : cert.kind == OrderCertificate::Kind::Torsion     ? "torsion"
                                                           : "inconclusive";
    if (cfg.format == "json") {
        ordered_json j;
        j["verdict"] = verdict;
        j["doublings"] = cert.doublings;
        j["witness"] = cert.kind == OrderCertificate::Kind::InfiniteOrder
                           ? ordered_json(place_to_string(O, cert.witness))
                           : ordered_json(nullptr);
        j["detail"] = cert.detail;
        emit(cfg, json_text(j));
        return;
    }
    if (cfg.format == "csv") throw usage_error("torsion-cert has no CSV form");
    std::ostringstream os;
    os << "verdict: " << verdict << "\n"
       << "doublings: " << cert.doublings << "\n";
    if (cert.kind == OrderCertificate::Kind::InfiniteOrder)
        os << "witness place: " << place_to_string(O, cert.witness) << "\n";
    os << cert.detail << "\n";
    emit(cfg, os.str());
}

// -------------------------------------------------------------------- galois

void cmd_galois(const RunConfig& cfg, const std::string& a_s,
                const std::string& b_s) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const RatOps O = rat_field(F, cfg.var);
    const Rat a = parse_ratfunc(O, a_s);
    const Rat b = parse_ratfunc(O, b_s);
    const QuarticReport rep = biquadratic_galois(O, a, b);

    if (cfg.format == "json") {
        ordered_json j;
        j["field"] = cfg.field;
        j["a"] = O.to_string(a);
        j["b"] = O.to_string(b);
        j["type"] = quartic_type_name(rep.type);
        ordered_json rads = ordered_json::array();
        for (const auto& r : rep.radicands) rads.push_back(O.to_string(r));
        j["radicands"] = rads;
        emit(cfg, json_text(j));
        return;
    }
    if (cfg.format == "csv") throw usage_error("galois has no CSV form");
    std::ostringstream os;
    os << "X^4 + (" << O.to_string(a) << ")*X^2 + (" << O.to_string(b)
       << ")\n"
       << "Galois group: " << quartic_type_name(rep.type) << "\n";
    for (const auto& r : rep.radicands)
        os << "quadratic subfield radicand: " << O.to_string(r) << "\n";
    emit(cfg, os.str());
}

// ------------------------------------------------------------------- scan-u0

void cmd_scan_u0(const RunConfig& cfg, unsigned min_deg, unsigned max_deg) {
    if (min_deg < 1 || max_deg < min_deg)
        throw usage_error("need 1 <= min-deg <= max-deg");
    const FqPtr F = make_field_from_literal(cfg.field);
    const RatOps O = rat_field(F, cfg.var);
    auto fam = make_family(O, parse_element(F, cfg.c), parse_element(F, cfg.d));
    const ScanResult res =
        scan_u0(fam, min_deg, max_deg, effective_threads(cfg));

    struct Row {
        std::string u0, pi1, pi2, detail;
        unsigned deg;
        bool ok;
    };
    std::vector<Row> rows;
    for (const auto& h : res.hits) {
        const HitVerification v = verify_hit(fam, h);
        rows.push_back({O.R.to_string(h.u0), h.pis.ring.to_string(h.pis.pi1),
                        h.pis.ring.to_string(h.pis.pi2), v.detail, h.deg,
                        v.ok});
    }
    note(cfg, "tested " + std::to_string(res.tested) + " candidates, " +
                  std::to_string(rows.size()) + " hits");

    std::ostringstream os;
    if (cfg.format == "json") {
        ordered_json j;
        j["field"] = cfg.field;
        j["c"] = F->to_string(fam.c);
        j["d"] = F->to_string(fam.d);
        j["min_deg"] = min_deg;
        j["max_deg"] = max_deg;
        j["tested"] = res.tested;
        ordered_json hits = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json h;
            h["u0"] = r.u0;
            h["deg"] = r.deg;
            h["pi1"] = r.pi1;
            h["pi2"] = r.pi2;
            h["verified"] = r.ok;
            h["detail"] = r.detail;
            hits.push_back(h);
        }
        j["hits"] = hits;
        os << json_text(j);
    } else if (cfg.format == "csv") {
        os << "u0,deg,pi1,pi2,verified\n";
        for (const auto& r : rows)
            os << '"' << r.u0 << "\"," << r.deg << ",\"" << r.pi1 << "\",\""
               << r.pi2 << "\"," << (r.ok ? "true" : "false") << "\n";
    } else {
        os << "tested " << res.tested << " monic irreducible u0 of degree "
           << min_deg << ".." << max_deg << ", found " << rows.size()
           << " hit(s)\n";
        for (const auto& r : rows)
            os << "  " << r.u0 << "  [deg " << r.deg << ", "
               << (r.ok ? "verified: " : "NOT VERIFIED: ") << r.detail
               << "]\n";
    }
    emit(cfg, os.str());
}

// --------------------------------------------------------------------- nagao

void cmd_nagao(const RunConfig& cfg, unsigned n_min, unsigned n_max) {
    const FqPtr F = make_field_from_literal(cfg.field);
    const RatOps O = rat_field(F, cfg.var);
    auto fam = make_family(O, parse_element(F, cfg.c), parse_element(F, cfg.d));
    std::vector<NagaoStats> stats;
    const auto rows =
        nagao_table(fam, n_min, n_max, effective_threads(cfg), &stats);
    for (size_t i = 0; i < rows.size(); ++i) {
        std::ostringstream ns;
        ns << "n = " << rows[i].n << ": " << stats[i].places << " places, "
           << stats[i].fibers << " fibers, " << stats[i].seconds << "s";
        note(cfg, ns.str());
    }

    if (cfg.format == "csv") {
        emit(cfg, nagao_csv(rows));
        return;
    }
    if (cfg.format == "json") {
        emit(cfg, nagao_json(rows));
        return;
    }
    std::ostringstream os;
    os << "  q   n        left        right    ratio\n";
    for (const auto& r : rows) {
        os << std::setw(3) << r.q << std::setw(4) << r.n << std::setw(12)
           << r.left << std::setw(13) << r.right_str << std::setw(9)
           << r.ratio_str << "\n";
    }
    emit(cfg, os.str());
}

// ------------------------------------------------------------------ selftest

void cmd_selftest(const RunConfig& cfg) {
    const auto checks = run_selftests();
    std::ostringstream os;
    unsigned failed = 0;
    for (const auto& c : checks) {
        if (c.ok) {
            os << "pass - " << c.name << "\n";
        } else {
            ++failed;
            os << "FAIL - " << c.name << ": " << c.detail << "\n";
        }
    }
    emit(cfg, os.str());
    if (failed > 0)
        throw domain_error(std::to_string(failed) + " selftest check(s) failed");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic curves over rational function fields in odd "
                 "characteristic: reduction types, root numbers, and "
                 "fiber-averaged character sums"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file with option defaults");

    RunConfig cfg;
    app.add_option("--field", cfg.field,
                   "base field literal: p or p^m, e.g. 3 or 3^2")
        ->capture_default_str();
    app.add_option("--c", cfg.c, "family unit c")->capture_default_str();
    app.add_option("--d", cfg.d, "family unit d")->capture_default_str();
    app.add_option("--var", cfg.var, "ring variable name")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "PRNG seed for randomized splitting")
        ->capture_default_str();
    app.add_option("--threads", cfg.threads,
                   "worker threads (0 = all available)");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "write output to this file");
    app.add_flag("--quiet", cfg.quiet, "suppress progress notes on stderr");

    // field-info
    auto* sc_field = app.add_subcommand("field-info", "describe the field");

    // mu
    std::string mu_poly, mu_method = "both";
    auto* sc_mu =
        app.add_subcommand("mu", "Moebius function of a squarefree-or-not "
                                 "polynomial, two ways");
    sc_mu->add_option("--poly", mu_poly, "monic-or-not polynomial in u")
        ->required();
    sc_mu->add_option("--method", mu_method, "factor | disc | both")
        ->check(CLI::IsMember({"factor", "disc", "both"}))
        ->capture_default_str();

    // chowla
    std::string ch_exp = "2p", ch_a = "1", ch_b = "1", ch_g1, ch_g2;
    auto* sc_chowla = app.add_subcommand(
        "chowla", "closed form vs direct value of mu(a g1^{2p} + b u g2^{2p}) "
                  "or lambda(a g1^{4p} + b u g2^{4p})");
    sc_chowla->add_option("--exp", ch_exp, "2p (mu) or 4p (lambda)")
        ->check(CLI::IsMember({"2p", "4p"}))
        ->capture_default_str();
    sc_chowla->add_option("--a", ch_a, "unit a")->capture_default_str();
    sc_chowla->add_option("--b", ch_b, "unit b")->capture_default_str();
    sc_chowla->add_option("--g1", ch_g1, "polynomial g1")->required();
    sc_chowla->add_option("--g2", ch_g2, "polynomial g2")->required();

    // reduction / rootnumber / torsion-cert share curve flags
    CurveArgs red_ca, root_ca, cert_ca;
    auto add_curve_flags = [](CLI::App* sc, CurveArgs& ca) {
        sc->add_option("--t", ca.t,
                       "parameter t for the curve y^2 = x^3 + t x^2 - t^3 x");
        sc->add_option("--A", ca.A, "coefficient A (with --B)");
        sc->add_option("--B", ca.B, "coefficient B (with --A)");
    };
    auto* sc_red = app.add_subcommand(
        "reduction", "reduction type at every possibly-bad place");
    add_curve_flags(sc_red, red_ca);
    auto* sc_root = app.add_subcommand(
        "rootnumber", "local root numbers and their product");
    add_curve_flags(sc_root, root_ca);

    std::string cert_x, cert_y;
    unsigned cert_max = 8;
    auto* sc_cert = app.add_subcommand(
        "torsion-cert", "certify a point as infinite order or torsion by "
                        "doubling on an integral model");
    add_curve_flags(sc_cert, cert_ca);
    sc_cert->add_option("--x", cert_x, "x-coordinate")->required();
    sc_cert->add_option("--y", cert_y, "y-coordinate")->required();
    sc_cert->add_option("--max-doublings", cert_max, "doubling budget")
        ->capture_default_str();

    // family-w
    std::string fw_t, fw_mode = "all";
    auto* sc_fw = app.add_subcommand(
        "family-w", "root number of the twist family member at t");
    sc_fw->add_option("--t", fw_t, "parameter t in kappa(u)")->required();
    sc_fw->add_option("--mode", fw_mode, "closed | endglobal | product | all")
        ->check(CLI::IsMember({"closed", "endglobal", "product", "all"}))
        ->capture_default_str();

    // galois
    std::string ga_a, ga_b;
    auto* sc_ga = app.add_subcommand(
        "galois", "Galois group of X^4 + a X^2 + b over kappa(u)");
    sc_ga->add_option("--a", ga_a, "quadratic coefficient")->required();
    sc_ga->add_option("--b", ga_b, "constant coefficient")->required();

    // scan-u0
    unsigned scan_min = 1, scan_max = 0;
    auto* sc_scan = app.add_subcommand(
        "scan-u0", "scan monic irreducible u0 for irreducible pi1, pi2");
    sc_scan->add_option("--min-deg", scan_min, "smallest degree")
        ->capture_default_str();
    sc_scan->add_option("--max-deg", scan_max, "largest degree")->required();

    // nagao
    unsigned na_min = 2, na_max = 0;
    auto* sc_nagao = app.add_subcommand(
        "nagao", "fiber-averaged character-sum table");
    sc_nagao->add_option("--n-min", na_min, "first level")
        ->capture_default_str();
    sc_nagao->add_option("--n-max", na_max, "last level")->required();

    // selftest
    auto* sc_self = app.add_subcommand(
        "selftest", "run the built-in oracle checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sc_field->parsed()) cmd_field_info(cfg);
        if (sc_mu->parsed()) cmd_mu(cfg, mu_poly, mu_method);
        if (sc_chowla->parsed())
            cmd_chowla(cfg, ch_exp, ch_a, ch_b, ch_g1, ch_g2);
        if (sc_red->parsed()) cmd_reduction(cfg, red_ca);
        if (sc_root->parsed()) cmd_rootnumber(cfg, root_ca);
        if (sc_cert->parsed())
            cmd_torsion_cert(cfg, cert_ca, cert_x, cert_y, cert_max);
        if (sc_fw->parsed()) cmd_family_w(cfg, fw_t, fw_mode);
        if (sc_ga->parsed()) cmd_galois(cfg, ga_a, ga_b);
        if (sc_scan->parsed()) cmd_scan_u0(cfg, scan_min, scan_max);
        if (sc_nagao->parsed()) cmd_nagao(cfg, na_min, na_max);
        if (sc_self->parsed()) cmd_selftest(cfg);
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
