#include "kappau/nagao.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "json.hpp"

namespace kappau {

namespace {

// Character sum over x of x ((x (x+A)) - A^3) in log representation with the
// Zech table: two table additions and index arithmetic per x.
long long fiber_sum(const Fq::Tables& T, uint64_t q1, uint32_t lA) {
    const uint32_t half = static_cast<uint32_t>(q1 / 2);  // log(-1), q odd
    const uint64_t la3 = (3ull * lA) % q1;
    const uint32_t lnegA3 = static_cast<uint32_t>((la3 + half) % q1);
    long long acc = 0;
    for (uint32_t lx = 0; lx < q1; ++lx) {
        // t = x + A = x (1 + g^{lA - lx})
        uint32_t k = lA >= lx ? lA - lx : static_cast<uint32_t>(lA + q1) - lx;
        const uint32_t z1 = T.zech[k];
        if (z1 == Fq::Tables::kZechNeg) {
            // x = -A: f = x(0 - A^3) = A^4, a nonzero square
            acc += 1;
            continue;
        }
        uint64_t lt = lx + z1;
        if (lt >= q1) lt -= q1;
        // m = x * t
        uint64_t lm = lx + lt;
        if (lm >= q1) lm -= q1;
        // s = m - A^3 = m (1 + g^{lnegA3 - lm})
        uint32_t k2 = lnegA3 >= lm ? static_cast<uint32_t>(lnegA3 - lm)
                                   : static_cast<uint32_t>(lnegA3 + q1 - lm);
        const uint32_t z2 = T.zech[k2];
        if (z2 == Fq::Tables::kZechNeg) continue;  // f = 0
        uint64_t ls = lm + z2;
        // f = x * s; only the parity of the log matters and q-1 is even
        acc += ((lx + ls) & 1) ? -1 : 1;
    }
    return acc;
}

std::string trunc_digits(unsigned long long num, unsigned long long den) {
    const unsigned long long ip = num / den;
    const unsigned long long frac = (num % den) * 1000ull / den;
    std::string s = ip == 0 ? "" : std::to_string(ip);
    std::string f = std::to_string(frac);
    return s + "." + std::string(3 - f.size(), '0') + f;
}

}  // namespace

long long nagao_place_sum(const Family& fam, const FqPoly& pi) {
    const auto C = completion(fam.O, finite_place(fam.O, pi));
    const auto& Fv = *C.Fv;
    if (!Fv.has_tables())
        throw domain_error("residue field too large for the fiber sum");
    const auto& T = *Fv.tables();
    const uint64_t q1 = T.q1;
    const Fe c = Fv.embed_base(fam.c), d = Fv.embed_base(fam.d);
    const Fe duhat = Fv.mul(d, C.u_image);
    const uint64_t p = Fv.p();

    long long total = 0;
    for (uint64_t sid = 0; sid < Fv.size(); ++sid) {
        const Fe s = Fv.from_id(sid);
        const Fe t = Fv.add(Fv.mul(s, s), C.u_image);
        const Fe A = Fv.add(Fv.mul(c, Fv.pow(t, 2 * p)), duhat);
        if (Fv.is_zero(A)) continue;  // the cubic becomes x^3: sum is 0
        total += fiber_sum(T, q1, T.logt[Fv.to_id(A)]);
    }
    return total;
}

long long nagao_left(const Family& fam, unsigned n, unsigned threads,
                     NagaoStats* stats) {
    if (n < 1) throw domain_error("level must be at least 1");
    const auto t0 = std::chrono::steady_clock::now();
    const auto pis = monic_irreducibles(fam.O.R, n);
    if (threads == 0) threads = 1;

    std::vector<long long> partial(pis.size(), 0);
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= pis.size()) return;
            partial[i] = nagao_place_sum(fam, pis[i]);
        }
    };
    if (threads <= 1 || pis.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    long long total = 0;
    for (long long v : partial) total += v;

    if (stats) {
        stats->places = pis.size();
        uint64_t qv = 1;
        for (unsigned i = 0; i < n; ++i) qv *= fam.O.R.K.F->size();
        stats->fibers = pis.size() * qv;
        stats->seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
    return total;
}

std::string format_truncated_3(long long num, long long den) {
    if (den == 0) throw domain_error("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const bool neg = num < 0;
    const unsigned long long a = neg ? static_cast<unsigned long long>(-(num + 1)) + 1
                                     : static_cast<unsigned long long>(num);
    return (neg ? "-" : "") + trunc_digits(a, static_cast<unsigned long long>(den));
}

NagaoRow nagao_row(const Family& fam, unsigned n, unsigned threads, NagaoStats* stats) {
    if (n < 2) throw domain_error("table rows start at level 2");
    NagaoRow row;
    row.q = fam.O.R.K.F->size();
    row.n = n;
    // q^{2n} with overflow guard (format_truncated_3 multiplies by 1000)
    unsigned long long pw = 1;
    for (unsigned i = 0; i < 2 * n; ++i) {
        if (pw > (1ull << 50) / row.q) throw domain_error("level too large for exact output");
        pw *= row.q;
    }
    row.right_num = static_cast<long long>(pw);
    row.right_den = static_cast<long long>(n);
    row.left = nagao_left(fam, n, threads, stats);
    row.right_str = format_truncated_3(row.right_num, row.right_den);
    row.ratio_str = row.left == 0 ? "n/a"
                                  : format_truncated_3(row.right_num,
                                                       row.right_den * row.left);
    return row;
}

std::vector<NagaoRow> nagao_table(const Family& fam, unsigned n_min, unsigned n_max,
                                  unsigned threads, std::vector<NagaoStats>* stats) {
    if (n_min < 2 || n_max < n_min) throw domain_error("bad level range");
    std::vector<NagaoRow> rows;
    for (unsigned n = n_min; n <= n_max; ++n) {
        NagaoStats st;
        rows.push_back(nagao_row(fam, n, threads, &st));
        if (stats) stats->push_back(st);
    }
    return rows;
}

std::string nagao_csv(const std::vector<NagaoRow>& rows) {
    std::string out = "q,n,left,right,ratio\n";
    for (const auto& r : rows) {
        out += std::to_string(r.q) + "," + std::to_string(r.n) + "," +
               std::to_string(r.left) + "," + r.right_str + "," + r.ratio_str + "\n";
    }
    return out;
}

std::string nagao_json(const std::vector<NagaoRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json o;
        o["q"] = r.q;
        o["n"] = r.n;
        o["left"] = r.left;
        o["right"] = r.right_str;
        o["ratio"] = r.ratio_str;
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

}  // namespace kappau
