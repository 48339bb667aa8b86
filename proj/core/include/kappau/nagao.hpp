#pragma once

#include <string>
#include <vector>

#include "kappau/family.hpp"

namespace kappau {

// One row of the fiber-sum table at level n:
//   left  = sum over monic irreducible pi of degree n, s and x in the residue
//           field, of chi(x^3 + A x^2 - A^3 x) with A = c (s^2+uhat)^{2p} + d uhat
//           (degenerate fibers contribute their literal character sums);
//   right = q^{2n} / n exactly;
//   ratio = right / left, truncated (not rounded) to 3 decimals.
struct NagaoRow {
    uint64_t q = 0;
    unsigned n = 0;
    long long left = 0;
    long long right_num = 0, right_den = 1;
    std::string right_str, ratio_str;
};

struct NagaoStats {
    uint64_t places = 0;
    uint64_t fibers = 0;   // (pi, s) pairs scanned
    double seconds = 0;
};

// Character sum over one place (all s, all x in the residue field of pi).
long long nagao_place_sum(const Family& fam, const FqPoly& pi);

long long nagao_left(const Family& fam, unsigned n, unsigned threads = 1,
                     NagaoStats* stats = nullptr);

NagaoRow nagao_row(const Family& fam, unsigned n, unsigned threads = 1,
                   NagaoStats* stats = nullptr);

std::vector<NagaoRow> nagao_table(const Family& fam, unsigned n_min, unsigned n_max,
                                  unsigned threads = 1,
                                  std::vector<NagaoStats>* stats = nullptr);

// Decimal truncation toward zero with exactly 3 digits; no leading zero when
// the integer part vanishes ("40.500", ".964", "-.250").
std::string format_truncated_3(long long num, long long den);

// Serialization: CSV with header q,n,left,right,ratio; JSON array of row
// objects with the same fields.
std::string nagao_csv(const std::vector<NagaoRow>& rows);
std::string nagao_json(const std::vector<NagaoRow>& rows);

}  // namespace kappau
