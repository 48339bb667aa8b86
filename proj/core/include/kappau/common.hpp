#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace kappau {

// Raised when an operation's mathematical precondition is violated
// (singular curve, reducible modulus, pole where a residue was asked, ...).
// The CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed textual input (unparsable polynomials, bad field
// literals).  The CLI maps this to exit code 2, like bad flags.
class usage_error : public std::runtime_error {
public:
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

// Degree of the zero polynomial.  Chosen far from INT_MIN so that sums of two
// degrees never overflow while staying smaller than any genuine degree.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 4;

inline bool deg_is_finite(int d) { return d > kNegInfDeg / 2; }

inline int deg_add(int a, int b) {
    if (!deg_is_finite(a) || !deg_is_finite(b)) return kNegInfDeg;
    return a + b;
}

// Valuations: ord of the zero element.
inline constexpr long long kOrdInf = std::numeric_limits<long long>::max() / 4;

inline bool ord_is_finite(long long v) { return v < kOrdInf / 2; }

// Sign exponentiation: s^e for s in {-1,+1} and any integer e.
inline int sign_pow(int s, long long e) { return (e % 2 == 0) ? 1 : s; }

// Exact rational with small terms (used for Nagao right-hand sides and A_v).
struct Rational64 {
    long long num = 0;
    long long den = 1;  // > 0
};

}  // namespace kappau
