#pragma once

#include <cstdint>
#include <string>

#include "kappau/ratfunc.hpp"

namespace kappau {

// Field literal "p" or "p^m", e.g. "3", "5", "3^2".
struct FieldLit {
    uint64_t p = 0;
    unsigned m = 1;
};
FieldLit parse_field_literal(const std::string& s);  // throws usage_error
FqPtr make_field_from_literal(const std::string& s);

// Expression parser for polynomials and rational functions in the ring
// variable, with coefficients written through the generator names of the
// field tower (e.g. "u^4+2*u^2+2", "(a+1)*u^2+a", "(u^2+1)/(u^3+2*u)").
// Grammar: + - * / ^ with parentheses and unary minus; exponents are
// nonnegative integers.  Malformed input throws usage_error.
Rat parse_ratfunc(const RatOps& O, const std::string& s);

// Same grammar, but the result must be polynomial (denominator 1).
FqPoly parse_poly(const FqPolyOps& R, const std::string& s);

// A field element: constant expression over the tower generators.
Fe parse_element(const FqPtr& F, const std::string& s);

}  // namespace kappau
