#ifndef TERNARY_CODES_HPP
#define TERNARY_CODES_HPP

#include <vector>

#include "ternary/cosets.hpp"
#include "ternary/field.hpp"
#include "ternary/poly.hpp"

namespace ternary {

/// Ternary cyclic code of length n = 3^m - 1 whose generator polynomial is
/// the product of the minimal polynomials of alpha^i over the distinct
/// cyclotomic cosets of the given zero exponents.
struct CyclicCode {
    FieldCtx ctx;
    std::vector<u64> zeros;  // sorted, deduplicated input exponents
    TritPoly generator;
    u64 n = 0;
    u64 k = 0;  // n - deg(generator)
    // Set when two requested zeros fell in the same coset (they collapse
    // into one minimal-polynomial factor instead of erroring).
    bool duplicate_cosets = false;
};

/// Minimal polynomial of alpha^i over F_3: the product of (X - alpha^(i*3^r))
/// over the Frobenius orbit. Monic of degree |C_i|.
TritPoly minimal_poly(const FieldCtx& ctx, u64 i);

CyclicCode build_code(const FieldCtx& ctx, std::vector<u64> zeros);

/// Evaluates p at x (coefficients embedded via F_3 in GF(3^m)).
FieldElem eval_poly(const FieldCtx& ctx, const TritPoly& p, FieldElem x);

/// True iff p(alpha^i) = 0 for every zero exponent of the code.
bool is_codeword(const CyclicCode& code, const TritPoly& p);

}  // namespace ternary

#endif
