#ifndef TERNARY_DISTANCE_HPP
#define TERNARY_DISTANCE_HPP

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ternary/codes.hpp"

namespace ternary {

using bigint = boost::multiprecision::cpp_int;

/// Explicit codeword of weight w <= 4: sum c_j x^(s_j) vanishes at alpha^i
/// for every zero exponent i of the code.
struct WeightWitness {
    int weight = 0;
    std::vector<u64> support_exponents;  // distinct positions mod n
    std::vector<int> coefficients;       // matching nonzero trits
};

/// Searches for a codeword of exactly weight w (1 <= w <= 4). Cyclic-shift
/// normalization fixes the last support position to 0 and scaling fixes its
/// coefficient to 1; a zero exponent 0 further restricts coefficient
/// patterns to those summing to 0. Deterministic: the first witness in
/// element-index order. w = 4 is a small-m extra (m <= 4).
std::optional<WeightWitness> find_weight_witness(const CyclicCode& code, int w,
                                                 bool force_large = false);

/// Minimal-weight witness of weight <= max_w (max_w <= 3), or none; the
/// generic oracle the reduced equations are checked against.
std::optional<WeightWitness> find_low_weight(const CyclicCode& code, int max_w,
                                             bool force_large = false);

enum class ReducedStatus { None, Found, ParityFail };

struct ReducedResult {
    ReducedStatus status = ReducedStatus::None;
    std::optional<FieldElem> witness;  // the x outside F_3 solving the equation
    bool found() const { return status == ReducedStatus::Found; }
};

/// Zero set {0,1,e}: scans for x outside F_3 with x^e + (-x-1)^e + 1 = 0.
ReducedResult weight3_reduced_c01e(const FieldCtx& ctx, u64 e, bool force_large = false);

/// Zero set {1,e,s}, s = (3^m-1)/2, m even: the quadratic-character pivot
/// determines the third support point from x; scans for a consistent x.
ReducedResult weight3_reduced_1es(const FieldCtx& ctx, u64 e, bool force_large = false);

/// Zero set {1,e}, e even (else ParityFail): scans for x outside F_3 with
/// (x+1)^e + x^e + 1 = 0 or (x+1)^e - x^e - 1 = 0.
ReducedResult weight3_reduced_1e(const FieldCtx& ctx, u64 e, bool force_large = false);

/// Zero set {2,e}, e odd (else ParityFail): scans for x outside F_3 with
/// x^2 != -1 and (1+x^2)^e = (1+x^e)^2 up to sign.
ReducedResult weight3_reduced_2e(const FieldCtx& ctx, u64 e, bool force_large = false);

/// True minimum weight by enumerating all 3^k - 1 nonzero multiples of the
/// generator; k <= 12 (throws BudgetExceededError above that).
u64 exact_min_distance(const CyclicCode& code);
inline constexpr u64 kExactDistanceMaxK = 12;

/// Sphere-packing style upper bound on the size of a ternary code of length
/// n and minimum distance d: with t = n-d+1 and r = floor(min((n-t)/2, t-1)),
/// size <= floor(3^(t+2r) / sum_{i<=r} C(t+2r,i) 2^i). The verdict compares
/// against 3^k. The exact bound value is materialized only when its exponent
/// is below kExactBoundMaxExp; the verdict is always exact (it reduces to
/// comparing 3^(t+2r-k) with the denominator).
struct BoundReport {
    u64 n = 0, d = 0, t = 0, r = 0;
    u64 exponent = 0;  // t + 2r
    bigint denominator = 1;
    u64 k = 0;
    bool excluded = false;  // true: no [n, k] code with distance >= d exists
    std::optional<bigint> bound;      // floor(3^exponent / denominator)
    std::optional<bigint> code_size;  // 3^k
};
inline constexpr u64 kExactBoundMaxExp = 50000;

BoundReport optimality_bound(u64 n, u64 d, u64 k);

}  // namespace ternary

#endif
