#ifndef TERNARY_TRIT_HPP
#define TERNARY_TRIT_HPP

#include <cstdint>

namespace ternary {

// Elements of F_3 are stored as plain ints in {0,1,2}. Vectors of trits are
// bitsliced into two planes: bit i of `lo` set iff trit i == 1, bit i of
// `hi` set iff trit i == 2. Addition mod 3 is then carry-free and works on
// whole words at once.

inline int trit_add(int a, int b) { return (a + b) % 3; }
inline int trit_sub(int a, int b) { return (a + 3 - b) % 3; }
inline int trit_mul(int a, int b) { return (a * b) % 3; }
inline int trit_neg(int a) { return (3 - a) % 3; }
// 1^-1 = 1, 2^-1 = 2.
inline int trit_inv(int a) { return a; }

template <typename W>
struct TritPlanes {
    W lo{}, hi{};
};

// Word-parallel addition mod 3 of the bitsliced planes.
template <typename W>
inline TritPlanes<W> planes_add(TritPlanes<W> a, TritPlanes<W> b) {
    W t = (a.lo ^ a.hi) & (b.lo ^ b.hi);
    return {static_cast<W>(t ^ (a.lo | b.lo)), static_cast<W>(t ^ (a.hi | b.hi))};
}

template <typename W>
inline TritPlanes<W> planes_neg(TritPlanes<W> a) {
    return {a.hi, a.lo};
}

// Scalar multiple by a nonzero trit: by 1 is identity, by 2 swaps planes.
template <typename W>
inline TritPlanes<W> planes_scale(TritPlanes<W> a, int s) {
    return s == 2 ? planes_neg(a) : a;
}

}  // namespace ternary

#endif
