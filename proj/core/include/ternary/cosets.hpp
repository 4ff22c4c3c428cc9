#ifndef TERNARY_COSETS_HPP
#define TERNARY_COSETS_HPP

#include <optional>
#include <vector>

#include "ternary/numutil.hpp"

namespace ternary {

/// 3-cyclotomic coset modulo 3^m - 1: the orbit of j under multiplication
/// by 3. The leader is the smallest member; the size divides m.
struct Coset {
    u64 leader = 0;
    std::vector<u64> members;  // sorted
    u64 size() const { return members.size(); }
    bool contains(u64 v) const;
};

/// Orbit of j mod 3^m - 1. Memoized per (m, leader); thread-safe.
Coset coset(u64 j, unsigned m);

/// True iff b lies in the coset of a.
bool same_coset(u64 a, u64 b, unsigned m);

/// Coset size promised by one of three closed-form criteria, when any
/// applies (lemma = 1, 2 or 3; lemma = 0 and empty size mean no prediction):
///   1. gcd(e, n) <= 2, or gcd(e,n)*gcd(3^j-1, n) != 0 mod n for all
///      0 < j < m: size m.
///   2. e = 3^k + 1: size m for odd m; for even m, m/2 when k = m/2, else m.
///   3. m odd and e = (3^h + 5)/2 with h odd: size m (and e is not in C_1).
struct CosetSizePrediction {
    std::optional<u64> size;
    int lemma = 0;
};
CosetSizePrediction coset_size_predicted(u64 e, unsigned m);

}  // namespace ternary

#endif
