#ifndef TERNARY_FACTOR_HPP
#define TERNARY_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "ternary/numutil.hpp"
#include "ternary/poly.hpp"

namespace ternary {

/// Complete factorization over F_3: unit * prod factors[i].poly^factors[i].mult
/// with monic irreducible factors sorted by TritPoly::cmp.
struct Factorization {
    struct Part {
        TritPoly poly;
        int mult = 1;
    };
    int unit = 1;  // leading coefficient of the input
    std::vector<Part> factors;

    TritPoly expand() const;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 0xC0DEull;

/// Cantor-Zassenhaus factorization; deterministic for a fixed seed.
Factorization factor(const TritPoly& p, std::uint64_t seed = kDefaultFactorSeed);

/// Rabin's test: f of degree d >= 1 is irreducible iff x^(3^d) == x (mod f)
/// and gcd(x^(3^(d/q)) - x, f) = 1 for every prime q dividing d.
bool is_irreducible(const TritPoly& f);

/// Multiplicative order of x modulo f; requires f irreducible with f(0) != 0.
u64 poly_order(const TritPoly& f);

}  // namespace ternary

#endif
