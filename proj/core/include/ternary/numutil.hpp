#ifndef TERNARY_NUMUTIL_HPP
#define TERNARY_NUMUTIL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <optional>
#include <stdexcept>
#include <vector>

namespace ternary {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

// 3^e; e <= 40 keeps the result inside 64 bits.
constexpr u64 pow3(unsigned e) {
    u64 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= 3;
    return r;
}

inline u64 mulmod(u64 a, u64 b, u64 mod) { return static_cast<u64>((u128)a * b % mod); }

inline u64 powmod(u64 base, u64 exp, u64 mod) {
    u64 r = 1 % mod;
    base %= mod;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

// Inverse of a modulo mod; requires gcd(a, mod) == 1.
inline u64 invmod(u64 a, u64 mod) {
    __int128 t = 0, newt = 1, r = mod, newr = a % mod;
    while (newr != 0) {
        __int128 q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) throw std::domain_error("invmod: not invertible");
    if (t < 0) t += mod;
    return static_cast<u64>(t);
}

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {
inline u64 pollard_rho(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mulmod(x, x, n) + c) % n; };
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}
}  // namespace detail

// Prime factorization, ascending, with multiplicity collapsed into exponents.
inline std::vector<std::pair<u64, int>> factorize_u64(u64 n) {
    std::vector<u64> primes;
    std::vector<u64> stack{n};
    while (!stack.empty()) {
        u64 v = stack.back();
        stack.pop_back();
        if (v == 1) continue;
        if (is_prime_u64(v)) { primes.push_back(v); continue; }
        u64 d = detail::pollard_rho(v);
        stack.push_back(d);
        stack.push_back(v / d);
    }
    std::sort(primes.begin(), primes.end());
    std::vector<std::pair<u64, int>> out;
    for (u64 p : primes) {
        if (!out.empty() && out.back().first == p) ++out.back().second;
        else out.push_back({p, 1});
    }
    return out;
}

// Solves a*x = b (mod n). Returns all solutions in [0, n).
inline std::vector<u64> solve_linear_congruence(u64 a, u64 b, u64 n) {
    a %= n; b %= n;
    u64 g = std::gcd(a, n);
    if (b % g != 0) return {};
    u64 n1 = n / g;
    u64 x0 = mulmod(invmod((a / g) % n1, n1), (b / g) % n1, n1);
    std::vector<u64> xs;
    xs.reserve(g);
    for (u64 i = 0; i < g; ++i) xs.push_back(x0 + i * n1);
    return xs;
}

}  // namespace ternary

#endif
