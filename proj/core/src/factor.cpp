#include "ternary/factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace ternary {

namespace {

using bigint = boost::multiprecision::cpp_int;

TritPoly powmod_big(const TritPoly& a, bigint e, const TritPoly& f) {
    TritPoly r = TritPoly::one() % f;
    TritPoly base = a % f;
    while (e > 0) {
        if ((e & 1) != 0) r = poly_mulmod(r, base, f);
        base = poly_mulmod(base, base, f);
        e >>= 1;
    }
    return r;
}

// f has zero derivative iff f(x) = g(x)^3 with g obtained by mapping
// coefficient 3i down to i (cubing fixes F_3 pointwise).
TritPoly cube_root(const TritPoly& f) {
    TritPoly g;
    for (long i = 0; i * 3 <= f.degree(); ++i) g.set_coeff(i, f.coeff(3 * i));
    return g;
}

TritPoly random_poly(long max_deg, std::mt19937_64& rng) {
    TritPoly p;
    for (long i = 0; i <= max_deg; ++i) {
        int c = static_cast<int>(rng() % 3);
        if (c) p.set_coeff(i, c);
    }
    return p;
}

// g is a product of distinct monic irreducibles, all of degree d.
void split_equal_degree(const TritPoly& g, long d, std::mt19937_64& rng,
                        std::vector<TritPoly>& out) {
    if (g.degree() == d) {
        out.push_back(g);
        return;
    }
    const bigint half = (boost::multiprecision::pow(bigint(3), static_cast<unsigned>(d)) - 1) / 2;
    for (;;) {
        TritPoly a = random_poly(g.degree() - 1, rng);
        if (a.is_zero()) continue;
        TritPoly b = powmod_big(a, half, g) - TritPoly::one();
        if (b.is_zero()) continue;
        TritPoly h = poly_gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_equal_degree(h, d, rng, out);
            split_equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

// s is monic squarefree of degree >= 1.
void factor_squarefree(TritPoly s, std::mt19937_64& rng, std::vector<TritPoly>& out) {
    TritPoly h = TritPoly::x() % s;
    for (long d = 1; 2 * d <= s.degree(); ++d) {
        h = poly_powmod(h, 3, s);
        TritPoly g = poly_gcd(h - TritPoly::x(), s);
        if (g.degree() > 0) {
            split_equal_degree(g, d, rng, out);
            s = s / g;
            if (s.degree() == 0) return;
            h = h % s;
        }
    }
    if (s.degree() > 0) out.push_back(s);
}

void factor_monic(TritPoly f, int outer_mult, std::mt19937_64& rng,
                  std::vector<Factorization::Part>& parts) {
    if (f.degree() <= 0) return;
    TritPoly d = f.derivative();
    if (d.is_zero()) {
        factor_monic(cube_root(f), outer_mult * 3, rng, parts);
        return;
    }
    TritPoly s = f / poly_gcd(f, d);  // factors whose multiplicity is not 0 mod 3
    std::vector<TritPoly> irr;
    factor_squarefree(s, rng, irr);
    for (const TritPoly& r : irr) {
        int e = 0;
        for (;;) {
            auto [q, rem] = TritPoly::divrem(f, r);
            if (!rem.is_zero()) break;
            f = q;
            ++e;
        }
        parts.push_back({r, outer_mult * e});
    }
    // Anything left has every multiplicity divisible by 3, hence is a cube.
    if (f.degree() > 0) factor_monic(cube_root(f), outer_mult * 3, rng, parts);
}

}  // namespace

TritPoly Factorization::expand() const {
    TritPoly p = TritPoly::constant(unit);
    for (const Part& part : factors)
        for (int i = 0; i < part.mult; ++i) p = p * part.poly;
    return p;
}

Factorization factor(const TritPoly& p, std::uint64_t seed) {
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    Factorization out;
    out.unit = p.lead_coeff();
    std::mt19937_64 rng(seed);
    factor_monic(p.monic(), 1, rng, out.factors);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const Factorization::Part& a, const Factorization::Part& b) {
                  return a.poly < b.poly;
              });
    return out;
}

bool is_irreducible(const TritPoly& f) {
    const long d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;

    std::vector<long> checkpoints;  // d/q for each prime q | d
    for (auto [q, e] : factorize_u64(static_cast<u64>(d))) checkpoints.push_back(d / static_cast<long>(q));
    std::sort(checkpoints.begin(), checkpoints.end());

    TritPoly h = TritPoly::x() % f;
    std::size_t next = 0;
    for (long i = 1; i <= d; ++i) {
        h = poly_powmod(h, 3, f);
        if (next < checkpoints.size() && i == checkpoints[next]) {
            ++next;
            TritPoly diff = h - TritPoly::x();
            if (diff.is_zero() || poly_gcd(diff, f).degree() > 0) return false;
        }
    }
    return h == TritPoly::x() % f;
}

u64 poly_order(const TritPoly& f) {
    const long d = f.degree();
    if (d < 1 || d > 40) throw std::domain_error("poly_order: degree out of range");
    if (f.coeff(0) == 0) throw std::domain_error("poly_order: x divides f");
    if (!is_irreducible(f)) throw std::domain_error("poly_order: f is reducible");
    u64 ord = pow3(static_cast<unsigned>(d)) - 1;
    for (auto [p, e] : factorize_u64(ord)) {
        while (ord % p == 0 &&
               poly_powmod(TritPoly::x(), ord / p, f) == TritPoly::one()) {
            ord /= p;
        }
    }
    return ord;
}

}  // namespace ternary
