#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ternary/poly.hpp"

using namespace ternary;

namespace {

TritPoly random_poly(std::mt19937_64& rng, long max_deg) {
    std::uniform_int_distribution<long> dd(-1, max_deg);
    long d = dd(rng);
    TritPoly p;
    if (d < 0) return p;
    std::uniform_int_distribution<int> dc(0, 2);
    for (long i = 0; i < d; ++i) p.set_coeff(i, dc(rng));
    p.set_coeff(d, 1 + dc(rng) % 2);
    return p;
}

}  // namespace

TEST_CASE("constants and canonical form") {
    CHECK(TritPoly::zero().degree() == TritPoly::kZeroDegree);
    CHECK(TritPoly::zero().is_zero());
    CHECK(TritPoly::one().is_one());
    CHECK(TritPoly::x().degree() == 1);
    CHECK(TritPoly::from_coeffs({1, 0, 0}).degree() == 0);  // trailing zeros trimmed
    TritPoly p = TritPoly::monomial(5, 2);
    CHECK(p.degree() == 5);
    CHECK(p.coeff(5) == 2);
    CHECK(p.coeff(4) == 0);
    CHECK(p.coeff(100) == 0);
    p.set_coeff(5, 0);
    CHECK(p.is_zero());
}

TEST_CASE("text round trips") {
    const char* human[] = {"x^7+2x^6+x^5+x^3+2x+2", "x^12+2x^11+x^10+2x^6+2x^3+2",
                           "x", "2", "x+1", "2x^2+1"};
    for (const char* s : human) {
        TritPoly p = TritPoly::parse(s);
        CHECK(p.str() == s);
        CHECK(TritPoly::parse(p.machine_str()) == p);
    }
    // machine form, signed human form
    CHECK(TritPoly::parse("2,2,0,1,0,1,2,1").str() == "x^7+2x^6+x^5+x^3+2x+2");
    CHECK(TritPoly::parse("x^2-x-1") == TritPoly::parse("x^2+2x+2"));
    CHECK(TritPoly::parse("-1") == TritPoly::constant(2));
    CHECK(TritPoly::parse("0").is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        TritPoly a = random_poly(rng, 90), b = random_poly(rng, 90),
                 c = random_poly(rng, 40);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == TritPoly::zero());
        CHECK(a + (-a) == TritPoly::zero());
        CHECK(a * TritPoly::one() == a);
        if (!a.is_zero() && !b.is_zero())
            CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("division identity") {
    std::mt19937_64 rng(8);
    for (int iter = 0; iter < 300; ++iter) {
        TritPoly a = random_poly(rng, 120), b = random_poly(rng, 30);
        if (b.is_zero()) continue;
        auto [q, r] = TritPoly::divrem(a, b);
        CHECK(a == q * b + r);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("derivative in characteristic three") {
    // (x^3)' = 0, so the cube of anything has zero derivative
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 50; ++iter) {
        TritPoly a = random_poly(rng, 20);
        TritPoly cube = a * a * a;
        CHECK(cube.derivative().is_zero());
        TritPoly b = random_poly(rng, 20);
        // product rule
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
    }
    CHECK(TritPoly::parse("x^4+2x^3+2").derivative() == TritPoly::parse("x^3"));
}

TEST_CASE("monic, evaluation, shift") {
    TritPoly p = TritPoly::parse("2x^3+x+1");
    CHECK(p.monic().is_monic());
    CHECK(p.monic() * 2 == p);
    CHECK(p.eval_trit(0) == 1);
    CHECK(p.eval_trit(1) == 1);  // 2+1+1 = 4 = 1
    CHECK(p.shifted(2) == p * TritPoly::monomial(2, 1));
    CHECK(p.shifted(0) == p);
}

TEST_CASE("ordering is a strict total order consistent with degree") {
    TritPoly a = TritPoly::parse("x^2"), b = TritPoly::parse("x^2+1"),
             c = TritPoly::parse("x^3");
    CHECK(a < b);
    CHECK(b < c);
    CHECK(a < c);
    CHECK(!(a < a));
    CHECK(TritPoly::cmp(a, a) == 0);
}

TEST_CASE("gcd and modular arithmetic helpers") {
    TritPoly f = TritPoly::parse("x^4+2x^3+2");
    TritPoly a = TritPoly::parse("x^2+1") * f, b = TritPoly::parse("x+2") * f;
    CHECK(poly_gcd(a, b) == f);  // f is monic and irreducible
    TritPoly m = TritPoly::parse("x^5+2x^4+1");  // irreducible (primitive)
    TritPoly x = TritPoly::x();
    CHECK(poly_powmod(x, 3, m) == poly_mulmod(poly_mulmod(x, x, m), x, m));
    // x^(3^5) = x mod any irreducible quintic
    TritPoly acc = x;
    for (int i = 0; i < 5; ++i) acc = poly_powmod(acc, 3, m);
    CHECK(acc == x);
}

TEST_CASE("wide polynomials cross word boundaries cleanly") {
    std::mt19937_64 rng(10);
    for (int iter = 0; iter < 20; ++iter) {
        TritPoly a = random_poly(rng, 300), b = random_poly(rng, 300);
        TritPoly s = a + b;
        for (long i = 0; i <= std::max(a.degree(), b.degree()); ++i)
            CHECK(s.coeff(i) == (a.coeff(i) + b.coeff(i)) % 3);
    }
}
