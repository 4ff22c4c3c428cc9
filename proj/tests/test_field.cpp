#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "ternary/errors.hpp"
#include "ternary/field.hpp"

using namespace ternary;

namespace {

FieldElem random_elem(const FieldCtx& ctx, std::mt19937_64& rng) {
    std::uniform_int_distribution<u64> d(0, ctx.n());  // 3^m values
    return ctx.element_from_index(d(rng));
}

}  // namespace

TEST_CASE("default moduli are the lex-smallest primitive polynomials") {
    CHECK(ctx_default(1).modulus().str() == "x+1");
    CHECK(ctx_default(2).modulus().str() == "x^2+x+2");
    CHECK(ctx_default(3).modulus().str() == "x^3+2x^2+1");
    CHECK(ctx_default(4).modulus().str() == "x^4+x^3+2");
    for (unsigned m = 2; m <= 10; ++m) {
        FieldCtx ctx = ctx_default(m);
        CHECK(ctx.m() == m);
        CHECK(ctx.n() == pow3(m) - 1);
        CHECK(ctx.modulus().is_monic());
    }
}

TEST_CASE("modulus validation") {
    CHECK_THROWS_AS(ctx_new(TritPoly::parse("x^2+2x+1")), NotIrreducibleError);
    try {
        ctx_new(TritPoly::parse("x^2+1"));  // irreducible but order 4, not 8
        FAIL("expected NotPrimitiveError");
    } catch (const NotPrimitiveError& e) {
        CHECK(e.order == 4);
    }
}

TEST_CASE("field axioms on random elements") {
    for (unsigned m : {2u, 4u, 6u, 8u}) {
        FieldCtx ctx = ctx_default(m);
        std::mt19937_64 rng(m);
        for (int iter = 0; iter < 250; ++iter) {
            FieldElem a = random_elem(ctx, rng), b = random_elem(ctx, rng),
                      c = random_elem(ctx, rng);
            CHECK(ctx.add(a, b) == ctx.add(b, a));
            CHECK(ctx.mul(a, b) == ctx.mul(b, a));
            CHECK(ctx.add(ctx.add(a, b), c) == ctx.add(a, ctx.add(b, c)));
            CHECK(ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c)));
            CHECK(ctx.mul(a, ctx.add(b, c)) ==
                  ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
            CHECK(ctx.add(a, ctx.neg(a)).is_zero());
            CHECK(ctx.mul(a, ctx.one()) == a);
            if (!a.is_zero()) {
                CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
                CHECK(ctx.pow(a, ctx.n()) == ctx.one());
            }
            CHECK(ctx.square(a) == ctx.mul(a, a));
        }
    }
}

TEST_CASE("frobenius is the cubing automorphism") {
    for (unsigned m : {3u, 5u, 8u}) {
        FieldCtx ctx = ctx_default(m);
        std::mt19937_64 rng(100 + m);
        for (int iter = 0; iter < 1000; ++iter) {
            FieldElem a = random_elem(ctx, rng), b = random_elem(ctx, rng);
            FieldElem fa = ctx.frobenius(a, 1);
            CHECK(fa == ctx.mul(ctx.mul(a, a), a));
            CHECK(ctx.frobenius(ctx.add(a, b), 1) ==
                  ctx.add(fa, ctx.frobenius(b, 1)));
            CHECK(ctx.frobenius(ctx.mul(a, b), 1) ==
                  ctx.mul(fa, ctx.frobenius(b, 1)));
        }
        std::mt19937_64 rng2(m);
        FieldElem a = random_elem(ctx, rng2);
        CHECK(ctx.frobenius(a, m) == a);  // full orbit returns
    }
}

TEST_CASE("alpha generates the multiplicative group") {
    FieldCtx ctx = ctx_default(4);
    std::set<u64> seen;
    FieldElem p = ctx.one();
    for (u64 i = 0; i < ctx.n(); ++i) {
        CHECK(!p.is_zero());
        seen.insert(ctx.index_of(p));
        p = ctx.mul(p, ctx.alpha());
    }
    CHECK(p == ctx.one());
    CHECK(seen.size() == ctx.n());  // all 80 nonzero elements hit
}

TEST_CASE("coordinate and index codecs invert each other") {
    FieldCtx ctx = ctx_default(5);
    std::mt19937_64 rng(5);
    for (int iter = 0; iter < 200; ++iter) {
        FieldElem a = random_elem(ctx, rng);
        CHECK(ctx.element_from_index(ctx.index_of(a)) == a);
        CHECK(ctx.from_coeffs(ctx.coords(a)) == a);
        CHECK(ctx.from_poly(ctx.to_poly(a)) == a);
    }
    // from_poly reduces high-degree input
    CHECK(ctx.from_poly(ctx.modulus()).is_zero());
    CHECK(ctx.from_poly(TritPoly::parse("x^5")) ==
          ctx.pow(ctx.alpha(), 5));
}

TEST_CASE("quadratic character") {
    FieldCtx ctx = ctx_default(6);
    std::mt19937_64 rng(6);
    CHECK_THROWS(ctx.half_power(ctx.zero()));
    int plus = 0, minus = 0;
    for (int iter = 0; iter < 400; ++iter) {
        FieldElem a = random_elem(ctx, rng);
        if (a.is_zero()) continue;
        int chi = ctx.half_power(a);
        CHECK((chi == 1 || chi == -1));
        (chi == 1 ? plus : minus)++;
        // chi(a) = 1 exactly when a is a square
        CHECK((chi == 1) == (ctx.pow(a, ctx.n() / 2) == ctx.one()));
        CHECK(ctx.half_power(ctx.square(a)) == 1);
    }
    CHECK(plus > 0);
    CHECK(minus > 0);
}

TEST_CASE("iteration cap and dlog") {
    FieldCtx ctx = ctx_default(4);
    CHECK(ctx.all_elements().size() == 81);
    u64 count = 0;
    for (FieldElem a : ctx.all_elements()) {
        (void)a;
        ++count;
    }
    CHECK(count == 81);
    auto d = ctx.dlog(ctx.pow(ctx.alpha(), 37));
    REQUIRE(d.has_value());
    CHECK(*d == 37);
    CHECK(ctx.dlog(ctx.one()) == 0);
    CHECK(!ctx.dlog(ctx.zero()).has_value());

    FieldCtx big = ctx_default(14);
    CHECK_THROWS_AS(big.all_elements(), CapExceededError);
    CHECK_NOTHROW(big.all_elements(true));
}

TEST_CASE("explicit modulus contexts match their stated field") {
    FieldCtx ctx = ctx_new(TritPoly::parse("x^4+2x^3+2"));
    CHECK(ctx.m() == 4);
    CHECK(ctx.n() == 80);
    // alpha satisfies the modulus: alpha^4 = -2alpha^3 - 2 = alpha^3 + 1
    FieldElem a4 = ctx.pow(ctx.alpha(), 4);
    FieldElem expect = ctx.add(ctx.pow(ctx.alpha(), 3), ctx.one());
    CHECK(a4 == expect);
}
