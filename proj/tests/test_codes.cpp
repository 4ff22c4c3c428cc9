#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ternary/codes.hpp"
#include "ternary/factor.hpp"

using namespace ternary;

namespace {

struct Golden {
    unsigned m;
    const char* mod;
    std::vector<u64> zeros;
    u64 n, k;
    const char* gen;
};

const Golden kGolden[] = {
    {4, "x^4+2x^3+2", {0, 1, 50}, 80, 73, "x^7+2x^6+x^5+x^3+2x+2"},
    {6, "x^6+2x^4+x^2+2x+2", {1, 336, 364}, 728, 718,
     "x^10+2x^9+2x^6+2x^5+2x^4+2x^3+2x^2+2x+1"},
    {8, "x^8+2x^5+x^4+2x^2+2x+2", {0, 1, 3362}, 6560, 6547,
     "x^13+2x^11+2x^10+2x^8+x^7+x^5+2x^4+2x^3+2"},
    {8, "x^8+2x^5+x^4+2x^2+2x+2", {1, 82, 3280}, 6560, 6547,
     "x^13+2x^11+2x^10+x^7+2x^3+2x^2+2x+1"},
    {6, "x^6+2x^4+x^2+2x+2", {2, 29}, 728, 716, "x^12+2x^11+x^10+2x^6+2x^3+2"},
};

TritPoly x_pow_n_minus_1(u64 n) {
    return TritPoly::monomial(static_cast<long>(n), 1) - TritPoly::one();
}

TritPoly random_codeword(const CyclicCode& code, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dc(0, 2);
    TritPoly mult;
    for (u64 i = 0; i < code.k; ++i) mult.set_coeff(static_cast<long>(i), dc(rng));
    return mult * code.generator % x_pow_n_minus_1(code.n);
}

}  // namespace

TEST_CASE("worked examples build exactly") {
    for (const Golden& g : kGolden) {
        FieldCtx ctx = ctx_new(TritPoly::parse(g.mod));
        CyclicCode code = build_code(ctx, g.zeros);
        CHECK(code.n == g.n);
        CHECK(code.k == g.k);
        CHECK(code.generator.str() == g.gen);
        CHECK(!code.duplicate_cosets);
    }
}

TEST_CASE("minimal polynomials") {
    FieldCtx ctx = ctx_default(4);
    for (u64 i : {0ull, 1ull, 2ull, 5ull, 10ull, 40ull, 50ull}) {
        TritPoly mp = minimal_poly(ctx, i);
        CHECK(mp.is_monic());
        CHECK(is_irreducible(mp));
        CHECK(static_cast<u64>(mp.degree()) == coset(i, 4).size());
        // vanishes on the whole Frobenius orbit
        for (u64 j : coset(i, 4).members)
            CHECK(eval_poly(ctx, mp, ctx.pow(ctx.alpha(), j)).is_zero());
    }
    CHECK(minimal_poly(ctx, 0).str() == "x+2");  // x - 1
    // conjugate exponents share a minimal polynomial
    CHECK(minimal_poly(ctx, 1) == minimal_poly(ctx, 3));
    CHECK(minimal_poly(ctx, 1) == ctx.modulus());  // alpha's minpoly is the modulus
}

TEST_CASE("generator divides x^n-1 and degree matches the coset sum") {
    for (const Golden& g : kGolden) {
        FieldCtx ctx = ctx_new(TritPoly::parse(g.mod));
        CyclicCode code = build_code(ctx, g.zeros);
        CHECK((x_pow_n_minus_1(code.n) % code.generator).is_zero());
        u64 deg = 0;
        for (u64 z : code.zeros) deg += coset(z, ctx.m()).size();
        CHECK(static_cast<u64>(code.generator.degree()) == deg);
        CHECK(code.k == code.n - deg);
    }
}

TEST_CASE("codeword membership and cyclic shift closure") {
    std::mt19937_64 rng(404);
    for (unsigned m : {3u, 4u, 6u}) {
        FieldCtx ctx = ctx_default(m);
        CyclicCode code = build_code(ctx, {1, 2});
        CHECK(is_codeword(code, code.generator));
        CHECK(is_codeword(code, TritPoly::zero()));
        CHECK(!is_codeword(code, TritPoly::one()));
        TritPoly xn1 = x_pow_n_minus_1(code.n);
        for (int iter = 0; iter < 34; ++iter) {
            TritPoly c = random_codeword(code, rng);
            CHECK(is_codeword(code, c));
            // every cyclic shift stays in the code
            TritPoly s = c;
            for (int sh = 0; sh < 5; ++sh) {
                s = s.shifted(1) % xn1;
                CHECK(is_codeword(code, s));
            }
            CHECK((c % code.generator).is_zero());
        }
    }
}

TEST_CASE("zeros in a shared coset collapse to one factor") {
    FieldCtx ctx = ctx_default(3);
    CyclicCode dup = build_code(ctx, {1, 3});  // 3 is in the coset of 1
    CHECK(dup.duplicate_cosets);
    CyclicCode plain = build_code(ctx, {1});
    CHECK(dup.generator == plain.generator);
    CHECK(dup.k == plain.k);
    CHECK(dup.zeros == std::vector<u64>{1, 3});  // inputs preserved

    CyclicCode distinct = build_code(ctx, {1, 4});
    CHECK(!distinct.duplicate_cosets);
    CHECK(distinct.k == 26 - 6);
}

TEST_CASE("eval embeds trit coefficients correctly") {
    FieldCtx ctx = ctx_default(5);
    TritPoly p = TritPoly::parse("2x^3+x+1");
    FieldElem x = ctx.pow(ctx.alpha(), 17);
    FieldElem manual = ctx.add(
        ctx.add(ctx.neg(ctx.pow(x, 3)), x), ctx.one());  // 2 = -1
    CHECK(eval_poly(ctx, p, x) == manual);
    CHECK(eval_poly(ctx, TritPoly::zero(), x).is_zero());
}
