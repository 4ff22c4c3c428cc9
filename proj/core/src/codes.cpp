#include "ternary/codes.hpp"

#include <algorithm>
#include <stdexcept>

namespace ternary {

TritPoly minimal_poly(const FieldCtx& ctx, u64 i) {
    const u64 n = ctx.n();
    i %= n;
    // Coefficients of prod (X - alpha^(i*3^r)) live in GF(3^m) during the
    // product and must collapse to F_3 at the end.
    std::vector<FieldElem> coeffs{ctx.one()};  // the constant poly 1
    u64 exp = i;
    do {
        FieldElem root = ctx.pow(ctx.alpha(), exp);
        std::vector<FieldElem> next(coeffs.size() + 1, ctx.zero());
        for (std::size_t d = 0; d < coeffs.size(); ++d) {
            next[d + 1] = ctx.add(next[d + 1], coeffs[d]);
            next[d] = ctx.sub(next[d], ctx.mul(coeffs[d], root));
        }
        coeffs = std::move(next);
        exp = mulmod(exp, 3, n);
    } while (exp != i);

    TritPoly out;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        FieldElem c = coeffs[d];
        int t;
        if (c.is_zero()) t = 0;
        else if (c == ctx.one()) t = 1;
        else if (c == ctx.neg(ctx.one())) t = 2;
        else throw std::logic_error("minimal_poly: coefficient escaped F_3");
        if (t) out.set_coeff(static_cast<long>(d), t);
    }
    return out;
}

CyclicCode build_code(const FieldCtx& ctx, std::vector<u64> zeros) {
    if (zeros.empty()) throw std::invalid_argument("build_code: empty zero set");
    const u64 n = ctx.n();
    for (u64& z : zeros) {
        if (z >= n) throw std::invalid_argument("build_code: zero exponent out of range");
    }
    std::sort(zeros.begin(), zeros.end());
    zeros.erase(std::unique(zeros.begin(), zeros.end()), zeros.end());

    std::vector<u64> leaders;
    bool dup = false;
    TritPoly g = TritPoly::one();
    for (u64 z : zeros) {
        u64 leader = coset(z, ctx.m()).leader;
        if (std::find(leaders.begin(), leaders.end(), leader) != leaders.end()) {
            dup = true;
            continue;
        }
        leaders.push_back(leader);
        g = g * minimal_poly(ctx, z);
    }
    CyclicCode code{ctx, std::move(zeros), std::move(g), n, 0, dup};
    code.k = n - static_cast<u64>(code.generator.degree());
    return code;
}

FieldElem eval_poly(const FieldCtx& ctx, const TritPoly& p, FieldElem x) {
    FieldElem acc = ctx.zero();
    for (long d = p.degree(); d >= 0; --d) {
        acc = ctx.mul(acc, x);
        switch (p.coeff(d)) {
            case 1: acc = ctx.add(acc, ctx.one()); break;
            case 2: acc = ctx.sub(acc, ctx.one()); break;
            default: break;
        }
    }
    return acc;
}

bool is_codeword(const CyclicCode& code, const TritPoly& p) {
    if (p.degree() >= static_cast<long>(code.n))
        throw std::invalid_argument("is_codeword: degree must be below n");
    for (u64 z : code.zeros) {
        FieldElem root = code.ctx.pow(code.ctx.alpha(), z);
        if (!eval_poly(code.ctx, p, root).is_zero()) return false;
    }
    return true;
}

}  // namespace ternary
