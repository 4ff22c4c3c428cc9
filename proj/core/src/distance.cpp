#include "ternary/distance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "ternary/errors.hpp"

namespace ternary {

namespace {

bool in_f3(FieldElem x) { return ((x.lo | x.hi) & ~1ull) == 0; }

FieldElem elem_scale(const FieldCtx& ctx, FieldElem x, int c) {
    return c == 2 ? ctx.neg(x) : x;
}

int char_trit(const FieldCtx& ctx, FieldElem x) {
    // Quadratic character as a trit coefficient: +1 -> 1, -1 -> 2.
    return ctx.half_power(x) == 1 ? 1 : 2;
}

void check_cap(const FieldCtx& ctx, bool force_large) {
    if (ctx.m() > FieldCtx::kExhaustiveCapM && !force_large)
        throw CapExceededError("exhaustive distance search: m=" + std::to_string(ctx.m()) +
                               " exceeds the cap (pass force_large to override)");
}

bool witness_checks(const CyclicCode& code, const std::vector<FieldElem>& xs,
                    const std::vector<int>& cs) {
    const FieldCtx& ctx = code.ctx;
    for (u64 z : code.zeros) {
        FieldElem sum = ctx.zero();
        for (std::size_t j = 0; j < xs.size(); ++j)
            sum = ctx.add(sum, elem_scale(ctx, ctx.pow(xs[j], z), cs[j]));
        if (!sum.is_zero()) return false;
    }
    return true;
}

WeightWitness make_witness(const CyclicCode& code, const std::vector<FieldElem>& xs,
                           const std::vector<int>& cs) {
    WeightWitness w;
    w.weight = static_cast<int>(xs.size());
    for (FieldElem x : xs) {
        auto s = code.ctx.dlog(x, true);
        if (!s) throw std::logic_error("weight witness support is zero");
        w.support_exponents.push_back(*s);
    }
    w.coefficients = cs;
    return w;
}

// Coefficient patterns for the free positions; the normalized last
// coefficient is 1, and a zero exponent 0 forces the pattern sum + 1 = 0.
std::vector<std::vector<int>> patterns_for(const CyclicCode& code, int free_count) {
    const bool has_zero0 =
        std::find(code.zeros.begin(), code.zeros.end(), 0ull) != code.zeros.end();
    std::vector<std::vector<int>> out;
    for (int mask = 0; mask < (1 << free_count); ++mask) {
        std::vector<int> p(free_count);
        int sum = 1;
        for (int j = 0; j < free_count; ++j) {
            p[j] = (mask >> j & 1) ? 2 : 1;
            sum += p[j];
        }
        if (has_zero0 && sum % 3 != 0) continue;
        out.push_back(std::move(p));
    }
    return out;
}

std::optional<WeightWitness> find_weight2(const CyclicCode& code) {
    const FieldCtx& ctx = code.ctx;
    const u64 n = ctx.n();
    std::vector<FieldElem> steps, pows;
    for (u64 z : code.zeros) {
        steps.push_back(ctx.pow(ctx.alpha(), z));
        pows.push_back(ctx.one());
    }
    auto patterns = patterns_for(code, 1);
    for (u64 s1 = 1; s1 < n; ++s1) {
        for (std::size_t i = 0; i < pows.size(); ++i) pows[i] = ctx.mul(pows[i], steps[i]);
        for (const auto& p : patterns) {
            bool ok = true;
            for (FieldElem pw : pows) {
                if (!ctx.add(elem_scale(ctx, pw, p[0]), ctx.one()).is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (ok) return WeightWitness{2, {s1, 0}, {p[0], 1}};
        }
    }
    return std::nullopt;
}

// Meet-in-the-middle fallback for zero sets without an exponent coprime to
// n. Keys pack element indices of the required per-zero contributions.
std::optional<WeightWitness> find_weight3_mitm(const CyclicCode& code) {
    const FieldCtx& ctx = code.ctx;
    if (ctx.m() > 8)
        throw CapExceededError("weight-3 search: no zero exponent is coprime to n and the "
                               "meet-in-the-middle fallback is capped at m=8");
    const u64 total = ctx.n() + 1;
    const std::size_t key_zeros = std::min<std::size_t>(4, code.zeros.size());
    auto key_of = [&](const std::vector<FieldElem>& vals) {
        u64 key = 0;
        for (std::size_t i = 0; i < key_zeros; ++i) key = key << 13 | ctx.index_of(vals[i]);
        return key;
    };
    auto patterns = patterns_for(code, 2);
    // Which (c1, c2) pairs occur, independently per side.
    std::vector<int> c2s, c1s;
    for (auto& p : patterns) {
        if (std::find(c1s.begin(), c1s.end(), p[0]) == c1s.end()) c1s.push_back(p[0]);
        if (std::find(c2s.begin(), c2s.end(), p[1]) == c2s.end()) c2s.push_back(p[1]);
    }
    struct Entry { u64 idx; int c2; };
    std::unordered_map<u64, std::vector<Entry>> table;
    std::vector<FieldElem> vals(key_zeros);
    for (u64 i2 = 2; i2 < total; ++i2) {  // skip 0 and 1
        FieldElem x2 = ctx.element_from_index(i2);
        for (int c2 : c2s) {
            for (std::size_t i = 0; i < key_zeros; ++i) {
                // target for c1*x1^z: -1 - c2*x2^z
                vals[i] = ctx.neg(ctx.add(ctx.one(), elem_scale(ctx, ctx.pow(x2, code.zeros[i]), c2)));
            }
            table[key_of(vals)].push_back({i2, c2});
        }
    }
    for (u64 i1 = 2; i1 < total; ++i1) {
        FieldElem x1 = ctx.element_from_index(i1);
        for (int c1 : c1s) {
            for (std::size_t i = 0; i < key_zeros; ++i)
                vals[i] = elem_scale(ctx, ctx.pow(x1, code.zeros[i]), c1);
            auto it = table.find(key_of(vals));
            if (it == table.end()) continue;
            for (const Entry& en : it->second) {
                if (en.idx == i1) continue;
                bool allowed = false;
                for (auto& p : patterns) allowed |= (p[0] == c1 && p[1] == en.c2);
                if (!allowed) continue;
                FieldElem x2 = ctx.element_from_index(en.idx);
                std::vector<FieldElem> xs{x1, x2, ctx.one()};
                std::vector<int> cs{c1, en.c2, 1};
                if (witness_checks(code, xs, cs)) return make_witness(code, xs, cs);
            }
        }
    }
    return std::nullopt;
}

std::optional<WeightWitness> find_weight3(const CyclicCode& code) {
    const FieldCtx& ctx = code.ctx;
    const u64 n = ctx.n();
    u64 pivot = 0;
    bool have_pivot = false;
    for (u64 z : code.zeros) {
        if (z != 0 && std::gcd(z, n) == 1) { pivot = z; have_pivot = true; break; }
    }
    if (!have_pivot) return find_weight3_mitm(code);

    const u64 pinv = invmod(pivot, n);
    auto patterns = patterns_for(code, 2);
    const u64 total = n + 1;
    for (u64 idx = 0; idx < total; ++idx) {
        FieldElem x1 = ctx.element_from_index(idx);
        if (in_f3(x1)) continue;
        FieldElem x1p = ctx.pow(x1, pivot);
        for (const auto& p : patterns) {
            // Solve c2*x2^pivot = -1 - c1*x1^pivot for x2.
            FieldElem w = ctx.neg(ctx.add(ctx.one(), elem_scale(ctx, x1p, p[0])));
            if (w.is_zero()) continue;
            FieldElem x2 = ctx.pow(elem_scale(ctx, w, p[1]), pinv);
            if (x2 == ctx.one() || x2 == x1) continue;
            std::vector<FieldElem> xs{x1, x2, ctx.one()};
            std::vector<int> cs{p[0], p[1], 1};
            if (witness_checks(code, xs, cs)) return make_witness(code, xs, cs);
        }
    }
    return std::nullopt;
}

std::optional<WeightWitness> find_weight4(const CyclicCode& code) {
    const FieldCtx& ctx = code.ctx;
    if (ctx.m() > 4)
        throw CapExceededError("weight-4 search is capped at m=4");
    const u64 total = ctx.n() + 1;
    auto patterns = patterns_for(code, 3);
    for (u64 i1 = 2; i1 < total; ++i1) {
        FieldElem x1 = ctx.element_from_index(i1);
        for (u64 i2 = 2; i2 < i1; ++i2) {
            FieldElem x2 = ctx.element_from_index(i2);
            for (u64 i3 = 2; i3 < i2; ++i3) {
                FieldElem x3 = ctx.element_from_index(i3);
                for (const auto& p : patterns) {
                    std::vector<FieldElem> xs{x1, x2, x3, ctx.one()};
                    std::vector<int> cs{p[0], p[1], p[2], 1};
                    if (witness_checks(code, xs, cs)) return make_witness(code, xs, cs);
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<WeightWitness> find_weight_witness(const CyclicCode& code, int w,
                                                 bool force_large) {
    check_cap(code.ctx, force_large);
    switch (w) {
        case 1:
            // c*x^s evaluates to a nonzero element at any zero exponent.
            return std::nullopt;
        case 2: return find_weight2(code);
        case 3: return find_weight3(code);
        case 4: return find_weight4(code);
        default: throw std::invalid_argument("find_weight_witness: weight must be 1..4");
    }
}

std::optional<WeightWitness> find_low_weight(const CyclicCode& code, int max_w,
                                             bool force_large) {
    if (max_w < 1 || max_w > 3)
        throw std::invalid_argument("find_low_weight: max_w must be 1..3");
    for (int w = 1; w <= max_w; ++w) {
        if (auto witness = find_weight_witness(code, w, force_large)) return witness;
    }
    return std::nullopt;
}

ReducedResult weight3_reduced_c01e(const FieldCtx& ctx, u64 e, bool force_large) {
    check_cap(ctx, force_large);
    // From zeros {0,1,e}: coefficients are (1,1,1) and y = -(x+1), leaving
    // x^e + (-1)^e (x+1)^e + 1 = 0.
    const bool odd = e % 2 == 1;
    for (FieldElem x : ctx.all_elements(force_large)) {
        if (in_f3(x)) continue;
        FieldElem t = ctx.pow(ctx.add(x, ctx.one()), e);
        if (odd) t = ctx.neg(t);
        FieldElem lhs = ctx.add(ctx.add(ctx.pow(x, e), t), ctx.one());
        if (lhs.is_zero()) return {ReducedStatus::Found, x};
    }
    return {ReducedStatus::None, std::nullopt};
}

ReducedResult weight3_reduced_1es(const FieldCtx& ctx, u64 e, bool force_large) {
    check_cap(ctx, force_large);
    if (ctx.m() % 2 != 0)
        throw std::invalid_argument("weight3_reduced_1es: zero set {1,e,s} needs even m");
    // Zero s = n/2 forces each coefficient to match the quadratic character
    // of its support point; zero 1 then pins the second point from x.
    for (FieldElem x : ctx.all_elements(force_large)) {
        if (in_f3(x)) continue;
        int c1 = char_trit(ctx, x);
        FieldElem t = ctx.neg(ctx.add(ctx.one(), elem_scale(ctx, x, c1)));
        if (t.is_zero()) continue;  // cannot happen for x outside F_3
        int c2 = char_trit(ctx, t);
        FieldElem y = elem_scale(ctx, t, c2);
        if (y == ctx.one() || y == x) continue;
        FieldElem lhs = ctx.add(ctx.add(elem_scale(ctx, ctx.pow(x, e), c1),
                                        elem_scale(ctx, ctx.pow(y, e), c2)),
                                ctx.one());
        if (lhs.is_zero()) return {ReducedStatus::Found, x};
    }
    return {ReducedStatus::None, std::nullopt};
}

ReducedResult weight3_reduced_1e(const FieldCtx& ctx, u64 e, bool force_large) {
    if (e % 2 != 0) return {ReducedStatus::ParityFail, std::nullopt};
    check_cap(ctx, force_large);
    for (FieldElem x : ctx.all_elements(force_large)) {
        if (in_f3(x)) continue;
        FieldElem a = ctx.pow(ctx.add(x, ctx.one()), e);
        FieldElem b = ctx.add(ctx.pow(x, e), ctx.one());
        if (ctx.add(a, b).is_zero() || ctx.sub(a, b).is_zero())
            return {ReducedStatus::Found, x};
    }
    return {ReducedStatus::None, std::nullopt};
}

ReducedResult weight3_reduced_2e(const FieldCtx& ctx, u64 e, bool force_large) {
    if (e % 2 != 1) return {ReducedStatus::ParityFail, std::nullopt};
    check_cap(ctx, force_large);
    for (FieldElem x : ctx.all_elements(force_large)) {
        if (in_f3(x)) continue;
        FieldElem x2p1 = ctx.add(ctx.mul(x, x), ctx.one());
        if (x2p1.is_zero()) continue;  // x^2 = -1 never yields three distinct points
        FieldElem a = ctx.pow(x2p1, e);
        FieldElem b = ctx.square(ctx.add(ctx.one(), ctx.pow(x, e)));
        if (ctx.sub(a, b).is_zero() || ctx.add(a, b).is_zero())
            return {ReducedStatus::Found, x};
    }
    return {ReducedStatus::None, std::nullopt};
}

u64 exact_min_distance(const CyclicCode& code) {
    const u64 k = code.k;
    if (k > kExactDistanceMaxK)
        throw BudgetExceededError("exact_min_distance: 3^" + std::to_string(k) +
                                  " codewords exceed the 3^" +
                                  std::to_string(kExactDistanceMaxK) + " budget");
    u64 best = code.n;
    std::vector<int> msg(k, 0);
    const u64 count = pow3(static_cast<unsigned>(k));
    for (u64 idx = 1; idx < count; ++idx) {
        // odometer increment of the message digits
        for (u64 i = 0; i < k; ++i) {
            if (++msg[i] == 3) msg[i] = 0;
            else break;
        }
        TritPoly f = TritPoly::from_coeffs(msg);
        TritPoly cw = f * code.generator;
        u64 w = 0;
        for (long d = 0; d <= cw.degree(); ++d)
            if (cw.coeff(d)) ++w;
        best = std::min(best, w);
    }
    return best;
}

BoundReport optimality_bound(u64 n, u64 d, u64 k) {
    if (d < 1 || d > n) throw std::invalid_argument("optimality_bound: need 1 <= d <= n");
    BoundReport rep;
    rep.n = n;
    rep.d = d;
    rep.k = k;
    rep.t = n - d + 1;
    rep.r = std::min((n - rep.t) / 2, rep.t - 1);
    rep.exponent = rep.t + 2 * rep.r;

    bigint denom = 0, binom = 1, pw2 = 1;
    for (u64 i = 0; i <= rep.r; ++i) {
        denom += binom * pw2;
        binom = binom * (rep.exponent - i) / (i + 1);
        pw2 *= 2;
    }
    rep.denominator = denom;

    // floor(3^E / denom) < 3^k  <=>  3^E < 3^k * denom.
    if (rep.exponent < k) {
        rep.excluded = true;
    } else {
        const u64 diff = rep.exponent - k;
        const u64 denom_bits = boost::multiprecision::msb(denom) + 1;
        const double diff_bits = static_cast<double>(diff) * 1.5849625007211562;
        if (diff > kExactBoundMaxExp && diff_bits > denom_bits + 2) {
            rep.excluded = false;  // 3^diff clearly dwarfs the denominator
        } else if (diff > kExactBoundMaxExp && diff_bits + 2 < static_cast<double>(denom_bits)) {
            rep.excluded = true;
        } else {
            bigint diff_pow = boost::multiprecision::pow(bigint(3), static_cast<unsigned>(diff));
            rep.excluded = diff_pow < denom;
        }
    }
    if (rep.exponent <= kExactBoundMaxExp)
        rep.bound = boost::multiprecision::pow(bigint(3), static_cast<unsigned>(rep.exponent)) / denom;
    if (k <= kExactBoundMaxExp)
        rep.code_size = boost::multiprecision::pow(bigint(3), static_cast<unsigned>(k));
    return rep;
}

}  // namespace ternary
