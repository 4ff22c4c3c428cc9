#include "ternary/field.hpp"

#include <stdexcept>

#include "ternary/factor.hpp"

namespace ternary {

FieldCtx::FieldCtx(const TritPoly& modulus) : modulus_(modulus) {
    long d = modulus.degree();
    if (d < 1 || d > 40 || !modulus.is_monic())
        throw std::invalid_argument("FieldCtx: modulus must be monic of degree 1..40");
    if (!is_irreducible(modulus))
        throw NotIrreducibleError("FieldCtx: modulus " + modulus.str() + " is reducible");
    m_ = static_cast<unsigned>(d);
    n_ = pow3(m_) - 1;
    u64 ord = poly_order(modulus);
    if (ord != n_)
        throw NotPrimitiveError(
            "FieldCtx: modulus " + modulus.str() + " is irreducible but not primitive (order " +
                std::to_string(ord) + " < " + std::to_string(n_) + ")",
            ord);
    red_.reserve(m_ > 0 ? m_ - 1 : 0);
    for (unsigned j = 0; j + 1 < m_; ++j) {
        TritPoly r = TritPoly::monomial(m_ + j, 1) % modulus_;
        FieldElem e{};
        for (long i = 0; i <= r.degree(); ++i) {
            int c = r.coeff(i);
            if (c == 1) e.lo |= 1ull << i;
            if (c == 2) e.hi |= 1ull << i;
        }
        red_.push_back(e);
    }
}

FieldElem FieldCtx::alpha() const {
    return m_ == 1 ? from_poly(TritPoly::x()) : FieldElem{2, 0};
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    // Schoolbook in bitsliced planes; the product has up to 2m-1 coordinates,
    // which fits u128 planes for m <= 40.
    TritPlanes<u128> acc{};
    for (unsigned i = 0; i < m_; ++i) {
        u64 bit = 1ull << i;
        int c = (b.lo & bit) ? 1 : (b.hi & bit) ? 2 : 0;
        if (!c) continue;
        TritPlanes<u128> term{static_cast<u128>(a.lo) << i, static_cast<u128>(a.hi) << i};
        acc = planes_add(acc, planes_scale(term, c));
    }
    // Fold coordinates m..2m-2 down using x^(m+j) mod f, top first so each
    // position is cleared before anything below it is touched.
    for (unsigned j = 2 * m_ - 2; j >= m_ && j < 2 * m_; --j) {
        u128 bit = static_cast<u128>(1) << j;
        int c = (acc.lo & bit) ? 1 : (acc.hi & bit) ? 2 : 0;
        if (!c) continue;
        acc.lo &= ~bit;
        acc.hi &= ~bit;
        FieldElem r = red_[j - m_];
        TritPlanes<u128> term{r.lo, r.hi};
        acc = planes_add(acc, planes_scale(term, c));
    }
    return {static_cast<u64>(acc.lo), static_cast<u64>(acc.hi)};
}

FieldElem FieldCtx::pow(FieldElem a, u64 k) const {
    if (a.is_zero()) return k == 0 ? one() : zero();
    k %= n_;
    FieldElem r = one();
    while (k) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("FieldCtx::inv: zero element");
    return pow(a, n_ - 1);
}

FieldElem FieldCtx::frobenius(FieldElem a, unsigned k) const {
    for (unsigned i = 0; i < k; ++i) a = mul(mul(a, a), a);
    return a;
}

int FieldCtx::half_power(FieldElem a) const {
    if (a.is_zero()) throw std::domain_error("FieldCtx::half_power: zero element");
    if (m_ == 0) throw std::logic_error("unreachable");
    FieldElem h = pow(a, n_ / 2);
    if (h == one()) return 1;
    if (h == neg(one())) return -1;
    throw std::logic_error("FieldCtx::half_power: x^(n/2) not in {1,-1}");
}

FieldElem FieldCtx::from_coeffs(const std::vector<int>& coords) const {
    if (coords.size() > m_)
        throw std::invalid_argument("FieldCtx::from_coeffs: too many coordinates");
    FieldElem e{};
    for (std::size_t i = 0; i < coords.size(); ++i) {
        int c = coords[i];
        if (c < 0 || c > 2) throw std::invalid_argument("FieldCtx::from_coeffs: bad trit");
        if (c == 1) e.lo |= 1ull << i;
        if (c == 2) e.hi |= 1ull << i;
    }
    return e;
}

FieldElem FieldCtx::from_poly(const TritPoly& p) const {
    TritPoly r = p % modulus_;
    FieldElem e{};
    for (long i = 0; i <= r.degree(); ++i) {
        int c = r.coeff(i);
        if (c == 1) e.lo |= 1ull << i;
        if (c == 2) e.hi |= 1ull << i;
    }
    return e;
}

std::vector<int> FieldCtx::coords(FieldElem a) const {
    std::vector<int> out(m_);
    for (unsigned i = 0; i < m_; ++i) {
        u64 bit = 1ull << i;
        out[i] = (a.lo & bit) ? 1 : (a.hi & bit) ? 2 : 0;
    }
    return out;
}

TritPoly FieldCtx::to_poly(FieldElem a) const {
    TritPoly p;
    for (unsigned i = 0; i < m_; ++i) {
        u64 bit = 1ull << i;
        int c = (a.lo & bit) ? 1 : (a.hi & bit) ? 2 : 0;
        if (c) p.set_coeff(i, c);
    }
    return p;
}

FieldElem FieldCtx::element_from_index(u64 idx) const {
    FieldElem e{};
    for (unsigned i = 0; i < m_ && idx; ++i, idx /= 3) {
        u64 d = idx % 3;
        if (d == 1) e.lo |= 1ull << i;
        if (d == 2) e.hi |= 1ull << i;
    }
    return e;
}

u64 FieldCtx::index_of(FieldElem a) const {
    u64 idx = 0;
    for (unsigned i = m_; i-- > 0;) {
        u64 bit = 1ull << i;
        idx = idx * 3 + ((a.lo & bit) ? 1 : (a.hi & bit) ? 2 : 0);
    }
    return idx;
}

ElementRange FieldCtx::all_elements(bool force_large) const {
    if (m_ > kExhaustiveCapM && !force_large)
        throw CapExceededError("all_elements: m=" + std::to_string(m_) + " exceeds the cap of " +
                               std::to_string(kExhaustiveCapM) + " (pass force_large to override)");
    return {this, n_ + 1};
}

std::optional<u64> FieldCtx::dlog(FieldElem a, bool force_large) const {
    if (m_ > kExhaustiveCapM && !force_large)
        throw CapExceededError("dlog: m=" + std::to_string(m_) + " exceeds the cap of " +
                               std::to_string(kExhaustiveCapM) + " (pass force_large to override)");
    if (a.is_zero()) return std::nullopt;
    FieldElem p = one();
    for (u64 i = 0; i < n_; ++i) {
        if (p == a) return i;
        p = mul(p, alpha());
    }
    return std::nullopt;
}

FieldCtx ctx_new(const TritPoly& modulus) { return FieldCtx(modulus); }

FieldCtx ctx_default(unsigned m) {
    if (m < 1 || m > 40) throw std::invalid_argument("ctx_default: m out of range 1..40");
    // Candidates in lex order with the constant coefficient most significant.
    std::vector<int> c(m, 0);
    for (;;) {
        TritPoly f;
        f.set_coeff(m, 1);
        for (unsigned i = 0; i < m; ++i)
            if (c[i]) f.set_coeff(i, c[i]);
        if (f.coeff(0) != 0 && is_irreducible(f) && poly_order(f) == pow3(m) - 1)
            return FieldCtx(f);
        long i = static_cast<long>(m) - 1;
        while (i >= 0 && c[i] == 2) c[i--] = 0;
        if (i < 0) throw std::logic_error("ctx_default: no primitive polynomial found");
        ++c[i];
    }
}

}  // namespace ternary
