#ifndef TERNARY_FIELD_HPP
#define TERNARY_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ternary/errors.hpp"
#include "ternary/numutil.hpp"
#include "ternary/poly.hpp"
#include "ternary/trit.hpp"

namespace ternary {

/// Element of GF(3^m), m <= 40: polynomial-basis coordinates bitsliced into
/// two planes (bit i of lo <=> coordinate i is 1, of hi <=> it is 2).
/// Values are only meaningful relative to the FieldCtx that produced them.
struct FieldElem {
    u64 lo = 0, hi = 0;
    bool operator==(const FieldElem&) const = default;
    bool is_zero() const { return (lo | hi) == 0; }
};

class ElementRange;

/// GF(3^m) with a fixed monic primitive modulus. The residue class of x is
/// a generator of the multiplicative group, written alpha. Immutable after
/// construction; safe to share across threads.
class FieldCtx {
public:
    /// Validates the modulus: throws NotIrreducibleError or (with the actual
    /// order attached) NotPrimitiveError.
    explicit FieldCtx(const TritPoly& modulus);

    unsigned m() const { return m_; }
    u64 n() const { return n_; }  // 3^m - 1
    const TritPoly& modulus() const { return modulus_; }

    static constexpr unsigned kExhaustiveCapM = 13;

    FieldElem zero() const { return {}; }
    FieldElem one() const { return {1, 0}; }
    FieldElem alpha() const;  // class of x

    FieldElem add(FieldElem a, FieldElem b) const {
        auto r = planes_add<u64>({a.lo, a.hi}, {b.lo, b.hi});
        return {r.lo, r.hi};
    }
    FieldElem neg(FieldElem a) const { return {a.hi, a.lo}; }
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem mul(FieldElem a, FieldElem b) const;
    FieldElem square(FieldElem a) const { return mul(a, a); }
    FieldElem inv(FieldElem a) const;
    /// x^k for k >= 0; the exponent is reduced mod n for nonzero x.
    FieldElem pow(FieldElem a, u64 k) const;
    /// x^(3^k), 0 <= k <= m.
    FieldElem frobenius(FieldElem a, unsigned k) const;
    /// Quadratic character x^((3^m-1)/2) as +1 / -1; throws on zero.
    int half_power(FieldElem a) const;

    FieldElem from_coeffs(const std::vector<int>& coords) const;
    FieldElem from_poly(const TritPoly& p) const;  // reduces mod the modulus
    std::vector<int> coords(FieldElem a) const;
    TritPoly to_poly(FieldElem a) const;

    /// Element whose coordinates are the base-3 digits of idx (little-endian);
    /// idx < 3^m. index_of inverts this.
    FieldElem element_from_index(u64 idx) const;
    u64 index_of(FieldElem a) const;

    /// All 3^m elements in index order. Throws CapExceededError when
    /// m > kExhaustiveCapM unless force_large is set.
    ElementRange all_elements(bool force_large = false) const;

    /// Discrete log base alpha by linear scan; subject to the same cap.
    std::optional<u64> dlog(FieldElem a, bool force_large = false) const;

private:
    unsigned m_;
    u64 n_;
    TritPoly modulus_;
    std::vector<FieldElem> red_;  // red_[j] = x^(m+j) mod modulus, j < m-1
};

/// Validated construction (same checks as the constructor).
FieldCtx ctx_new(const TritPoly& modulus);

/// The lexicographically smallest monic primitive polynomial of degree m,
/// coefficients compared from the constant term up. 1 <= m <= 40.
FieldCtx ctx_default(unsigned m);

class ElementIter {
public:
    using value_type = FieldElem;
    ElementIter(const FieldCtx* ctx, u64 idx) : ctx_(ctx), idx_(idx) {}
    FieldElem operator*() const { return ctx_->element_from_index(idx_); }
    ElementIter& operator++() { ++idx_; return *this; }
    bool operator!=(const ElementIter& o) const { return idx_ != o.idx_; }
    bool operator==(const ElementIter& o) const { return idx_ == o.idx_; }
    u64 index() const { return idx_; }

private:
    const FieldCtx* ctx_;
    u64 idx_;
};

class ElementRange {
public:
    ElementRange(const FieldCtx* ctx, u64 count) : ctx_(ctx), count_(count) {}
    ElementIter begin() const { return {ctx_, 0}; }
    ElementIter end() const { return {ctx_, count_}; }
    u64 size() const { return count_; }

private:
    const FieldCtx* ctx_;
    u64 count_;
};

}  // namespace ternary

#endif
