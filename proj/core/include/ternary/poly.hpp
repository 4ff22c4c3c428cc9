#ifndef TERNARY_POLY_HPP
#define TERNARY_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ternary/trit.hpp"

namespace ternary {

/// Polynomial over F_3. Coefficients are bitsliced into two 64-bit word
/// planes (see trit.hpp); canonical form keeps no trailing zero words and
/// degree() of the zero polynomial is kZeroDegree.
class TritPoly {
public:
    static constexpr long kZeroDegree = -1;

    TritPoly() = default;

    static TritPoly zero() { return {}; }
    static TritPoly one() { return constant(1); }
    static TritPoly x() { return monomial(1, 1); }
    static TritPoly constant(int c);
    static TritPoly monomial(long exp, int c);
    /// Little-endian coefficient list; values must be in {0,1,2}.
    static TritPoly from_coeffs(std::span<const int> coeffs);
    static TritPoly from_coeffs(std::initializer_list<int> coeffs);

    long degree() const { return deg_; }
    bool is_zero() const { return deg_ == kZeroDegree; }
    bool is_one() const { return deg_ == 0 && coeff(0) == 1; }
    bool is_monic() const { return deg_ >= 0 && lead_coeff() == 1; }
    int coeff(long i) const;
    int lead_coeff() const { return coeff(deg_); }
    std::vector<int> coeffs() const;

    TritPoly operator+(const TritPoly& o) const;
    TritPoly operator-(const TritPoly& o) const;
    TritPoly operator-() const;
    TritPoly operator*(const TritPoly& o) const;
    TritPoly operator*(int c) const;
    /// Multiplication by x^k.
    TritPoly shifted(long k) const;

    /// Quotient and remainder; b must be nonzero.
    static std::pair<TritPoly, TritPoly> divrem(const TritPoly& a, const TritPoly& b);
    TritPoly operator/(const TritPoly& o) const { return divrem(*this, o).first; }
    TritPoly operator%(const TritPoly& o) const { return divrem(*this, o).second; }

    TritPoly derivative() const;
    TritPoly monic() const;
    int eval_trit(int x) const;

    bool operator==(const TritPoly& o) const { return deg_ == o.deg_ && lo_ == o.lo_ && hi_ == o.hi_; }

    /// Deterministic total order: by degree, then coefficients from the top.
    static int cmp(const TritPoly& a, const TritPoly& b);
    bool operator<(const TritPoly& o) const { return cmp(*this, o) < 0; }

    /// Human form: "x^7+2x^6+x^5+x^3+2x+2" (descending, unit coefficients
    /// omitted, zero terms skipped).
    std::string str() const;
    /// Machine form: little-endian coefficient list "2,2,0,1,0,1,2,1".
    std::string machine_str() const;
    /// Accepts either form; '-' maps a coefficient c to 3-c.
    static TritPoly parse(std::string_view text);

    void set_coeff(long i, int c);  // re-canonicalizes

private:
    std::vector<std::uint64_t> lo_, hi_;
    long deg_ = kZeroDegree;

    void ensure_words(std::size_t nwords);
    void trim();
    // *this += s * (src << shift), trit-wise.
    void add_shifted_scaled(const TritPoly& src, long shift, int s);

    friend class FieldCtx;
};

inline TritPoly operator*(int c, const TritPoly& p) { return p * c; }

/// Monic gcd; not both arguments may be zero.
TritPoly poly_gcd(TritPoly a, TritPoly b);

/// a*b mod f.
TritPoly poly_mulmod(const TritPoly& a, const TritPoly& b, const TritPoly& f);
/// a^e mod f with a 64-bit exponent.
TritPoly poly_powmod(const TritPoly& a, std::uint64_t e, const TritPoly& f);

}  // namespace ternary

#endif
