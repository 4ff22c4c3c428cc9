#include "ternary/poly.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ternary {

namespace {
constexpr std::size_t words_for(long deg) {
    return deg < 0 ? 0 : static_cast<std::size_t>(deg) / 64 + 1;
}
}  // namespace

TritPoly TritPoly::constant(int c) {
    TritPoly p;
    p.set_coeff(0, c);
    return p;
}

TritPoly TritPoly::monomial(long exp, int c) {
    TritPoly p;
    p.set_coeff(exp, c);
    return p;
}

TritPoly TritPoly::from_coeffs(std::span<const int> coeffs) {
    TritPoly p;
    p.ensure_words(words_for(static_cast<long>(coeffs.size()) - 1));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        int c = coeffs[i];
        if (c < 0 || c > 2) throw std::invalid_argument("TritPoly: coefficient out of range");
        if (c == 1) p.lo_[i / 64] |= 1ull << (i % 64);
        if (c == 2) p.hi_[i / 64] |= 1ull << (i % 64);
    }
    p.trim();
    return p;
}

TritPoly TritPoly::from_coeffs(std::initializer_list<int> coeffs) {
    return from_coeffs(std::span<const int>(coeffs.begin(), coeffs.size()));
}

int TritPoly::coeff(long i) const {
    if (i < 0 || words_for(i) > lo_.size()) return 0;
    std::uint64_t bit = 1ull << (i % 64);
    if (lo_[i / 64] & bit) return 1;
    if (hi_[i / 64] & bit) return 2;
    return 0;
}

std::vector<int> TritPoly::coeffs() const {
    std::vector<int> out(deg_ + 1);
    for (long i = 0; i <= deg_; ++i) out[i] = coeff(i);
    return out;
}

void TritPoly::ensure_words(std::size_t nwords) {
    if (lo_.size() < nwords) {
        lo_.resize(nwords, 0);
        hi_.resize(nwords, 0);
    }
}

void TritPoly::trim() {
    while (!lo_.empty() && lo_.back() == 0 && hi_.back() == 0) {
        lo_.pop_back();
        hi_.pop_back();
    }
    if (lo_.empty()) {
        deg_ = kZeroDegree;
    } else {
        std::uint64_t top = lo_.back() | hi_.back();
        deg_ = static_cast<long>(lo_.size() - 1) * 64 + (63 - __builtin_clzll(top));
    }
}

void TritPoly::set_coeff(long i, int c) {
    if (i < 0) throw std::invalid_argument("TritPoly: negative exponent");
    if (c < 0 || c > 2) throw std::invalid_argument("TritPoly: coefficient out of range");
    ensure_words(words_for(i));
    std::uint64_t bit = 1ull << (i % 64);
    lo_[i / 64] &= ~bit;
    hi_[i / 64] &= ~bit;
    if (c == 1) lo_[i / 64] |= bit;
    if (c == 2) hi_[i / 64] |= bit;
    trim();
}

void TritPoly::add_shifted_scaled(const TritPoly& src, long shift, int s) {
    if (src.is_zero() || s == 0) return;
    ensure_words(words_for(src.deg_ + shift));
    const std::size_t woff = static_cast<std::size_t>(shift) / 64;
    const unsigned boff = static_cast<unsigned>(shift % 64);
    const std::size_t sw = src.lo_.size();
    // One extra word catches the spill from the bit offset.
    for (std::size_t w = 0; w <= sw; ++w) {
        std::uint64_t slo = 0, shi = 0;
        if (w < sw) {
            slo = src.lo_[w] << boff;
            shi = src.hi_[w] << boff;
        }
        if (boff && w > 0) {
            slo |= src.lo_[w - 1] >> (64 - boff);
            shi |= src.hi_[w - 1] >> (64 - boff);
        }
        if (!(slo | shi)) continue;
        TritPlanes<std::uint64_t> p = planes_scale<std::uint64_t>({slo, shi}, s);
        std::size_t dw = woff + w;
        ensure_words(dw + 1);
        TritPlanes<std::uint64_t> r = planes_add<std::uint64_t>({lo_[dw], hi_[dw]}, p);
        lo_[dw] = r.lo;
        hi_[dw] = r.hi;
    }
    trim();
}

TritPoly TritPoly::operator+(const TritPoly& o) const {
    TritPoly r = *this;
    r.add_shifted_scaled(o, 0, 1);
    return r;
}

TritPoly TritPoly::operator-(const TritPoly& o) const {
    TritPoly r = *this;
    r.add_shifted_scaled(o, 0, 2);
    return r;
}

TritPoly TritPoly::operator-() const {
    TritPoly r = *this;
    std::swap(r.lo_, r.hi_);
    return r;
}

TritPoly TritPoly::operator*(int c) const {
    if (c % 3 == 0) return zero();
    return c % 3 == 1 ? *this : -*this;
}

TritPoly TritPoly::operator*(const TritPoly& o) const {
    if (is_zero() || o.is_zero()) return zero();
    TritPoly r;
    r.ensure_words(words_for(deg_ + o.deg_));
    // Schoolbook over the shorter operand.
    const TritPoly& a = deg_ >= o.deg_ ? *this : o;
    const TritPoly& b = deg_ >= o.deg_ ? o : *this;
    for (long j = 0; j <= b.deg_; ++j) {
        int c = b.coeff(j);
        if (c) r.add_shifted_scaled(a, j, c);
    }
    return r;
}

TritPoly TritPoly::shifted(long k) const {
    if (is_zero()) return zero();
    TritPoly r;
    r.add_shifted_scaled(*this, k, 1);
    return r;
}

std::pair<TritPoly, TritPoly> TritPoly::divrem(const TritPoly& a, const TritPoly& b) {
    if (b.is_zero()) throw std::domain_error("TritPoly: division by zero polynomial");
    TritPoly q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.ensure_words(words_for(a.degree() - b.degree()));
    const int ilead = trit_inv(b.lead_coeff());
    for (long i = a.degree(); i >= b.degree() && !r.is_zero(); --i) {
        if (r.degree() < i) continue;
        int c = r.coeff(i);
        if (!c) continue;
        int qc = trit_mul(c, ilead);
        q.set_coeff(i - b.degree(), qc);
        r.add_shifted_scaled(b, i - b.degree(), trit_neg(qc));
    }
    return {q, r};
}

TritPoly TritPoly::derivative() const {
    TritPoly d;
    for (long i = 1; i <= deg_; ++i) {
        int c = trit_mul(coeff(i), static_cast<int>(i % 3));
        if (c) d.set_coeff(i - 1, c);
    }
    return d;
}

TritPoly TritPoly::monic() const {
    if (is_zero()) return zero();
    return *this * trit_inv(lead_coeff());
}

int TritPoly::eval_trit(int x) const {
    int acc = 0;
    for (long i = deg_; i >= 0; --i) acc = trit_add(trit_mul(acc, x), coeff(i));
    return acc;
}

int TritPoly::cmp(const TritPoly& a, const TritPoly& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
    for (long i = a.deg_; i >= 0; --i) {
        int ca = a.coeff(i), cb = b.coeff(i);
        if (ca != cb) return ca < cb ? -1 : 1;
    }
    return 0;
}

std::string TritPoly::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = deg_; i >= 0; --i) {
        int c = coeff(i);
        if (!c) continue;
        if (!s.empty()) s += '+';
        if (i == 0) {
            s += static_cast<char>('0' + c);
        } else {
            if (c == 2) s += '2';
            s += 'x';
            if (i > 1) s += '^' + std::to_string(i);
        }
    }
    return s;
}

std::string TritPoly::machine_str() const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = 0; i <= deg_; ++i) {
        if (i) s += ',';
        s += static_cast<char>('0' + coeff(i));
    }
    return s;
}

TritPoly TritPoly::parse(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) cleaned += ch;
    if (cleaned.empty()) throw std::invalid_argument("TritPoly::parse: empty input");

    if (cleaned.find(',') != std::string::npos ||
        cleaned.find_first_not_of("012") == std::string::npos) {
        // Machine form: comma-separated little-endian trits.
        std::vector<int> cs;
        std::size_t pos = 0;
        while (pos <= cleaned.size()) {
            std::size_t next = cleaned.find(',', pos);
            std::string tok = cleaned.substr(pos, next == std::string::npos ? next : next - pos);
            if (tok.size() != 1 || tok[0] < '0' || tok[0] > '2')
                throw std::invalid_argument("TritPoly::parse: bad machine-form coefficient '" + tok + "'");
            cs.push_back(tok[0] - '0');
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return from_coeffs(cs);
    }

    // Human form: signed sum of terms c, x, cx, x^k, cx^k.
    TritPoly p;
    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        int sign = 1;
        if (cleaned[pos] == '+' || cleaned[pos] == '-') {
            if (cleaned[pos] == '-') sign = -1;
            ++pos;
        }
        std::size_t end = cleaned.find_first_of("+-", pos);
        if (end == std::string::npos) end = cleaned.size();
        std::string term = cleaned.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw std::invalid_argument("TritPoly::parse: dangling sign");

        int c = 1;
        long e = 0;
        std::size_t xpos = term.find('x');
        if (xpos == std::string::npos) {
            std::size_t parsed = 0;
            c = std::stoi(term, &parsed);
            if (parsed != term.size()) throw std::invalid_argument("TritPoly::parse: bad term '" + term + "'");
        } else {
            if (xpos > 0) {
                std::size_t parsed = 0;
                c = std::stoi(term.substr(0, xpos), &parsed);
                if (parsed != xpos) throw std::invalid_argument("TritPoly::parse: bad coefficient in '" + term + "'");
            }
            e = 1;
            if (xpos + 1 < term.size()) {
                if (term[xpos + 1] != '^')
                    throw std::invalid_argument("TritPoly::parse: bad term '" + term + "'");
                std::size_t parsed = 0;
                e = std::stol(term.substr(xpos + 2), &parsed);
                if (parsed != term.size() - xpos - 2 || e < 0)
                    throw std::invalid_argument("TritPoly::parse: bad exponent in '" + term + "'");
            }
        }
        c = ((c % 3) + 3) % 3;
        if (sign < 0) c = trit_neg(c);
        p.set_coeff(e, trit_add(p.coeff(e), c));
    }
    return p;
}

TritPoly poly_gcd(TritPoly a, TritPoly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly_gcd: both arguments zero");
    while (!b.is_zero()) {
        TritPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

TritPoly poly_mulmod(const TritPoly& a, const TritPoly& b, const TritPoly& f) {
    return (a * b) % f;
}

TritPoly poly_powmod(const TritPoly& a, std::uint64_t e, const TritPoly& f) {
    TritPoly r = TritPoly::one() % f;
    TritPoly base = a % f;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f);
        base = poly_mulmod(base, base, f);
        e >>= 1;
    }
    return r;
}

}  // namespace ternary
