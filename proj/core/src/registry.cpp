#include "ternary/registry.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <stdexcept>

namespace ternary {

namespace {

// Recursive-descent evaluator for the registry expression language:
// integer arithmetic (^ * / % + -), comparisons, && ||, gcd(), prime(),
// variables m and k. Tracks whether k was referenced so parameterless
// rules are evaluated once.
class Eval {
public:
    Eval(std::string_view src, i128 m, i128 k) : s_(src), m_(m), k_(k) {}

    i128 run() {
        i128 v = parse_or();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return v;
    }

    bool uses_k() const { return uses_k_; }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    i128 m_, k_;
    bool uses_k_ = false;

    [[noreturn]] void fail(const std::string& why) const {
        throw std::runtime_error("registry expression error (" + why + ") in: " +
                                 std::string(s_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }

    bool eat(std::string_view tok) {
        skip_ws();
        if (s_.substr(pos_, tok.size()) == tok) {
            // don't split identifiers or glue comparison operators
            if ((tok == "<" || tok == ">") && pos_ + 1 < s_.size() && s_[pos_ + 1] == '=')
                return false;
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    bool eat_word(std::string_view word) {
        skip_ws();
        if (s_.substr(pos_, word.size()) != word) return false;
        std::size_t after = pos_ + word.size();
        if (after < s_.size() &&
            (std::isalnum(static_cast<unsigned char>(s_[after])) || s_[after] == '_'))
            return false;
        pos_ = after;
        return true;
    }

    // logical or is spelled "or" because '|' separates record fields
    i128 parse_or() {
        i128 v = parse_and();
        while (eat_word("or")) {
            i128 r = parse_and();
            v = (v != 0 || r != 0) ? 1 : 0;
        }
        return v;
    }

    i128 parse_and() {
        i128 v = parse_cmp();
        while (eat("&&")) {
            i128 r = parse_cmp();
            v = (v != 0 && r != 0) ? 1 : 0;
        }
        return v;
    }

    i128 parse_cmp() {
        i128 v = parse_sum();
        if (eat("==")) return v == parse_sum() ? 1 : 0;
        if (eat("!=")) return v != parse_sum() ? 1 : 0;
        if (eat("<=")) return v <= parse_sum() ? 1 : 0;
        if (eat(">=")) return v >= parse_sum() ? 1 : 0;
        if (eat("<")) return v < parse_sum() ? 1 : 0;
        if (eat(">")) return v > parse_sum() ? 1 : 0;
        return v;
    }

    i128 parse_sum() {
        i128 v = parse_term();
        for (;;) {
            if (eat("+")) v += parse_term();
            else if (eat("-")) v -= parse_term();
            else return v;
        }
    }

    i128 parse_term() {
        i128 v = parse_unary();
        for (;;) {
            if (eat("*")) v *= parse_unary();
            else if (eat("/")) {
                i128 d = parse_unary();
                if (d == 0) fail("division by zero");
                v /= d;
            } else if (eat("%")) {
                i128 d = parse_unary();
                if (d == 0) fail("modulo by zero");
                v %= d;
            } else {
                return v;
            }
        }
    }

    i128 parse_unary() {
        if (eat("-")) return -parse_unary();
        return parse_pow();
    }

    i128 parse_pow() {
        i128 base = parse_atom();
        if (!eat("^")) return base;
        i128 exp = parse_unary();
        if (exp < 0 || exp > 100) fail("exponent out of range");
        i128 r = 1;
        for (i128 i = 0; i < exp; ++i) {
            r *= base;
            if (r > (i128(1) << 100) || r < -(i128(1) << 100)) fail("power overflow");
        }
        return r;
    }

    i128 parse_atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            i128 v = parse_or();
            if (!eat(")")) fail("missing )");
            return v;
        }
        if (c >= '0' && c <= '9') {
            i128 v = 0;
            while (pos_ < s_.size() && s_[pos_] >= '0' && s_[pos_] <= '9')
                v = v * 10 + (s_[pos_++] - '0');
            return v;
        }
        if (s_.substr(pos_, 4) == "gcd(") {
            pos_ += 4;
            i128 a = parse_or();
            if (!eat(",")) fail("gcd needs two arguments");
            i128 b = parse_or();
            if (!eat(")")) fail("missing )");
            u64 ua = static_cast<u64>(a < 0 ? -a : a);
            u64 ub = static_cast<u64>(b < 0 ? -b : b);
            return static_cast<i128>(std::gcd(ua, ub));
        }
        if (s_.substr(pos_, 6) == "prime(") {
            pos_ += 6;
            i128 a = parse_or();
            if (!eat(")")) fail("missing )");
            return a > 1 && is_prime_u64(static_cast<u64>(a)) ? 1 : 0;
        }
        if (c == 'm') { ++pos_; return m_; }
        if (c == 'k') { ++pos_; uses_k_ = true; return k_; }
        fail("unexpected token");
    }
};

struct EvalResult {
    i128 value;
    bool uses_k;
};

EvalResult evaluate(const std::string& expr, unsigned m, u64 k) {
    Eval ev(expr, static_cast<i128>(m), static_cast<i128>(k));
    i128 v = ev.run();
    return {v, ev.uses_k()};
}

}  // namespace

Registry::Registry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("registry: cannot open " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
        if (line.empty()) continue;
        Rule r;
        std::string* fields[] = {&r.shape, &r.id, &r.source, &r.kind, &r.expr, &r.cond};
        std::size_t pos = 0;
        for (int i = 0; i < 6; ++i) {
            auto next = line.find('|', pos);
            if (i < 5 && next == std::string::npos)
                throw std::runtime_error("registry: malformed line " + std::to_string(lineno) +
                                         " in " + path);
            *fields[i] = line.substr(pos, next == std::string::npos ? next : next - pos);
            pos = next + 1;
        }
        if (r.kind != "expr" && r.kind != "cong" && r.kind != "cong_even")
            throw std::runtime_error("registry: unknown kind '" + r.kind + "' at line " +
                                     std::to_string(lineno));
        rules_.push_back(std::move(r));
    }
}

const Registry& Registry::builtin() {
    static Registry reg(TERNARY_REGISTRY_DEFAULT_PATH);
    return reg;
}

std::vector<KnownExponent> Registry::known_exponents(const std::string& shape,
                                                     unsigned m) const {
    if (m < 2 || m > 40)
        throw std::invalid_argument("known_exponents: m out of range 2..40");
    const u64 n = pow3(m) - 1;
    std::vector<KnownExponent> out;
    std::set<std::pair<std::string, u64>> seen;

    auto emit = [&](const Rule& rule, u64 e, bool parameterized, u64 k) {
        e %= n;
        if (e == 0) return;
        if (!seen.insert({rule.id, e}).second) return;
        KnownExponent ke{rule.id, rule.source, e, std::nullopt};
        if (parameterized) ke.k = k;
        out.push_back(std::move(ke));
    };

    for (const Rule& rule : rules_) {
        if (rule.shape != shape) continue;
        for (u64 k = 1; k <= 2 * static_cast<u64>(m); ++k) {
            auto cond = evaluate(rule.cond, m, k);
            bool parameterized = cond.uses_k;
            if (cond.value != 0) {
                if (rule.kind == "expr") {
                    auto val = evaluate(rule.expr, m, k);
                    parameterized |= val.uses_k;
                    i128 e = val.value % static_cast<i128>(n);
                    if (e < 0) e += n;
                    emit(rule, static_cast<u64>(e), parameterized, k);
                } else {
                    auto semi = rule.expr.find(';');
                    if (semi == std::string::npos)
                        throw std::runtime_error("registry: congruence rule " + rule.id +
                                                 " needs 'A;B' in its expr field");
                    auto a = evaluate(rule.expr.substr(0, semi), m, k);
                    auto b = evaluate(rule.expr.substr(semi + 1), m, k);
                    parameterized |= a.uses_k || b.uses_k;
                    i128 av = a.value % static_cast<i128>(n);
                    if (av < 0) av += n;
                    i128 bv = b.value % static_cast<i128>(n);
                    if (bv < 0) bv += n;
                    if (rule.kind == "cong") {
                        if (std::gcd(static_cast<u64>(av), n) == 1)
                            emit(rule, mulmod(invmod(static_cast<u64>(av), n),
                                              static_cast<u64>(bv), n),
                                 parameterized, k);
                    } else {  // cong_even
                        for (u64 sol : solve_linear_congruence(static_cast<u64>(av),
                                                               static_cast<u64>(bv), n))
                            if (sol % 2 == 0) emit(rule, sol, parameterized, k);
                    }
                }
            }
            if (!parameterized) break;
        }
    }
    return out;
}

std::vector<KnownExponent> known_exponents(const std::string& shape, unsigned m) {
    return Registry::builtin().known_exponents(shape, m);
}

}  // namespace ternary
