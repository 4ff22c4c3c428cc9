#include "ternary/cosets.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace ternary {

bool Coset::contains(u64 v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

namespace {

Coset compute_coset(u64 j, unsigned m) {
    const u64 n = pow3(m) - 1;
    j %= n;
    Coset c;
    u64 cur = j;
    do {
        c.members.push_back(cur);
        cur = mulmod(cur, 3, n);
    } while (cur != j);
    std::sort(c.members.begin(), c.members.end());
    c.leader = c.members.front();
    return c;
}

std::mutex cache_mutex;
std::map<std::pair<unsigned, u64>, Coset>& cache() {
    static std::map<std::pair<unsigned, u64>, Coset> c;
    return c;
}

}  // namespace

Coset coset(u64 j, unsigned m) {
    if (m < 1 || m > 40) throw std::invalid_argument("coset: m out of range 1..40");
    Coset c = compute_coset(j, m);
    std::lock_guard lock(cache_mutex);
    auto [it, inserted] = cache().try_emplace({m, c.leader}, std::move(c));
    return it->second;
}

bool same_coset(u64 a, u64 b, unsigned m) {
    const u64 n = pow3(m) - 1;
    return coset(a, m).contains(b % n);
}

CosetSizePrediction coset_size_predicted(u64 e, unsigned m) {
    const u64 n = pow3(m) - 1;
    if (e < 1 || e > n - 1) throw std::invalid_argument("coset_size_predicted: e out of range");

    // Criterion 2: e = 3^k + 1.
    for (unsigned k = 1; k < m; ++k) {
        if (e == pow3(k) + 1) {
            if (m % 2 == 1) return {m, 2};
            return {k == m / 2 ? m / 2 : m, 2};
        }
    }

    // Criterion 1, first form: small gcd.
    const u64 g = std::gcd(e, n);
    if (g <= 2) return {m, 1};
    // Second form: g * gcd(3^j - 1, n) is never 0 mod n.
    bool all_nonzero = true;
    for (unsigned j = 1; j < m; ++j) {
        if (mulmod(g % n, std::gcd(pow3(j) - 1, n) % n, n) == 0) {
            all_nonzero = false;
            break;
        }
    }
    if (all_nonzero) return {m, 1};

    // Criterion 3: m odd, e = (3^h + 5)/2 with h odd.
    if (m % 2 == 1 && e >= 3 && (2 * e - 5) % 3 == 0) {
        u64 v = 2 * e - 5;
        unsigned h = 0;
        while (v % 3 == 0) { v /= 3; ++h; }
        if (v == 1 && h % 2 == 1) return {m, 3};
    }

    return {std::nullopt, 0};
}

}  // namespace ternary
