#pragma once

// Brute-force reference implementations used by the tests. None of these
// call into the library; they work straight from the definitions.

#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        out.push_back(d);
        while (n % d == 0) n /= d;
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline bool squarefree(u64 n) {
    for (u64 d = 2; d * d <= n; ++d)
        if (n % (d * d) == 0) return false;
    return true;
}

inline u64 mod(i64 a, u64 m) {
    const i64 r = a % static_cast<i64>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<i64>(m) : r);
}

/// Legendre symbol by listing the squares modulo p.
inline int legendre(i64 a, u64 p) {
    const u64 r = mod(a, p);
    if (r == 0) return 0;
    for (u64 b = 1; b < p; ++b)
        if (b * b % p == r) return 1;
    return -1;
}

/// Least b in [0, m) with b^2 = a (mod m).
inline std::optional<u64> least_sqrt(i64 a, u64 m) {
    const u64 r = mod(a, m);
    for (u64 b = 0; b < m; ++b)
        if (b * b % m == r) return b;
    return std::nullopt;
}

/// Non-residue indicators of n at each prime.
inline std::vector<int> theta(u64 n, const std::vector<u64>& primes) {
    std::vector<int> v;
    for (u64 p : primes) v.push_back(legendre(static_cast<i64>(n), p) == -1 ? 1 : 0);
    return v;
}

/// Rank over F_2 by dense Gaussian elimination.
inline unsigned rank(std::vector<std::vector<int>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    unsigned r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i][c])
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] ^= rows[r][j];
        ++r;
    }
    return r;
}

inline bool admissible(u64 n, u64 coprime_to, bool mod8 = true) {
    return std::gcd(n, coprime_to) == 1 && (!mod8 || n % 8 == 1);
}

inline u64 product(const std::vector<u64>& primes) {
    return std::accumulate(primes.begin(), primes.end(), u64{1}, std::multiplies<>());
}

/// n_q straight from the definition: max over sign patterns of the least n.
inline std::optional<u64> n_q(u64 q, u64 cap, bool mod8 = true) {
    const auto primes = prime_factors(q);
    std::set<std::vector<int>> seen;
    const std::size_t patterns = std::size_t{1} << primes.size();
    for (u64 n = 1; n <= cap; ++n) {
        if (!admissible(n, q, mod8)) continue;
        seen.insert(theta(n, primes));
        if (seen.size() == patterns) return n;
    }
    return std::nullopt;
}

/// g_{q,r}: least y whose admissible theta-images span F_2^k.
inline std::optional<u64> g(u64 q, u64 extra, u64 cap, bool mod8 = true) {
    const auto primes = prime_factors(q);
    if (primes.empty()) return 1;
    std::vector<std::vector<int>> rows;
    for (u64 n = 1; n <= cap; ++n) {
        if (!admissible(n, q * extra, mod8)) continue;
        rows.push_back(theta(n, primes));
        if (rank(rows) == primes.size()) return n;
    }
    return std::nullopt;
}

enum class Kind { Good, Exceptional, Ineligible };

/// Classification from the definition, visiting divisors in ascending order.
inline Kind classify(u64 q, u64 y, u64 cap, u64* offending = nullptr) {
    for (u64 d = 2; d < q; ++d) {
        if (q % d) continue;
        const auto gd = g(d, q, cap);
        if (!gd || *gd > y) {
            if (offending) *offending = d;
            return Kind::Ineligible;
        }
    }
    const auto gq = g(q, 1, cap);
    return (!gq || *gq > y) ? Kind::Exceptional : Kind::Good;
}

/// S_q(x, y) by factoring every n <= x.
inline std::vector<u64> smooth(u64 x, u64 y, u64 q) {
    std::vector<u64> out;
    for (u64 n = 1; n <= x; ++n) {
        bool ok = true;
        for (u64 p : prime_factors(n))
            if (p > y || p % 8 != 1 || q % p == 0) ok = false;
        if (ok) out.push_back(n);
    }
    return out;
}

}  // namespace oracle
