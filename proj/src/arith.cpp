#include "legendre/arith.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace legendre {

u64 Factorization::radical() const noexcept {
    u64 r = 1;
    for (const auto& f : factors) r *= f.prime;
    return r;
}

bool Factorization::squarefree() const noexcept {
    return std::all_of(factors.begin(), factors.end(),
                       [](const PrimePower& f) { return f.exponent == 1; });
}

u64 mod_pow(u64 base, u64 exp, u64 modulus) {
    if (modulus == 0) throw std::invalid_argument("mod_pow: modulus must be positive");
    if (modulus == 1) return 0;
    u64 result = 1;
    base %= modulus;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, modulus);
        base = mul_mod(base, base, modulus);
        exp >>= 1;
    }
    return result;
}

u64 gcd(u64 a, u64 b) noexcept { return std::gcd(a, b); }

u64 inverse_mod(u64 a, u64 m) {
    if (m == 1) return 0;
    i128 old_r = static_cast<i128>(a % m), r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 quot = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - quot * r};
        std::tie(old_s, s) = std::pair{s, old_s - quot * s};
    }
    if (old_r != 1) throw std::domain_error("inverse_mod: argument not invertible");
    if (old_s < 0) old_s += m;
    return static_cast<u64>(old_s);
}

int jacobi_reduced(u64 a, u64 n) noexcept {
    int t = 1;
    while (a != 0) {
        const int tz = std::countr_zero(a);
        a >>= tz;
        // (2/n) = -1 iff n = 3, 5 (mod 8)
        if ((tz & 1) && ((n & 7) == 3 || (n & 7) == 5)) t = -t;
        std::swap(a, n);
        if ((a & 3) == 3 && (n & 3) == 3) t = -t;
        a %= n;
    }
    return n == 1 ? t : 0;
}

int jacobi_symbol(i64 a, u64 n) {
    if (n == 0 || (n & 1) == 0)
        throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive, got " +
                                    std::to_string(n));
    return jacobi_reduced(reduce_signed(a, n), n);
}

int legendre_symbol(i64 a, u64 p) {
    if (p < 3 || (p & 1) == 0 || !is_prime(p))
        throw std::invalid_argument("legendre_symbol: " + std::to_string(p) + " is not an odd prime");
    return jacobi_reduced(reduce_signed(a, p), p);
}

int euler_criterion(u64 a, u64 p) noexcept {
    const u64 r = mod_pow(a % p, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
    u64 x = mod_pow(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace

bool is_prime(u64 n) noexcept {
    if (n < 2) return false;
    constexpr u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 p : small) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 37 * 37) return true;
    u64 d = n - 1;
    const int s = std::countr_zero(d);
    d >>= s;
    // The first twelve primes are a deterministic witness set below 3.3e24.
    for (u64 a : small)
        if (miller_rabin_witness(n, a, d, s)) return false;
    return true;
}

std::vector<u64> sieve_primes(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    const u64 root = isqrt(limit);
    std::vector<bool> small(root + 1, true);
    std::vector<u64> base;
    for (u64 i = 2; i <= root; ++i) {
        if (!small[i]) continue;
        base.push_back(i);
        for (u64 j = i * i; j <= root; j += i) small[j] = false;
    }

    constexpr u64 kSegment = u64{1} << 18;
    std::vector<char> seg(kSegment);
    for (u64 lo = 2; lo <= limit; lo += kSegment) {
        const u64 hi = std::min(limit, lo + kSegment - 1);
        std::fill(seg.begin(), seg.end(), 1);
        for (u64 p : base) {
            if (p * p > hi) break;
            u64 start = std::max(p * p, (lo + p - 1) / p * p);
            for (u64 j = start; j <= hi; j += p) seg[j - lo] = 0;
        }
        for (u64 i = lo; i <= hi; ++i)
            if (seg[i - lo]) primes.push_back(i);
        if (hi == limit) break;
    }
    return primes;
}

u64 isqrt(u64 n) noexcept {
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n) --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

namespace {

constexpr u64 kTrialBound = 1024;

u64 pollard_brent(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return (mul_mod(x, x, n) + c) % n; };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        constexpr u64 m = 128;
        for (u64 r = 1; g == 1; r <<= 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            for (u64 k = 0; k < r && g == 1; k += m) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    const u64 r = isqrt(n);
    if (r * r == n) {
        split(r, out);
        split(r, out);
        return;
    }
    const u64 d = pollard_brent(n);
    split(d, out);
    split(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be positive");
    Factorization result;
    result.value = n;
    auto push = [&](u64 p, unsigned e) {
        if (!result.factors.empty() && result.factors.back().prime == p)
            result.factors.back().exponent += e;
        else
            result.factors.push_back({p, e});
    };
    for (u64 p = 2; p < kTrialBound && p * p <= n; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) push(p, e);
    }
    if (n > 1) {
        std::vector<u64> rest;
        split(n, rest);
        std::sort(rest.begin(), rest.end());
        for (u64 p : rest) push(p, 1);
    }
    return result;
}

std::optional<u64> sqrt_mod_prime(u64 a, u64 p) {
    if (p < 3 || (p & 1) == 0 || !is_prime(p))
        throw std::invalid_argument("sqrt_mod_prime: " + std::to_string(p) + " is not an odd prime");
    a %= p;
    if (a == 0) return 0;
    if (jacobi_reduced(a, p) != 1) return std::nullopt;

    u64 root;
    if ((p & 3) == 3) {
        root = mod_pow(a, (p + 1) / 4, p);
    } else {
        // Tonelli-Shanks
        u64 q = p - 1;
        const int s = std::countr_zero(q);
        q >>= s;
        u64 z = 2;
        while (jacobi_reduced(z, p) != -1) ++z;
        u64 m = static_cast<u64>(s);
        u64 c = mod_pow(z, q, p);
        u64 t = mod_pow(a, q, p);
        root = mod_pow(a, (q + 1) / 2, p);
        while (t != 1) {
            u64 i = 0;
            for (u64 tt = t; tt != 1; tt = mul_mod(tt, tt, p)) ++i;
            u64 b = c;
            for (u64 j = 0; j + i + 1 < m; ++j) b = mul_mod(b, b, p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            root = mul_mod(root, b, p);
        }
    }
    return std::min(root, p - root);
}

namespace {

u64 ipow(u64 p, unsigned e) {
    u64 r = 1;
    while (e--) r *= p;
    return r;
}

// Square roots of a unit a modulo p^e, as residues modulo p^e.
std::vector<u64> unit_roots(u64 a, u64 p, unsigned e) {
    const u64 m = ipow(p, e);
    if (p == 2) {
        if (e == 1) return {1};
        if (e == 2) return (a & 3) == 1 ? std::vector<u64>{1, 3} : std::vector<u64>{};
        if ((a & 7) != 1) return {};
        u64 x = 1;
        for (unsigned i = 3; i < e; ++i) {
            const u64 mod_next = u64{1} << (i + 1);
            if ((static_cast<u128>(x) * x - a) % mod_next != 0) x += u64{1} << (i - 1);
        }
        const u64 half = m >> 1;
        return {x, m - x, (x + half) % m, (m - x + half) % m};
    }
    const auto base = sqrt_mod_prime(a % p, p);
    if (!base) return {};
    u64 x = *base;
    // Newton iteration converges p-adically since p does not divide 2x.
    while (static_cast<u64>(static_cast<u128>(x) * x % m) != a % m) {
        const u64 fx = (static_cast<u64>(static_cast<u128>(x) * x % m) + m - a % m) % m;
        const u64 inv = inverse_mod(mul_mod(2, x, m), m);
        x = (x + m - mul_mod(fx, inv, m)) % m;
    }
    return {x, m - x};
}

// All roots of x^2 = a (mod p^e) form the residue classes `roots` modulo
// `modulus` (a divisor of p^e).
struct RootClasses {
    u64 modulus;
    std::vector<u64> roots;
};

std::optional<RootClasses> prime_power_roots(u64 a, u64 p, unsigned e) {
    const u64 m = ipow(p, e);
    a %= m;
    if (a == 0) return RootClasses{ipow(p, (e + 1) / 2), {0}};
    unsigned v = 0;
    u64 unit = a;
    while (unit % p == 0) {
        unit /= p;
        ++v;
    }
    if (v & 1) return std::nullopt;
    const unsigned s = v / 2;
    auto base = unit_roots(unit, p, e - v);
    if (base.empty()) return std::nullopt;
    const u64 scale = ipow(p, s);
    const u64 modulus = ipow(p, e - s);
    RootClasses out{modulus, {}};
    for (u64 r : base) out.roots.push_back(r * scale % modulus);
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

}  // namespace

std::optional<u64> sqrt_mod(u64 a, const Factorization& m) {
    if (m.value == 0) throw std::invalid_argument("sqrt_mod: modulus must be positive");
    if (m.value == 1) return 0;
    std::vector<RootClasses> parts;
    for (const auto& f : m.factors) {
        auto part = prime_power_roots(a % ipow(f.prime, f.exponent), f.prime, f.exponent);
        if (!part) return std::nullopt;
        parts.push_back(std::move(*part));
    }
    // Every root is congruent modulo M = prod modulus_i to one CRT
    // combination of class representatives, and that combination (< M) is
    // itself a root, so the least root is the least combination.
    std::vector<u64> acc{0};
    u64 acc_mod = 1;
    for (const auto& part : parts) {
        const u64 inv = inverse_mod(acc_mod % part.modulus, part.modulus);
        std::vector<u64> next;
        next.reserve(acc.size() * part.roots.size());
        for (u64 x : acc) {
            for (u64 r : part.roots) {
                const u64 diff = (r + part.modulus - x % part.modulus) % part.modulus;
                const u64 t = mul_mod(diff, inv, part.modulus);
                next.push_back(x + acc_mod * t);
            }
        }
        acc = std::move(next);
        acc_mod *= part.modulus;
    }
    return *std::min_element(acc.begin(), acc.end());
}

std::optional<u64> sqrt_mod(u64 a, u64 m) {
    if (m == 0) throw std::invalid_argument("sqrt_mod: modulus must be positive");
    return sqrt_mod(a % m, factorize(m));
}

std::optional<u64> sqrt_mod_4q(i64 d, u64 q) {
    if (q == 0) throw std::invalid_argument("sqrt_mod_4q: q must be positive");
    if (q > (kMaxInput >> 2)) throw std::invalid_argument("sqrt_mod_4q: 4q exceeds 63 bits");
    const u64 m = 4 * q;
    Factorization fm = factorize(q);
    fm.value = m;
    if (!fm.factors.empty() && fm.factors.front().prime == 2)
        fm.factors.front().exponent += 2;
    else
        fm.factors.insert(fm.factors.begin(), PrimePower{2, 2});
    return sqrt_mod(reduce_signed(d, m), fm);
}

}  // namespace legendre
