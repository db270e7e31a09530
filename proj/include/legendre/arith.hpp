#pragma once

// Exact 64-bit modular arithmetic: symbols, sieves, factorization and
// modular square roots. Every routine uses 128-bit intermediates and is a
// pure function of its arguments.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace legendre {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

/// Largest value accepted by the public entry points (2^63 - 1).
inline constexpr u64 kMaxInput = (u64{1} << 63) - 1;

struct PrimePower {
    u64 prime;
    unsigned exponent;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = prod prime^exponent with primes strictly increasing.
struct Factorization {
    u64 value = 1;
    std::vector<PrimePower> factors;

    /// omega(n), the number of distinct prime factors.
    [[nodiscard]] std::size_t omega() const noexcept { return factors.size(); }
    /// Product of the distinct primes.
    [[nodiscard]] u64 radical() const noexcept;
    [[nodiscard]] bool squarefree() const noexcept;
};

inline u64 mul_mod(u64 a, u64 b, u64 m) noexcept {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 mod_pow(u64 base, u64 exp, u64 modulus);

/// Least nonnegative residue of a signed value.
inline u64 reduce_signed(i64 a, u64 m) noexcept {
    const i128 r = static_cast<i128>(a) % static_cast<i128>(m);
    return static_cast<u64>(r < 0 ? r + m : r);
}

u64 gcd(u64 a, u64 b) noexcept;

/// Inverse of a modulo m; requires gcd(a, m) = 1.
u64 inverse_mod(u64 a, u64 m);

/// Jacobi symbol (a/n) for odd n >= 1 by binary reciprocity. Returns 0 when
/// gcd(a, n) > 1. Throws std::invalid_argument for even n.
int jacobi_symbol(i64 a, u64 n);

/// Unchecked Jacobi symbol on an already reduced residue (0 <= a < n, n odd).
int jacobi_reduced(u64 a, u64 n) noexcept;

/// Legendre symbol (a/p). Throws std::invalid_argument unless p is an odd
/// prime.
int legendre_symbol(i64 a, u64 p);

/// Euler's criterion a^((p-1)/2) mod p mapped to {-1, 0, 1}. No primality
/// check; p must be an odd prime.
int euler_criterion(u64 a, u64 p) noexcept;

/// Deterministic Miller-Rabin, exact on the full 64-bit range.
bool is_prime(u64 n) noexcept;

/// All primes <= limit in ascending order (segmented sieve).
std::vector<u64> sieve_primes(u64 limit);

/// Complete factorization: trial division, then Pollard-Brent rho with
/// certified prime cofactors.
Factorization factorize(u64 n);

/// b with b^2 = a (mod p) and 0 <= b <= (p-1)/2, 0 for a = 0, nullopt for a
/// non-residue. Throws std::invalid_argument unless p is an odd prime.
std::optional<u64> sqrt_mod_prime(u64 a, u64 p);

/// Least nonnegative b in [0, 4q) with b^2 = d (mod 4q), or nullopt when d
/// is not a square modulo 4q. Throws std::invalid_argument for q = 0 or
/// 4q >= 2^63.
std::optional<u64> sqrt_mod_4q(i64 d, u64 q);

/// Least nonnegative square root of a modulo an arbitrary m >= 1.
std::optional<u64> sqrt_mod(u64 a, u64 m);

/// Least nonnegative square root of a modulo m = prod p^e for a known
/// factorization of m.
std::optional<u64> sqrt_mod(u64 a, const Factorization& m);

/// floor(sqrt(n)).
u64 isqrt(u64 n) noexcept;

}  // namespace legendre
