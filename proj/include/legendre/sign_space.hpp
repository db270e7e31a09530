#pragma once

// Sign vectors over F_2: theta_q maps n to the non-residue indicators of n at
// the primes of q, and Gf2Span tracks the span of such vectors.

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "legendre/arith.hpp"

namespace legendre {

/// An odd square-free q >= 1 together with its ascending prime factors.
class SquarefreeModulus {
public:
    /// Factors and validates q. Throws std::invalid_argument if q is even or
    /// not square-free.
    explicit SquarefreeModulus(u64 q);

    /// Builds the divisor made of the primes selected by `mask`.
    [[nodiscard]] SquarefreeModulus divisor(u64 mask) const;

    [[nodiscard]] u64 value() const noexcept { return value_; }
    [[nodiscard]] std::span<const u64> primes() const noexcept { return primes_; }
    [[nodiscard]] unsigned k() const noexcept { return static_cast<unsigned>(primes_.size()); }

private:
    SquarefreeModulus(u64 value, std::vector<u64> primes)
        : value_(value), primes_(std::move(primes)) {}

    u64 value_;
    std::vector<u64> primes_;
};

/// Element of F_2^k; bit i is set iff the underlying integer is a
/// non-residue modulo the i-th prime.
struct SignVector {
    u64 bits = 0;
    unsigned k = 0;

    [[nodiscard]] bool bit(unsigned i) const noexcept { return (bits >> i) & 1; }
    [[nodiscard]] bool is_zero() const noexcept { return bits == 0; }

    friend SignVector operator^(SignVector a, SignVector b) {
        return {a.bits ^ b.bits, a.k};
    }
    friend bool operator==(const SignVector&, const SignVector&) = default;
};

inline constexpr unsigned kMaxDimension = 64;

/// Renders as a string of 0/1 characters, prime index 0 first.
std::string to_string(const SignVector& v);

/// theta_q(n). Throws std::domain_error when gcd(n, q) > 1.
SignVector theta(u64 n, const SquarefreeModulus& q);

/// Same map without the gcd check; a prime dividing n contributes a 0 bit.
SignVector theta_unchecked(u64 n, const SquarefreeModulus& q) noexcept;

/// n = residue (mod modulus). Modulus 1 accepts every integer.
struct ResidueClass {
    u64 modulus = 8;
    u64 residue = 1;

    [[nodiscard]] bool contains(u64 n) const noexcept { return n % modulus == residue % modulus; }

    static constexpr ResidueClass mod8() { return {8, 1}; }
    static constexpr ResidueClass any() { return {1, 0}; }
};

/// Streams the admissible integers
///   { n in [1, y] : gcd(n, q * extra) = 1, n in residue_class }
/// in ascending order without materializing them.
class AdmissibleStream {
public:
    AdmissibleStream(u64 y, const SquarefreeModulus& q, u64 extra = 1,
                     ResidueClass residue_class = ResidueClass::mod8());

    std::optional<u64> next();

private:
    u64 y_;
    u64 next_;
    u64 step_;
    std::vector<u64> excluded_;
};

/// Materialized form of AdmissibleStream. Throws std::length_error past
/// 10^7 elements.
std::vector<u64> enumerate_admissible(u64 y, const SquarefreeModulus& q, u64 extra = 1,
                                      ResidueClass residue_class = ResidueClass::mod8());

/// Incremental row-echelon basis of a subspace of F_2^k.
class Gf2Span {
public:
    explicit Gf2Span(unsigned k);

    /// Inserts v; returns true iff v was outside the span (rank grew).
    /// Throws std::invalid_argument on a dimension mismatch.
    bool insert(SignVector v);

    /// Reduces v against the basis; zero iff v is in the span.
    [[nodiscard]] SignVector reduce(SignVector v) const noexcept;
    [[nodiscard]] bool contains(SignVector v) const noexcept { return reduce(v).is_zero(); }

    /// Inserts every basis vector of other.
    void merge(const Gf2Span& other);

    [[nodiscard]] unsigned rank() const noexcept { return rank_; }
    [[nodiscard]] unsigned k() const noexcept { return k_; }
    [[nodiscard]] bool is_full() const noexcept { return rank_ == k_; }

    /// Basis vectors ordered by strictly decreasing leading bit.
    [[nodiscard]] std::vector<SignVector> basis() const;

private:
    unsigned k_;
    unsigned rank_ = 0;
    // pivot_[b] has leading bit b, or is zero when b is not a pivot.
    std::array<u64, kMaxDimension> pivot_{};
};

}  // namespace legendre
