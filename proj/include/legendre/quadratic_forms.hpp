#pragma once

// Positive-definite binary quadratic forms: discriminant representability,
// least discriminants, Gauss reduction and explicit proper representations.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "legendre/arith.hpp"

namespace legendre {

struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

/// A x^2 + B x y + C y^2.
struct BinaryQuadraticForm {
    i64 A = 0;
    i64 B = 0;
    i64 C = 0;

    /// B^2 - 4AC; throws OverflowError outside 64 bits.
    [[nodiscard]] i64 discriminant() const;
    [[nodiscard]] bool is_positive_definite() const;
    /// |B| <= A <= C with B >= 0 whenever |B| = A or A = C.
    [[nodiscard]] bool is_reduced() const noexcept;

    friend bool operator==(const BinaryQuadraticForm&, const BinaryQuadraticForm&) = default;
};

/// Integer substitution (x, y) -> (alpha x + beta y, gamma x + delta y) with
/// determinant alpha delta - beta gamma = 1.
struct UnimodularTransform {
    i64 alpha = 1;
    i64 beta = 0;
    i64 gamma = 0;
    i64 delta = 1;

    [[nodiscard]] i64 determinant() const noexcept { return alpha * delta - beta * gamma; }
    [[nodiscard]] std::pair<i64, i64> apply(i64 x, i64 y) const;
    [[nodiscard]] UnimodularTransform inverse() const noexcept { return {delta, -beta, -gamma, alpha}; }

    friend bool operator==(const UnimodularTransform&, const UnimodularTransform&) = default;
};

/// f(x, y), throwing OverflowError if the value leaves 64 bits.
i64 evaluate_form(const BinaryQuadraticForm& f, i64 x, i64 y);

/// The form g(x, y) = f(T(x, y)).
BinaryQuadraticForm substitute(const BinaryQuadraticForm& f, const UnimodularTransform& t);

struct Reduction {
    BinaryQuadraticForm form;
    UnimodularTransform transform;  // form(x, y) = input(transform(x, y))
};

/// Throws std::invalid_argument unless A > 0 and B^2 - 4AC < 0.
Reduction reduce_form(const BinaryQuadraticForm& f);

/// Whether q is properly represented by some form of discriminant d, i.e.
/// whether d is a square modulo 4q. Works for either sign of d.
bool is_representable(u64 q, i64 d);

struct Representation {
    u64 q;
    u64 d;
    BinaryQuadraticForm form;  // reduced, discriminant -d
    i64 x;
    i64 y;
};

struct NotRepresentable : std::domain_error {
    using std::domain_error::domain_error;
};

/// Proper representation q = form(x, y) with gcd(x, y) = 1 by the reduced
/// form of discriminant -d. Throws NotRepresentable when -d is not a square
/// modulo 4q.
Representation represent(u64 q, u64 d);

/// u q = X^2 + v Y^2 with u = 4A, v = d, X = 2Ax + By, Y = y.
struct AlmostSquare {
    u64 q;
    i64 u;
    i64 v;
    i64 X;
    i64 Y;
    Representation source;
};

AlmostSquare almost_square_decomposition(u64 q, u64 d);

struct ConstructiveDiscriminant {
    u64 p0;  // least prime = 7 (mod 8) not dividing q
    u64 d0;  // = 1 (mod 8), coprime to q, with prescribed symbols
    u64 d;   // d0 * p0
};

struct DiscriminantResult {
    u64 q;
    u64 bound;
    std::optional<u64> least;  // direct scan; nullopt: none <= bound
    std::optional<ConstructiveDiscriminant> constructive;
    /// Why the constructive recipe produced nothing, when it did not.
    std::string constructive_failure;
};

/// Least d <= bound with -d a square modulo 4q, plus the discriminant built
/// from a prime p0 = 7 (mod 8) and a sign-prescribed d0 = 1 (mod 8) found
/// below cap. Throws std::invalid_argument for q < 2.
DiscriminantResult least_discriminant(u64 q, u64 bound, u64 cap = 10'000'000);

}  // namespace legendre
