#pragma once

// S_q(x, y): integers n <= x all of whose prime factors p satisfy p <= y,
// p = 1 (mod 8) and p coprime to q. The empty product 1 always belongs.

#include <functional>
#include <vector>

#include "legendre/arith.hpp"

namespace legendre {

struct SmoothSetSpec {
    u64 x = 1;
    u64 y = 2;
    u64 q = 1;  // coprimality modulus, 1 for the unrestricted set
};

/// Throws std::invalid_argument when x < 1, y < 1 or q < 1. S(x, 1) = {1}.
void validate(const SmoothSetSpec& spec);

/// Ascending primes p <= y with p = 1 (mod 8) not dividing q.
std::vector<u64> smooth_generators(const SmoothSetSpec& spec);

/// Calls visit(n) once for every element, in unspecified order.
void for_each_smooth(const SmoothSetSpec& spec, const std::function<void(u64)>& visit);

std::vector<u64> enumerate_smooth(const SmoothSetSpec& spec);

u64 count_smooth(const SmoothSetSpec& spec);

struct ScalingRow {
    u64 x;
    u64 y;
    double a;
    u64 count;
    double observed_exponent;  // log(count) / log(x)
    double theorem_exponent;   // 1 - 1/a
};

/// One row per (x, a) pair, x-major, with y = floor((log x)^a).
std::vector<ScalingRow> smoothness_scaling_table(const std::vector<u64>& x_values,
                                                 const std::vector<double>& a_values);

/// floor((ln n)^a) computed in extended precision.
u64 log_power_threshold(u64 n, double a);

}  // namespace legendre
