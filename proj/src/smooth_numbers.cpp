#include "legendre/smooth_numbers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace legendre {

void validate(const SmoothSetSpec& spec) {
    if (spec.x < 1 || spec.y < 1 || spec.q < 1)
        throw std::invalid_argument("smooth set needs x >= 1, y >= 1, q >= 1");
}

std::vector<u64> smooth_generators(const SmoothSetSpec& spec) {
    validate(spec);
    std::vector<u64> gens;
    // Generators above x never occur in an element.
    for (u64 p : sieve_primes(std::min(spec.y, spec.x)))
        if (p % 8 == 1 && spec.q % p != 0) gens.push_back(p);
    return gens;
}

namespace {

// Depth-first over generators with index >= from; `n` is the running product.
template <class Visit>
void walk(const std::vector<u64>& gens, std::size_t from, u64 n, u64 x, Visit& visit) {
    visit(n);
    for (std::size_t i = from; i < gens.size(); ++i) {
        if (gens[i] > x / n) break;
        walk(gens, i, n * gens[i], x, visit);
    }
}

}  // namespace

void for_each_smooth(const SmoothSetSpec& spec, const std::function<void(u64)>& visit) {
    const auto gens = smooth_generators(spec);
    walk(gens, 0, 1, spec.x, visit);
}

std::vector<u64> enumerate_smooth(const SmoothSetSpec& spec) {
    std::vector<u64> out;
    const auto gens = smooth_generators(spec);
    auto push = [&](u64 n) { out.push_back(n); };
    walk(gens, 0, 1, spec.x, push);
    std::sort(out.begin(), out.end());
    return out;
}

u64 count_smooth(const SmoothSetSpec& spec) {
    u64 count = 0;
    const auto gens = smooth_generators(spec);
    auto tally = [&](u64) { ++count; };
    walk(gens, 0, 1, spec.x, tally);
    return count;
}

u64 log_power_threshold(u64 n, double a) {
    if (n < 2) return 0;
    const long double v = std::pow(std::log(static_cast<long double>(n)), static_cast<long double>(a));
    return static_cast<u64>(std::floor(v));
}

std::vector<ScalingRow> smoothness_scaling_table(const std::vector<u64>& x_values,
                                                 const std::vector<double>& a_values) {
    std::vector<ScalingRow> rows;
    rows.reserve(x_values.size() * a_values.size());
    for (u64 x : x_values) {
        if (x < 2) throw std::invalid_argument("scaling table needs x >= 2");
        for (double a : a_values) {
            const u64 y = std::max<u64>(2, log_power_threshold(x, a));
            const u64 count = count_smooth({x, y, 1});
            rows.push_back({x, y, a, count,
                            std::log(static_cast<double>(count)) / std::log(static_cast<double>(x)),
                            1.0 - 1.0 / a});
        }
    }
    return rows;
}

}  // namespace legendre
