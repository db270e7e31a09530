#include "doctest.h"

#include <cmath>
#include <random>

#include "legendre/smooth_numbers.hpp"
#include "oracles.hpp"

using namespace legendre;

TEST_CASE("enumerate_smooth") {
    CHECK(enumerate_smooth({100, 20, 1}) == std::vector<u64>{1, 17});
    CHECK(enumerate_smooth({100, 20, 17}) == std::vector<u64>{1});
    CHECK(enumerate_smooth({16, 1000, 1}) == std::vector<u64>{1});
    CHECK(enumerate_smooth({10'000, 40, 15}) == std::vector<u64>{1, 17, 289, 4913});
    CHECK_THROWS_AS(enumerate_smooth({0, 20, 1}), std::invalid_argument);
    CHECK(enumerate_smooth({10, 1, 1}) == std::vector<u64>{1});
    CHECK_THROWS_AS(enumerate_smooth({10, 0, 1}), std::invalid_argument);
}

TEST_CASE("count_smooth") {
    CHECK(count_smooth({100, 20, 1}) == 2);
    CHECK(oracle::smooth(10'000, 100, 1).size() == 22);
    CHECK(count_smooth({10'000, 100, 1}) == 22);
}

TEST_CASE("enumeration matches whole-range factorization") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 50; ++i) {
        const u64 x = 1 + rng() % 100'000;
        const u64 y = 2 + rng() % 2000;
        const u64 q = 1 + rng() % 5000;
        const SmoothSetSpec spec{x, y, q};
        const auto got = enumerate_smooth(spec);
        REQUIRE(got == oracle::smooth(x, y, q));
        REQUIRE(count_smooth(spec) == got.size());
    }
}

TEST_CASE("closure and multiplicative closure") {
    const SmoothSetSpec spec{1'000'000, 400, 3 * 17 * 97};
    const auto elems = enumerate_smooth(spec);
    for (u64 n : elems)
        for (const auto& pp : factorize(n).factors) {
            REQUIRE(pp.prime <= spec.y);
            REQUIRE(pp.prime % 8 == 1);
            REQUIRE(spec.q % pp.prime != 0);
        }
    const std::set<u64> members(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size() && i < 200; ++i)
        for (std::size_t j = i; j < elems.size() && elems[i] * elems[j] <= spec.x; ++j)
            REQUIRE(members.count(elems[i] * elems[j]) == 1);
}

TEST_CASE("count monotonicity") {
    u64 prev = 0;
    for (u64 x = 1; x <= 200'000; x = x * 3 + 1) {
        const u64 c = count_smooth({x, 500, 1});
        REQUIRE(c >= prev);
        prev = c;
    }
    prev = 0;
    for (u64 y = 2; y <= 3000; y += 97) {
        const u64 c = count_smooth({100'000, y, 1});
        REQUIRE(c >= prev);
        prev = c;
    }
    // adding prime factors = 1 (mod 8) below y to q only removes elements
    u64 q = 1;
    prev = count_smooth({100'000, 300, q});
    for (u64 p : {17ull, 41ull, 73ull, 89ull}) {
        q *= p;
        const u64 c = count_smooth({100'000, 300, q});
        REQUIRE(c <= prev);
        prev = c;
    }
}

TEST_CASE("scaling table") {
    CHECK(smoothness_scaling_table({}, {2.0, 3.0}).empty());
    const auto table = smoothness_scaling_table({1000, 10'000, 100'000}, {2.0, 3.0});
    CHECK(table.size() == 6);
    CHECK(table[1].x == 1000);
    CHECK(table[1].a == 3.0);

    // (log 100)^a = 20
    const double a = std::log(20.0) / std::log(std::log(100.0));
    const auto row = smoothness_scaling_table({100}, {a}).front();
    CHECK(row.count == 2);
    CHECK(row.observed_exponent == doctest::Approx(std::log(2.0) / std::log(100.0)));
    CHECK(row.observed_exponent == doctest::Approx(0.1505).epsilon(1e-3));
    CHECK(row.theorem_exponent == doctest::Approx(1.0 - 1.0 / a));
}

TEST_CASE("log_power_threshold") {
    CHECK(log_power_threshold(15, 3.0) == 19);
    CHECK(log_power_threshold(1, 3.0) == 0);
    CHECK(log_power_threshold(100'000, 3.0) == 1526);
}
