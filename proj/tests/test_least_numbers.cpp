#include "doctest.h"

#include <cmath>

#include "legendre/least_numbers.hpp"
#include "legendre/smooth_numbers.hpp"
#include "oracles.hpp"

using namespace legendre;

namespace {

SignVector sv(std::initializer_list<int> bits) {
    SignVector v{0, static_cast<unsigned>(bits.size())};
    unsigned i = 0;
    for (int b : bits) v.bits |= static_cast<u64>(b) << i++;
    return v;
}

SearchOptions with_cap(u64 cap) {
    SearchOptions o;
    o.cap = cap;
    return o;
}

std::vector<u64> odd_squarefree_upto(u64 limit) {
    std::vector<u64> out;
    for (u64 q = 3; q <= limit; q += 2)
        if (oracle::squarefree(q)) out.push_back(q);
    return out;
}

}  // namespace

TEST_CASE("least_n_for_sign") {
    const auto cap = with_cap(100);
    CHECK(least_n_for_sign(SquarefreeModulus(3), sv({0}), cap) == 1);
    CHECK(least_n_for_sign(SquarefreeModulus(3), sv({1}), cap) == 17);
    CHECK(least_n_for_sign(SquarefreeModulus(15), sv({0, 1}), cap) == 73);
    CHECK(least_n_for_sign(SquarefreeModulus(15), sv({0, 1}), with_cap(72)) == std::nullopt);
    CHECK_THROWS_AS(least_n_for_sign(SquarefreeModulus(15), sv({1}), cap), std::invalid_argument);
}

TEST_CASE("compute_n_q golden values") {
    CHECK(compute_n_q(SquarefreeModulus(3)).value == 17);
    CHECK(compute_n_q(SquarefreeModulus(5)).value == 17);
    CHECK(compute_n_q(SquarefreeModulus(7)).value == 17);
    const auto r15 = compute_n_q(SquarefreeModulus(15));
    CHECK(r15.value == 73);
    // witnesses indexed by sign pattern: 00, 10, 01, 11
    CHECK(r15.sign_witnesses == std::vector<std::optional<u64>>{1, 41, 73, 17});
    CHECK(compute_n_q(SquarefreeModulus(105)).value == 281);

    const auto capped = compute_n_q(SquarefreeModulus(15), with_cap(72));
    CHECK(capped.exceeded());

    SearchOptions narrow;
    narrow.max_dimension = 2;
    CHECK_THROWS_AS(compute_n_q(SquarefreeModulus(105), narrow), std::invalid_argument);
}

TEST_CASE("compute_g golden values") {
    CHECK(compute_g(SquarefreeModulus(3)).value == 17);
    const auto g15 = compute_g(SquarefreeModulus(15));
    CHECK(g15.value == 41);
    CHECK(g15.basis_witnesses == std::vector<u64>{17, 41});
    CHECK(g15.quantity == Quantity::GQ);
    const auto g21 = compute_g(SquarefreeModulus(21), 5);
    CHECK(g21.value == 73);
    CHECK(g21.quantity == Quantity::GQR);
    CHECK(compute_g(SquarefreeModulus(21), 105).value == 73);
    CHECK(compute_g(SquarefreeModulus(1)).value == 1);
    CHECK(compute_g(SquarefreeModulus(15), 1, with_cap(40)).exceeded());
}

TEST_CASE("n_q and g_q agree with the definitional scans") {
    for (u64 q : odd_squarefree_upto(600)) {
        const SquarefreeModulus mod(q);
        REQUIRE(compute_n_q(mod).value == oracle::n_q(q, 10'000'000));
        REQUIRE(compute_g(mod).value == oracle::g(q, 1, 10'000'000));
    }
    // congruence switched off
    SearchOptions off;
    off.residue = ResidueClass::any();
    for (u64 q : odd_squarefree_upto(200)) {
        REQUIRE(compute_n_q(SquarefreeModulus(q), off).value == oracle::n_q(q, 1'000'000, false));
        REQUIRE(compute_g(SquarefreeModulus(q), 1, off).value == oracle::g(q, 1, 1'000'000, false));
    }
    // The least non-residue of a prime p = 3 (mod 8) without the congruence: n_3 = 2.
    CHECK(compute_n_q(SquarefreeModulus(3), off).value == 2);
}

TEST_CASE("witnesses recompute") {
    for (u64 q : {15ull, 105ull, 1155ull}) {
        const SquarefreeModulus mod(q);
        const auto n = compute_n_q(mod);
        REQUIRE(n.value);
        u64 max_w = 0;
        for (u64 t = 0; t < n.sign_witnesses.size(); ++t) {
            REQUIRE(n.sign_witnesses[t]);
            REQUIRE(theta(*n.sign_witnesses[t], mod).bits == t);
            REQUIRE(least_n_for_sign(mod, {t, mod.k()}) == n.sign_witnesses[t]);
            max_w = std::max(max_w, *n.sign_witnesses[t]);
        }
        REQUIRE(max_w == *n.value);

        const auto g = compute_g(mod);
        Gf2Span span(mod.k());
        for (u64 w : g.basis_witnesses) REQUIRE(span.insert(theta(w, mod)));
        REQUIRE(span.is_full());
        REQUIRE(g.basis_witnesses.back() == *g.value);
    }
}

TEST_CASE("classify") {
    const auto e = classify(SquarefreeModulus(15), 40);
    CHECK(e.status == Status::Exceptional);
    CHECK(e.g_q == 41);
    CHECK(e.divisor_g == std::vector<DivisorG>{{3, 17}, {5, 17}});

    CHECK(classify(SquarefreeModulus(15), 41).status == Status::Good);

    const auto inel = classify(SquarefreeModulus(105), 72);
    CHECK(inel.status == Status::Ineligible);
    CHECK(inel.offending_divisor == 21);

    // primes have no proper divisors and are never ineligible
    CHECK(classify(SquarefreeModulus(17), 1).status == Status::Exceptional);
    CHECK(classify(SquarefreeModulus(3), 17).status == Status::Good);

    // a cap below y cannot decide "> y"
    CHECK(classify(SquarefreeModulus(15), 100, with_cap(30)).status == Status::Inconclusive);
    // a cap at or above y can
    CHECK(classify(SquarefreeModulus(15), 30, with_cap(30)).status == Status::Exceptional);
    CHECK_THROWS_AS(classify(SquarefreeModulus(1), 10), std::invalid_argument);
}

TEST_CASE("classify agrees with the definitional oracle") {
    for (u64 q : odd_squarefree_upto(400)) {
        for (u64 y : {16ull, 17ull, 40ull, 73ull, 100ull, 200ull}) {
            u64 off = 0;
            const auto want = oracle::classify(q, y, 1'000'000, &off);
            const auto got = classify(SquarefreeModulus(q), y);
            const Status expect = want == oracle::Kind::Good ? Status::Good
                                  : want == oracle::Kind::Exceptional ? Status::Exceptional
                                                                      : Status::Ineligible;
            REQUIRE(got.status == expect);
            if (expect == Status::Ineligible) REQUIRE(got.offending_divisor == off);
        }
    }
}

TEST_CASE("g is monotone in the extra coprimality modulus") {
    for (u64 q : odd_squarefree_upto(500)) {
        const SquarefreeModulus mod(q);
        for (u64 r : {3ull, 5ull, 7ull, 11ull, 13ull}) {
            for (u64 s : {1ull, 3ull, 5ull, 7ull, 17ull}) {
                // r | r * s
                const auto g_r = compute_g(mod, r).value;
                const auto g_rs = compute_g(mod, r * s).value;
                REQUIRE(g_r);
                REQUIRE(g_rs);
                REQUIRE(*g_r <= *g_rs);
            }
        }
    }
}

TEST_CASE("g_d <= g_q for divisors d of q") {
    for (u64 q : odd_squarefree_upto(3000)) {
        const SquarefreeModulus mod(q);
        const u64 gq = *compute_g(mod).value;
        const u64 full = (u64{1} << mod.k()) - 1;
        for (u64 mask = 1; mask < full; ++mask) {
            const auto d = mod.divisor(mask);
            REQUIRE(*compute_g(d).value <= gq);
            REQUIRE(*compute_g(d, q).value <= gq);
        }
    }
}

TEST_CASE("generation lemma") {
    CHECK(check_generation_lemma(SquarefreeModulus(15)) == true);
    CHECK(check_generation_lemma(SquarefreeModulus(3)) == true);
    CHECK(check_generation_lemma(SquarefreeModulus(105)) == true);
    CHECK(check_generation_lemma(SquarefreeModulus(105), with_cap(100)) == std::nullopt);
}

TEST_CASE("subspace lemma") {
    CHECK(check_subspace_lemma(SquarefreeModulus(15), 10'000, 40));
    // S_q(x, y) = {1}
    CHECK(check_subspace_lemma(SquarefreeModulus(17), 16, 2));
    CHECK_THROWS_AS(check_subspace_lemma(SquarefreeModulus(15), 10'000, 41), ContractViolation);
    CHECK_THROWS_AS(check_subspace_lemma(SquarefreeModulus(105), 10'000, 72), ContractViolation);

    // Every exceptional q up to 3000 at a handful of thresholds.
    std::size_t checked = 0;
    for (u64 q : odd_squarefree_upto(3000)) {
        for (u64 y : {20ull, 50ull, 120ull}) {
            if (classify(SquarefreeModulus(q), y).status != Status::Exceptional) continue;
            ++checked;
            REQUIRE(check_subspace_lemma(SquarefreeModulus(q), 100'000, y));
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("exceptional divisor descent") {
    const auto d = find_exceptional_divisor(SquarefreeModulus(105), 72);
    REQUIRE_FALSE(d.chain.empty());
    CHECK(d.chain.front().divisor == 21);
    CHECK(d.chain.front().parent == 105);
    CHECK(*compute_g(SquarefreeModulus(21), 105).value > 72);
    CHECK(classify(SquarefreeModulus(d.endpoint), d.threshold).status == Status::Exceptional);
    CHECK(105 % d.endpoint == 0);

    CHECK_THROWS_AS(find_exceptional_divisor(SquarefreeModulus(17), 5), ContractViolation);
    CHECK_THROWS_AS(find_exceptional_divisor(SquarefreeModulus(15), 40), ContractViolation);

    for (u64 q : odd_squarefree_upto(3000)) {
        for (u64 y : {17ull, 40ull, 100ull}) {
            const SquarefreeModulus mod(q);
            const auto s = classify(mod, y);
            if (s.status != Status::Ineligible) continue;
            REQUIRE(*compute_g(SquarefreeModulus(*s.offending_divisor), q).value > y);
            const auto r = find_exceptional_divisor(mod, y);
            REQUIRE(q % r.endpoint == 0);
            REQUIRE(r.endpoint < q);
            REQUIRE(r.threshold <= y);
            REQUIRE(classify(SquarefreeModulus(r.endpoint), r.threshold).status == Status::Exceptional);
        }
    }
}

TEST_CASE("log-threshold descent reaches a (log d)^a-exceptional divisor") {
    std::size_t found = 0;
    // Small a keeps the prime-size hypothesis satisfiable at desk scale.
    const double a = 1.5;
    for (u64 q : odd_squarefree_upto(50'000)) {
        const SquarefreeModulus mod(q);
        const u64 y = log_power_threshold(q, a);
        // hypothesis: every prime factor is at least 2 (log q)^a
        if (static_cast<double>(mod.primes().front()) < 2.0 * std::pow(std::log(q), a)) continue;
        if (classify(mod, y).status != Status::Ineligible) continue;
        ++found;
        const auto r = find_log_exceptional_divisor(mod, a);
        REQUIRE(q % r.endpoint == 0);
        REQUIRE(r.threshold == log_power_threshold(r.endpoint, a));
        REQUIRE(classify(SquarefreeModulus(r.endpoint), r.threshold).status == Status::Exceptional);
    }
    MESSAGE("ineligible q meeting the prime-size hypothesis: " << found);
    CHECK(found > 0);
}

TEST_CASE("census_record") {
    const auto rec = census_record(SquarefreeModulus(15), 3.0);
    CHECK(rec.y == 19);
    CHECK(rec.omega == 2);
    CHECK(rec.status.status == Status::Exceptional);
    CHECK(rec.n_q == 73);
}
