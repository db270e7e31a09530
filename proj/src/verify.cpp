#include "legendre/verify.hpp"

#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "legendre/census.hpp"
#include "legendre/quadratic_forms.hpp"

namespace legendre {

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"generation", "subspace", "descent", "forms",
                                                "oracle-equivalence"};
    return names;
}

namespace {

std::string format_double(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

bool odd_squarefree(u64 q) { return (q & 1) && factorize(q).squarefree(); }

SuiteReport generation_suite(const SuiteOptions& opts) {
    SuiteReport rep{"generation", 0, {}, {}, false};
    const u64 limit = opts.limit ? opts.limit : 3000;
    for (u64 q = 3; q <= limit; q += 2) {
        if (!odd_squarefree(q)) continue;
        const SquarefreeModulus mod(q);
        if (mod.k() > 3) continue;
        ++rep.cases;
        const auto ok = check_generation_lemma(mod);
        if (!ok)
            rep.counterexamples.push_back("q=" + std::to_string(q) + ": inconclusive (cap)");
        else if (!*ok)
            rep.counterexamples.push_back("q=" + std::to_string(q) + ": n_q > g_q^k or g_q > n_q");
    }
    return rep;
}

SuiteReport subspace_suite(const SuiteOptions& opts) {
    SuiteReport rep{"subspace", 0, {}, {}, false};
    const u64 limit = opts.limit ? opts.limit : 100'000;
    constexpr u64 x = 1'000'000;
    for (double a : {2.0, 3.0}) {
        CensusOptions copts;
        copts.a = a;
        copts.workers = opts.workers;
        const auto census = exceptional_census(3, limit, copts);
        u64 exceptional = 0;
        for (const auto& rec : census.records) {
            if (rec.status.status != Status::Exceptional) continue;
            ++exceptional;
            ++rep.cases;
            if (!check_subspace_lemma(SquarefreeModulus(rec.q), x, rec.y))
                rep.counterexamples.push_back("q=" + std::to_string(rec.q) + " a=" + format_double(a) +
                                              ": an element of S_q(x, y) has Jacobi symbol -1");
        }
        rep.notes.push_back("a=" + format_double(a) + ": " + std::to_string(exceptional) +
                            " exceptional q <= " + std::to_string(limit));
    }
    rep.vacuous = rep.cases == 0;
    return rep;
}

SuiteReport descent_suite(const SuiteOptions& opts) {
    SuiteReport rep{"descent", 0, {}, {}, false};
    const u64 limit = opts.limit ? opts.limit : 20'000;
    for (double a : {2.0, 3.0}) {
        CensusOptions copts;
        copts.a = a;
        copts.workers = opts.workers;
        const auto census = exceptional_census(3, limit, copts);
        for (const auto& rec : census.records) {
            if (rec.status.status != Status::Ineligible) continue;
            ++rep.cases;
            const SquarefreeModulus q(rec.q);
            const auto descent = find_exceptional_divisor(q, rec.y);
            const u64 p = q.primes().front();
            const auto end = classify(SquarefreeModulus(descent.endpoint), descent.threshold);
            const bool proper = descent.endpoint != rec.q && rec.q % descent.endpoint == 0;
            const bool threshold_ok =
                descent.threshold == rec.y || descent.threshold == std::min(rec.y, p - 1);
            if (end.status != Status::Exceptional || !proper || !threshold_ok)
                rep.counterexamples.push_back("q=" + std::to_string(rec.q) + " y=" + std::to_string(rec.y) +
                                              ": endpoint " + std::to_string(descent.endpoint) + " is " +
                                              to_string(end.status) + " at " +
                                              std::to_string(descent.threshold));
        }
    }
    rep.vacuous = rep.cases == 0;
    return rep;
}

SuiteReport forms_suite(const SuiteOptions& opts) {
    SuiteReport rep{"forms", 0, {}, {}, false};
    std::mt19937_64 rng(opts.seed);
    const u64 count = opts.limit ? opts.limit : 10'000;
    auto uniform = [&](i64 lo, i64 hi) { return std::uniform_int_distribution<i64>(lo, hi)(rng); };
    constexpr i64 kBound = 10'000;
    for (u64 i = 0; i < count;) {
        const i64 A = uniform(1, kBound);
        const i64 B = uniform(-kBound, kBound);
        const i64 c_min = (B * B) / (4 * A) + 1;
        if (c_min > kBound) continue;
        const BinaryQuadraticForm f{A, B, uniform(c_min, kBound)};
        ++i;
        ++rep.cases;
        const auto red = reduce_form(f);
        bool ok = red.form.is_reduced() && red.form.discriminant() == f.discriminant() &&
                  red.transform.determinant() == 1 && substitute(f, red.transform) == red.form;
        for (int s = 0; s < 10 && ok; ++s) {
            const i64 x = uniform(-1000, 1000), y = uniform(-1000, 1000);
            const auto [tx, ty] = red.transform.apply(x, y);
            ok = evaluate_form(red.form, x, y) == evaluate_form(f, tx, ty);
        }
        if (!ok)
            rep.counterexamples.push_back("reduce (" + std::to_string(f.A) + "," + std::to_string(f.B) +
                                          "," + std::to_string(f.C) + ")");
    }
    for (u64 i = 0; i < 200;) {
        const u64 q = static_cast<u64>(uniform(1, 100'000));
        const u64 d = static_cast<u64>(uniform(1, 10'000));
        if (!is_representable(q, -static_cast<i64>(d))) continue;
        ++i;
        ++rep.cases;
        const auto as = almost_square_decomposition(q, d);
        const auto& r = as.source;
        const bool ok = evaluate_form(r.form, r.x, r.y) == static_cast<i64>(q) &&
                        std::gcd(r.x, r.y) == 1 && r.form.is_reduced() &&
                        r.form.discriminant() == -static_cast<i64>(d) &&
                        static_cast<i128>(as.u) * q == static_cast<i128>(as.X) * as.X +
                                                           static_cast<i128>(as.v) * as.Y * as.Y;
        if (!ok)
            rep.counterexamples.push_back("represent q=" + std::to_string(q) + " d=" + std::to_string(d));
    }
    return rep;
}

SuiteReport oracle_suite(const SuiteOptions& opts) {
    SuiteReport rep{"oracle-equivalence", 0, {}, {}, false};
    const u64 limit = opts.limit ? opts.limit : 500;
    for (u64 q = 1; q <= limit; ++q) {
        const u64 m = 4 * q;
        std::vector<char> square(m, 0);
        for (u64 b = 0; b < m; ++b) square[b * b % m] = 1;
        for (i64 d = -200; d <= 200; ++d) {
            ++rep.cases;
            if (is_representable(q, d) != static_cast<bool>(square[reduce_signed(d, m)]))
                rep.counterexamples.push_back("q=" + std::to_string(q) + " d=" + std::to_string(d));
        }
    }
    return rep;
}

}  // namespace

SuiteReport run_suite(std::string_view name, const SuiteOptions& opts) {
    if (name == "generation") return generation_suite(opts);
    if (name == "subspace") return subspace_suite(opts);
    if (name == "descent") return descent_suite(opts);
    if (name == "forms") return forms_suite(opts);
    if (name == "oracle-equivalence") return oracle_suite(opts);
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace legendre
