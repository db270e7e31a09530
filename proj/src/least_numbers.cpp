#include "legendre/least_numbers.hpp"

#include <algorithm>

#include "legendre/smooth_numbers.hpp"

namespace legendre {

std::string to_string(Status s) {
    switch (s) {
        case Status::Good: return "good";
        case Status::Exceptional: return "exceptional";
        case Status::Ineligible: return "ineligible";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::optional<u64> least_n_for_sign(const SquarefreeModulus& q, SignVector target,
                                    const SearchOptions& opts) {
    if (target.k != q.k())
        throw std::invalid_argument("least_n_for_sign: target dimension " + std::to_string(target.k) +
                                    " != omega(q) = " + std::to_string(q.k()));
    AdmissibleStream stream(opts.cap, q, 1, opts.residue);
    while (auto n = stream.next())
        if (theta_unchecked(*n, q) == target) return n;
    return std::nullopt;
}

LeastNumberResult compute_n_q(const SquarefreeModulus& q, const SearchOptions& opts) {
    if (q.k() > opts.max_dimension)
        throw std::invalid_argument("compute_n_q: omega(q) = " + std::to_string(q.k()) +
                                    " exceeds the dimension limit " +
                                    std::to_string(opts.max_dimension));
    LeastNumberResult result{Quantity::NQ, std::nullopt, opts.cap, {}, {}};
    const u64 patterns = u64{1} << q.k();
    result.sign_witnesses.assign(patterns, std::nullopt);
    u64 seen = 0;
    AdmissibleStream stream(opts.cap, q, 1, opts.residue);
    while (auto n = stream.next()) {
        auto& slot = result.sign_witnesses[theta_unchecked(*n, q).bits];
        if (slot) continue;
        slot = *n;
        if (++seen == patterns) {
            result.value = *n;
            break;
        }
    }
    return result;
}

LeastNumberResult compute_g(const SquarefreeModulus& q, u64 extra, const SearchOptions& opts) {
    LeastNumberResult result{extra == 1 ? Quantity::GQ : Quantity::GQR, std::nullopt, opts.cap, {}, {}};
    if (q.k() == 0) {
        // The zero space is spanned by the empty set; y = 1 is the least bound.
        result.value = 1;
        return result;
    }
    Gf2Span span(q.k());
    AdmissibleStream stream(opts.cap, q, extra, opts.residue);
    while (auto n = stream.next()) {
        if (!span.insert(theta_unchecked(*n, q))) continue;
        result.basis_witnesses.push_back(*n);
        if (span.is_full()) {
            result.value = *n;
            break;
        }
    }
    return result;
}

namespace {

bool exceeds(const std::optional<u64>& g, u64 y) { return !g || *g > y; }

}  // namespace

EligibilityStatus classify(const SquarefreeModulus& q, u64 y, const SearchOptions& opts) {
    if (q.k() == 0) throw std::invalid_argument("classify: q must have a prime factor");
    if (q.k() > opts.max_dimension)
        throw std::invalid_argument("classify: omega(q) exceeds the dimension limit");
    EligibilityStatus out;
    out.y = y;
    // A value above the cap only decides "> y" when the cap covers y.
    const bool decisive_cap = opts.cap >= y;
    bool inconclusive = false;

    const u64 full = (u64{1} << q.k()) - 1;
    for (u64 mask = 1; mask < full; ++mask) {
        const SquarefreeModulus d = q.divisor(mask);
        out.divisor_g.push_back({d.value(), compute_g(d, q.value(), opts).value});
    }
    std::sort(out.divisor_g.begin(), out.divisor_g.end(),
              [](const DivisorG& l, const DivisorG& r) { return l.divisor < r.divisor; });

    for (const auto& dg : out.divisor_g) {
        if (!exceeds(dg.g, y)) continue;
        if (!dg.g && !decisive_cap) {
            inconclusive = true;
            continue;
        }
        out.offending_divisor = dg.divisor;
        break;
    }

    const LeastNumberResult g = compute_g(q, 1, opts);
    out.g_q = g.value;
    out.g_witnesses = g.basis_witnesses;

    if (out.offending_divisor)
        out.status = Status::Ineligible;
    else if (inconclusive || (!g.value && !decisive_cap))
        out.status = Status::Inconclusive;
    else
        out.status = exceeds(g.value, y) ? Status::Exceptional : Status::Good;
    return out;
}

std::optional<bool> check_generation_lemma(const SquarefreeModulus& q, const SearchOptions& opts) {
    const auto n = compute_n_q(q, opts);
    const auto g = compute_g(q, 1, opts);
    if (!n.value || !g.value) return std::nullopt;
    u128 bound = 1;
    for (unsigned i = 0; i < q.k() && bound <= *n.value; ++i) bound *= *g.value;
    return *n.value <= bound && *g.value <= *n.value;
}

bool check_subspace_lemma(const SquarefreeModulus& q, u64 x, u64 y, const SearchOptions& opts) {
    const auto status = classify(q, y, opts);
    if (status.status != Status::Exceptional)
        throw ContractViolation("check_subspace_lemma: " + std::to_string(q.value()) + " is " +
                                to_string(status.status) + " at y = " + std::to_string(y) +
                                ", not exceptional");
    bool holds = true;
    for_each_smooth({x, y, q.value()}, [&](u64 n) {
        if (jacobi_reduced(n % q.value(), q.value()) != 1) holds = false;
    });
    return holds;
}

namespace {

EligibilityStatus classify_or_throw(const SquarefreeModulus& q, u64 y, const SearchOptions& opts) {
    auto s = classify(q, y, opts);
    if (s.status == Status::Inconclusive)
        throw CapExceeded("classification of " + std::to_string(q.value()) + " at y = " +
                          std::to_string(y) + " hit the search cap");
    return s;
}

}  // namespace

DescentResult find_exceptional_divisor(const SquarefreeModulus& q, u64 y, const SearchOptions& opts) {
    const auto top = classify_or_throw(q, y, opts);
    if (top.status != Status::Ineligible)
        throw ContractViolation("find_exceptional_divisor: " + std::to_string(q.value()) + " is " +
                                to_string(top.status) + " at y = " + std::to_string(y));
    const u64 p = q.primes().front();

    DescentResult out;
    const SquarefreeModulus d0(*top.offending_divisor);
    out.chain.push_back({d0.value(), q.value(), y});
    const auto at_y = classify_or_throw(d0, y, opts);
    if (at_y.status != Status::Good || p - 1 >= y) {
        out.endpoint = d0.value();
        out.threshold = y;
        return out;
    }
    // g_{d0} <= y but g_{d0,q} > y: the missing generators are multiples of
    // primes >= p, so d0 cannot span below p.
    const u64 t = p - 1;
    const auto at_t = classify_or_throw(d0, t, opts);
    if (at_t.status == Status::Ineligible) {
        out.chain.push_back({*at_t.offending_divisor, d0.value(), t});
        out.endpoint = *at_t.offending_divisor;
    } else {
        out.endpoint = d0.value();
    }
    out.threshold = t;
    return out;
}

DescentResult find_log_exceptional_divisor(const SquarefreeModulus& q, double a,
                                           const SearchOptions& opts) {
    DescentResult out;
    SquarefreeModulus current = q;
    u64 y = log_power_threshold(current.value(), a);
    auto status = classify_or_throw(current, y, opts);
    if (status.status != Status::Ineligible)
        throw ContractViolation("find_log_exceptional_divisor: " + std::to_string(q.value()) +
                                " is " + to_string(status.status) + " at y = " + std::to_string(y));
    while (status.status == Status::Ineligible) {
        const DescentResult step = find_exceptional_divisor(current, y, opts);
        out.chain.insert(out.chain.end(), step.chain.begin(), step.chain.end());
        current = SquarefreeModulus(step.endpoint);
        y = log_power_threshold(current.value(), a);
        status = classify_or_throw(current, y, opts);
    }
    out.endpoint = current.value();
    out.threshold = y;
    return out;
}

CensusRecord census_record(const SquarefreeModulus& q, double a, const SearchOptions& opts) {
    CensusRecord rec{q.value(), a, log_power_threshold(q.value(), a), q.k(), {}, std::nullopt};
    rec.status = classify(q, rec.y, opts);
    rec.n_q = compute_n_q(q, opts).value;
    return rec;
}

}  // namespace legendre
