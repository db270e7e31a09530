#include "legendre/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <ostream>
#include <thread>

#include "legendre/smooth_numbers.hpp"

namespace legendre {

namespace {

struct ChunkOutput {
    std::vector<CensusRecord> records;
    u64 skipped = 0;
};

ChunkOutput census_chunk(u64 lo, u64 hi, const CensusOptions& opts) {
    ChunkOutput out;
    for (u64 q = lo;; ++q) {
        if (q <= 2 || (q & 1) == 0) {
            ++out.skipped;
        } else {
            const Factorization f = factorize(q);
            if (!f.squarefree())
                ++out.skipped;
            else
                out.records.push_back(census_record(SquarefreeModulus(q), opts.a, opts.search));
        }
        if (q == hi) break;
    }
    return out;
}

}  // namespace

CensusResult exceptional_census(u64 lo, u64 hi, const CensusOptions& opts) {
    CensusResult result;
    if (lo > hi) return result;
    if (hi > kMaxInput) throw std::invalid_argument("census: range exceeds 63 bits");
    const u64 chunk = std::max<u64>(1, opts.chunk);
    const u64 n_chunks = (hi - lo) / chunk + 1;
    std::vector<ChunkOutput> outputs(n_chunks);
    std::atomic<u64> next{0};
    auto work = [&] {
        for (u64 i; (i = next.fetch_add(1)) < n_chunks;) {
            const u64 c_lo = lo + i * chunk;
            const u64 c_hi = (hi - c_lo < chunk) ? hi : c_lo + chunk - 1;
            outputs[i] = census_chunk(c_lo, c_hi, opts);
        }
    };
    const unsigned workers = std::max(1u, opts.workers);
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    for (auto& out : outputs) {
        result.summary.skipped += out.skipped;
        for (auto& rec : out.records) {
            switch (rec.status.status) {
                case Status::Good: ++result.summary.good; break;
                case Status::Exceptional: ++result.summary.exceptional; break;
                case Status::Ineligible: ++result.summary.ineligible; break;
                case Status::Inconclusive: ++result.summary.inconclusive; break;
            }
            result.records.push_back(std::move(rec));
        }
    }
    return result;
}

std::string cell(const std::optional<u64>& v, u64 cap) {
    return v ? std::to_string(*v) : ">" + std::to_string(cap);
}

std::optional<DivisorG> worst_divisor(const EligibilityStatus& s) {
    if (s.offending_divisor) {
        for (const auto& dg : s.divisor_g)
            if (dg.divisor == *s.offending_divisor) return dg;
    }
    if (s.divisor_g.empty()) return std::nullopt;
    // nullopt (above cap) ranks highest; ties keep the least divisor.
    auto rank = [](const DivisorG& dg) { return dg.g ? *dg.g : ~u64{0}; };
    const DivisorG* best = &s.divisor_g.front();
    for (const auto& dg : s.divisor_g)
        if (rank(dg) > rank(*best)) best = &dg;
    return *best;
}

namespace {

std::string format_a(double a) {
    nlohmann::json j = a;
    return j.dump();
}

}  // namespace

void write_census_csv(std::ostream& os, const CensusResult& result, const CensusOptions& opts) {
    const u64 cap = opts.search.cap;
    os << "# " << kSchemaVersion << " a=" << format_a(opts.a) << " cap=" << cap
       << " mod8=" << (opts.search.residue.modulus == 8 ? "on" : "off") << '\n';
    os << "q,omega,y,status,g_q_or_cap,worst_divisor,worst_divisor_g,n_q_or_cap\n";
    for (const auto& rec : result.records) {
        const auto worst = worst_divisor(rec.status);
        os << rec.q << ',' << rec.omega << ',' << rec.y << ',' << to_string(rec.status.status) << ','
           << cell(rec.status.g_q, cap) << ',' << (worst ? std::to_string(worst->divisor) : "-")
           << ',' << (worst ? cell(worst->g, cap) : "-") << ',' << cell(rec.n_q, cap) << '\n';
    }
}

nlohmann::json to_json(const EligibilityStatus& s, u64 cap) {
    nlohmann::json j;
    j["status"] = to_string(s.status);
    j["y"] = s.y;
    j["g_q"] = s.g_q ? nlohmann::json(*s.g_q) : nlohmann::json(nullptr);
    j["g_witnesses"] = s.g_witnesses;
    nlohmann::json divs = nlohmann::json::array();
    for (const auto& dg : s.divisor_g)
        divs.push_back({{"d", dg.divisor}, {"g", dg.g ? nlohmann::json(*dg.g) : nlohmann::json(nullptr)}});
    j["divisors"] = std::move(divs);
    j["offending_divisor"] =
        s.offending_divisor ? nlohmann::json(*s.offending_divisor) : nlohmann::json(nullptr);
    j["cap"] = cap;
    return j;
}

nlohmann::json to_json(const CensusRecord& rec, u64 cap) {
    nlohmann::json j = to_json(rec.status, cap);
    j["q"] = rec.q;
    j["a"] = rec.a;
    j["omega"] = rec.omega;
    j["n_q"] = rec.n_q ? nlohmann::json(*rec.n_q) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const LeastNumberResult& r, const SquarefreeModulus& q) {
    nlohmann::json j;
    j["q"] = q.value();
    j["primes"] = std::vector<u64>(q.primes().begin(), q.primes().end());
    j["quantity"] = r.quantity == Quantity::NQ ? "n_q" : (r.quantity == Quantity::GQ ? "g_q" : "g_qr");
    j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
    j["cap"] = r.cap;
    if (r.quantity == Quantity::NQ) {
        nlohmann::json w = nlohmann::json::array();
        for (u64 t = 0; t < r.sign_witnesses.size(); ++t) {
            const auto& n = r.sign_witnesses[t];
            w.push_back({{"signs", to_string(SignVector{t, q.k()})},
                         {"n", n ? nlohmann::json(*n) : nlohmann::json(nullptr)}});
        }
        j["witnesses"] = std::move(w);
    } else {
        j["witnesses"] = r.basis_witnesses;
    }
    return j;
}

void write_census_jsonl(std::ostream& os, const CensusResult& result, const CensusOptions& opts) {
    nlohmann::json header{{"schema", kSchemaVersion},
                          {"a", opts.a},
                          {"cap", opts.search.cap},
                          {"mod8", opts.search.residue.modulus == 8}};
    os << header.dump() << '\n';
    for (const auto& rec : result.records) os << to_json(rec, opts.search.cap).dump() << '\n';
}

Window make_window(u64 Q, double epsilon) {
    if (Q < 1) throw std::invalid_argument("window: Q must be positive");
    if (!(epsilon >= 0) || epsilon > 1) throw std::invalid_argument("window: epsilon must lie in [0, 1]");
    long double w = std::pow(static_cast<long double>(Q), static_cast<long double>(epsilon));
    const long double nearest = std::round(w);
    if (std::fabs(w - nearest) <= 1e-9L * std::max<long double>(1, nearest)) w = nearest;
    const u64 width = static_cast<u64>(std::floor(w));
    if (width > kMaxInput - Q) throw std::invalid_argument("window: upper end exceeds 63 bits");
    return {Q, Q + width};
}

IntervalSearchResult interval_search(u64 Q, double epsilon, double a, const SearchOptions& opts) {
    IntervalSearchResult out{make_window(Q, epsilon), a, {}, {}, {}, 0};
    for (u64 q = out.window.lo;; ++q) {
        const u64 r = factorize(q).radical();
        if (r == 1 || (r & 1) == 0) {
            out.skipped.push_back(q);
        } else {
            const SquarefreeModulus mod(r);
            const u64 threshold = log_power_threshold(r, a);
            const auto g = compute_g(mod, 1, opts).value;
            IntervalHit hit{q, r, g, threshold};
            if (g && *g <= threshold)
                out.qualifying.push_back(hit);
            else if (!g && opts.cap < threshold)
                out.inconclusive.push_back(hit);
            else
                ++out.failing;
        }
        if (q == out.window.hi) break;
    }
    return out;
}

OmegaStats omega_stats(u64 Q, double epsilon, unsigned threshold, double K) {
    OmegaStats out{make_window(Q, epsilon), threshold, 0, 0.0, K, 0.0};
    for (u64 q = out.window.lo;; ++q) {
        if (factorize(q).omega() >= threshold) ++out.count;
        if (q == out.window.hi) break;
    }
    out.fraction = static_cast<double>(out.count) / static_cast<double>(out.window.size());
    const double loglog = std::log(std::log(static_cast<double>(Q)));
    out.comparison = std::pow(static_cast<double>(Q), epsilon) * std::pow(loglog, -K);
    return out;
}

RoughCount rough_count(u64 Q, double epsilon, u64 z, double a) {
    RoughCount out{};
    out.window = make_window(Q, epsilon);
    out.z = z;
    const auto primes = z >= 3 ? sieve_primes(z - 1) : std::vector<u64>{};
    out.mertens = 1.0L;
    u128 num = 1, den = 1;
    bool exact = true;
    for (u64 p : primes) {
        out.mertens *= 1.0L - 1.0L / static_cast<long double>(p);
        if (exact) {
            num *= p - 1;
            den *= p;
            exact = den <= ~u64{0};
        }
    }
    if (exact) out.mertens_exact = std::pair<u64, u64>{static_cast<u64>(num), static_cast<u64>(den)};

    // Sieve the window by the primes below z.
    std::vector<char> rough(out.window.size(), 1);
    for (u64 p : primes) {
        const u64 first = (out.window.lo + p - 1) / p * p;
        for (u64 m = first; m <= out.window.hi && m >= first; m += p) rough[m - out.window.lo] = 0;
    }
    out.count = static_cast<u64>(std::count(rough.begin(), rough.end(), 1));
    out.expected = static_cast<long double>(out.window.width()) * out.mertens;
    out.ratio = out.expected > 0 ? static_cast<long double>(out.count) / out.expected : 0.0L;
    out.in_range = z >= 1 && static_cast<long double>(z) <=
                                 std::pow(std::log(static_cast<long double>(Q)), static_cast<long double>(a));
    return out;
}

}  // namespace legendre
