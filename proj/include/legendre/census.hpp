#pragma once

// Range-level drivers: the parallel exceptional census, short-interval
// searches and window statistics, plus their CSV / JSON serializations.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "legendre/least_numbers.hpp"

namespace legendre {

inline constexpr const char* kSchemaVersion = "legendre-census/1";

struct CensusOptions {
    double a = 3.0;
    SearchOptions search;
    unsigned workers = 1;
    u64 chunk = 1024;
};

struct CensusSummary {
    u64 good = 0;
    u64 exceptional = 0;
    u64 ineligible = 0;
    u64 inconclusive = 0;
    u64 skipped = 0;  // q <= 2, even, or not square-free
};

struct CensusResult {
    std::vector<CensusRecord> records;  // ascending in q
    CensusSummary summary;
};

/// Census of every odd square-free q in [lo, hi]. Output is independent of
/// the worker count.
CensusResult exceptional_census(u64 lo, u64 hi, const CensusOptions& opts);

/// Columns: q, omega, y, status, g_q_or_cap, worst_divisor, worst_divisor_g,
/// n_q_or_cap. Values above the cap print as ">cap".
void write_census_csv(std::ostream& os, const CensusResult& result, const CensusOptions& opts);
void write_census_jsonl(std::ostream& os, const CensusResult& result, const CensusOptions& opts);

/// The divisor reported in the worst_divisor column: the certificate for
/// ineligible q, otherwise the divisor with the largest g_{d,q}.
std::optional<DivisorG> worst_divisor(const EligibilityStatus& s);

nlohmann::json to_json(const CensusRecord& rec, u64 cap);
nlohmann::json to_json(const LeastNumberResult& r, const SquarefreeModulus& q);
nlohmann::json to_json(const EligibilityStatus& s, u64 cap);
std::string cell(const std::optional<u64>& v, u64 cap);

/// [Q, Q + floor(Q^epsilon)]. A power within 1e-9 relative of an integer is
/// snapped to it before flooring.
struct Window {
    u64 lo;
    u64 hi;

    [[nodiscard]] u64 width() const noexcept { return hi - lo; }
    [[nodiscard]] u64 size() const noexcept { return hi - lo + 1; }
};

Window make_window(u64 Q, double epsilon);

struct IntervalHit {
    u64 q;
    u64 radical;
    std::optional<u64> g_r;
    u64 threshold;  // floor((log r)^a)
};

struct IntervalSearchResult {
    Window window;
    double a;
    std::vector<IntervalHit> qualifying;    // g_r <= threshold
    std::vector<IntervalHit> inconclusive;  // g_r search hit the cap below threshold
    std::vector<u64> skipped;               // q with an even or trivial radical
    u64 failing = 0;
};

IntervalSearchResult interval_search(u64 Q, double epsilon, double a, const SearchOptions& opts = {});

struct OmegaStats {
    Window window;
    unsigned threshold;
    u64 count;        // q in the window with omega(q) >= threshold
    double fraction;  // count / window size
    double K;
    double comparison;  // Q^epsilon (log log Q)^(-K)
};

OmegaStats omega_stats(u64 Q, double epsilon, unsigned threshold, double K = 1.0);

struct RoughCount {
    Window window;
    u64 z;
    u64 count;  // q in the window with no prime factor < z
    long double mertens;  // V(z) = prod_{p<z} (1 - 1/p)
    std::optional<std::pair<u64, u64>> mertens_exact;  // numerator, denominator when it fits
    long double expected;  // width * V(z)
    long double ratio;     // count / expected
    bool in_range;         // z <= (log Q)^a
};

RoughCount rough_count(u64 Q, double epsilon, u64 z, double a = 3.0);

}  // namespace legendre
