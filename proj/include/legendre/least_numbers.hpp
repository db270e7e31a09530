#pragma once

// The least-number quantities n_q, g_q and g_{q,r}, y-eligibility
// classification, and checkers for the structural lemmas relating them.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "legendre/sign_space.hpp"

namespace legendre {

/// Raised when an operation is called outside its contract, e.g. asking for
/// an exceptional divisor of an eligible modulus.
struct ContractViolation : std::logic_error {
    using std::logic_error::logic_error;
};

/// Raised when a search exhausts its cap before deciding its question.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr u64 kDefaultCap = 10'000'000;

struct SearchOptions {
    u64 cap = kDefaultCap;
    ResidueClass residue = ResidueClass::mod8();
    /// n_q visits all 2^k sign patterns, so k is bounded.
    unsigned max_dimension = 20;
};

enum class Quantity { NQ, GQ, GQR };

struct LeastNumberResult {
    Quantity quantity;
    std::optional<u64> value;  // nullopt: not reached within cap
    u64 cap;
    /// n_q only: entry t is the least admissible n with theta(n) = t.
    std::vector<std::optional<u64>> sign_witnesses;
    /// g only: the n whose theta-images entered the basis, ascending.
    std::vector<u64> basis_witnesses;

    [[nodiscard]] bool exceeded() const noexcept { return !value.has_value(); }
};

/// Least admissible n <= cap with theta_q(n) = target.
std::optional<u64> least_n_for_sign(const SquarefreeModulus& q, SignVector target,
                                    const SearchOptions& opts = {});

LeastNumberResult compute_n_q(const SquarefreeModulus& q, const SearchOptions& opts = {});

/// g_{q,extra}; extra = 1 gives g_q.
LeastNumberResult compute_g(const SquarefreeModulus& q, u64 extra = 1,
                            const SearchOptions& opts = {});

enum class Status { Good, Exceptional, Ineligible, Inconclusive };

std::string to_string(Status s);

struct DivisorG {
    u64 divisor;
    std::optional<u64> g;  // g_{d,q}; nullopt when above the cap

    friend bool operator==(const DivisorG&, const DivisorG&) = default;
};

struct EligibilityStatus {
    Status status = Status::Inconclusive;
    u64 y = 0;
    std::optional<u64> g_q;
    /// g_{d,q} for every proper divisor 1 < d < q, ascending in d.
    std::vector<DivisorG> divisor_g;
    /// Ineligible only: the least d with g_{d,q} > y.
    std::optional<u64> offending_divisor;
    /// Basis witnesses of g_q.
    std::vector<u64> g_witnesses;

    friend bool operator==(const EligibilityStatus&, const EligibilityStatus&) = default;
};

EligibilityStatus classify(const SquarefreeModulus& q, u64 y, const SearchOptions& opts = {});

/// Whether n_q <= g_q^k and g_q <= n_q; nullopt if either search hit its cap.
std::optional<bool> check_generation_lemma(const SquarefreeModulus& q,
                                           const SearchOptions& opts = {});

/// Whether every n in S_q(x, y) has Jacobi symbol (n/q) = +1. Throws
/// ContractViolation unless q is y-exceptional.
bool check_subspace_lemma(const SquarefreeModulus& q, u64 x, u64 y, const SearchOptions& opts = {});

struct DescentStep {
    u64 divisor;
    u64 parent;     // the modulus whose divisor lattice was searched
    u64 threshold;  // y used when selecting `divisor`
};

struct DescentResult {
    std::vector<DescentStep> chain;
    u64 endpoint;
    u64 threshold;  // endpoint is threshold-exceptional
};

/// Descends from a y-ineligible q to a proper divisor that is
/// min(y, p - 1)-exceptional, p the least prime of q, by repeatedly taking
/// the least offending divisor. Throws ContractViolation if q is not
/// y-ineligible, CapExceeded if a classification is inconclusive.
DescentResult find_exceptional_divisor(const SquarefreeModulus& q, u64 y,
                                       const SearchOptions& opts = {});

/// Iterates the descent with thresholds floor((log d)^a) until reaching a
/// divisor d that is floor((log d)^a)-exceptional. Requires q to be
/// floor((log q)^a)-ineligible.
DescentResult find_log_exceptional_divisor(const SquarefreeModulus& q, double a,
                                           const SearchOptions& opts = {});

struct CensusRecord {
    u64 q;
    double a;
    u64 y;
    unsigned omega;
    EligibilityStatus status;
    std::optional<u64> n_q;

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

/// Classifies one odd square-free q at y = floor((log q)^a).
CensusRecord census_record(const SquarefreeModulus& q, double a, const SearchOptions& opts = {});

}  // namespace legendre
