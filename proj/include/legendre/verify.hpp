#pragma once

// Self-check suites run by `legendre verify <suite>`.

#include <string>
#include <string_view>
#include <vector>

#include "legendre/arith.hpp"

namespace legendre {

struct SuiteOptions {
    u64 seed = 42;
    u64 limit = 0;  // 0 picks the suite default
    unsigned workers = 1;
};

struct SuiteReport {
    std::string suite;
    u64 cases = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    bool vacuous = false;

    [[nodiscard]] bool passed() const noexcept { return counterexamples.empty(); }
};

/// One of "generation", "subspace", "descent", "forms",
/// "oracle-equivalence". Throws std::invalid_argument otherwise.
SuiteReport run_suite(std::string_view name, const SuiteOptions& opts = {});

const std::vector<std::string>& suite_names();

}  // namespace legendre
