#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace qcount {

/// Outcome of one named identity check over a parameter grid.
struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// First counterexample, empty when passed.
    std::string detail;
};

/// Closed forms, recurrences and generating functions checked against each
/// other for 0 <= n <= max_n and every q in q_list (any integers >= 2).
std::vector<CheckResult> identity_suite(unsigned max_n, std::span<const std::uint64_t> q_list);

/// Closed forms checked against exhaustive enumeration for 1 <= n <= max_n
/// and every q in q_list (prime powers). Throws TooLarge up front if any
/// (n, q) exceeds the enumeration guard, InvalidArgument if a q is not a
/// prime power.
std::vector<CheckResult> oracle_suite(unsigned max_n, std::span<const std::uint64_t> q_list,
                                      unsigned workers, std::uint64_t seed,
                                      unsigned samples_per_field = 10);

} // namespace qcount
