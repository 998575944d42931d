#pragma once

#include "sumtable/splitting.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sumtable {

struct VerifyResult {
    bool ok = false;
    /// Empty when ok; otherwise the first problem found, e.g. "value 1 duplicated (1+0 and 0+1)".
    std::string diagnostic;

    explicit operator bool() const noexcept { return ok; }
};

/**
 * Checks a proposed labeling directly: |a| = rows, |b| = cols, and the sums
 * a_i + b_j hit every value of 0..rows*cols-1 exactly once. Any input is a
 * legal query; a bad one just yields ok == false.
 */
VerifyResult verify_splitting(const LabelSet& a, const LabelSet& b, int rows, int cols);
inline VerifyResult verify_splitting(const Splitting& s) { return verify_splitting(s.a, s.b, s.rows, s.cols); }

struct OracleOptions {
    std::int64_t cell_cap = 20736;
    /// Wall-clock limit for one enumeration; exceeding it throws TimeBudgetExceededError.
    std::optional<std::chrono::duration<double>> time_budget;
};

/**
 * Exhaustive backtracking enumeration of every labeling of a rows x cols
 * table, independent of any algebra.
 *
 * The search repeatedly takes the least value v not yet expressible as a + b
 * and branches on v joining b, then on v joining a. Output is canonical and
 * sorted like the other engines.
 */
std::vector<Splitting> enumerate_bruteforce(int rows, int cols, const OracleOptions& options = {});

/// Same search, counting only.
std::uint64_t count_bruteforce(int rows, int cols, const OracleOptions& options = {});

}  // namespace sumtable
