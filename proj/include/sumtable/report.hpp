#pragma once

#include "sumtable/geometry.hpp"
#include "sumtable/oracle.hpp"
#include "sumtable/splitter.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sumtable {

/// (p - 2)(p - 1) + 1 where p is the number of divisors of n. Requires n >= 2.
std::int64_t predict(std::int64_t n);

struct PredictionRow {
    int n = 0;
    std::vector<std::int64_t> divisor_list;
    int p = 0;
    std::int64_t predicted = 0;
    std::optional<std::uint64_t> cyclotomic;
    std::optional<std::uint64_t> geometry_flat;
    std::optional<std::uint64_t> geometry_full;
    std::optional<std::uint64_t> oracle;
    /// Some engine count differs from the prediction. This is a finding, not a failure.
    bool prediction_mismatch = false;
    /// Engines disagree with each other. build_report throws before returning such a row.
    bool engine_mismatch = false;
    /// Why an engine count is absent, e.g. "oracle: skipped above n = 10".
    std::vector<std::string> notes;

    /// First available of oracle, cyclotomic, geometry_full.
    std::optional<std::uint64_t> actual() const;
};

/// Two engines returned different solution sets for the same table.
class EngineDisagreementError : public std::runtime_error {
public:
    EngineDisagreementError(int n, std::string first_engine, std::string second_engine,
                            std::vector<Splitting> only_first, std::vector<Splitting> only_second);

    int n;
    std::string first_engine;
    std::string second_engine;
    std::vector<Splitting> only_first;
    std::vector<Splitting> only_second;
};

struct ReportOptions {
    /// Rows with n above this get no brute-force count.
    std::optional<int> skip_oracle_above;
    /// Per-row wall-clock limit handed to the brute-force search; on expiry the count is left out.
    std::optional<std::chrono::duration<double>> budget;
    SplitterOptions splitter;
    GeometryOptions geometry;
    std::int64_t oracle_cell_cap = OracleOptions{}.cell_cap;
};

/**
 * One row per n in [n_min, n_max], each engine run on the n x n table.
 * Engines that hit a cap or the budget are left empty and explained in notes.
 * Throws EngineDisagreementError when two engines that ran disagree.
 */
std::vector<PredictionRow> build_report(int n_min, int n_max, const ReportOptions& options = {});

/// Aligned text table with one line per row; mismatching rows end in a '*' flag.
std::string format_report(const std::vector<PredictionRow>& rows);

}  // namespace sumtable
