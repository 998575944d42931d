#pragma once

#include "sumtable/splitting.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sumtable {

enum class Side { A, B };

struct RadixFactor {
    std::int64_t radix;
    Side side;

    bool operator==(const RadixFactor&) const = default;
};

/**
 * Nested block partition of a table, written as a mixed-radix system.
 *
 * factors[0] is the least significant position. Position k has place value
 * radix_0 * ... * radix_(k-1); the digits of A-side positions generate the
 * row labels and the digits of B-side positions the column labels. Because
 * every 0 <= v < m has exactly one mixed-radix digit string, the realized
 * label sets always tile 0..m-1.
 */
struct RadixScheme {
    std::vector<RadixFactor> factors;

    std::int64_t side_product(Side side) const;
    std::string to_string() const;  // "[5A 2B 2A 5B]"

    bool operator==(const RadixScheme&) const = default;
};

/// Realizes the scheme's label sets, without reorienting. Throws std::invalid_argument on a radix < 2.
Splitting realize(const RadixScheme& scheme);

/// Every side-alternating scheme with A-side product rows and B-side product cols, in generation order.
std::vector<RadixScheme> alternating_schemes(int rows, int cols, std::size_t max_factors_per_side = 0);

struct GeometryOptions {
    std::int64_t cell_cap = 4096;
};

/**
 * All labelings reachable from nested block partitions: every alternating
 * scheme is realized, canonicalized and deduplicated. Throws CapExceededError
 * past the cell cap.
 */
std::vector<Splitting> enumerate_schemes(int rows, int cols, const GeometryOptions& options = {});

/// The single-level construction: at most two factors per side (a block split plus the split inside each block).
std::vector<Splitting> flat_patterns(int n, const GeometryOptions& options = {});

/// Ordered factorizations of n into factors >= 2, lexicographically ascending. n = 1 yields one empty list.
std::vector<std::vector<std::int64_t>> ordered_factorizations(std::int64_t n, std::size_t max_parts = 0);

}  // namespace sumtable
