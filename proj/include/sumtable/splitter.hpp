#pragma once

#include "sumtable/poly.hpp"
#include "sumtable/splitting.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace sumtable {

struct SplitterOptions {
    /// Largest table (rows * cols) accepted.
    std::int64_t cell_cap = 4096;
    /// Upper bound on factor groupings that survive the x = 1 test and get expanded.
    std::uint64_t max_candidates = std::uint64_t{1} << 24;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/**
 * Every labeling of a rows x cols table, found by distributing the cyclotomic
 * factors of c(x) = 1 + x + ... + x^(m-1) between a(x) and b(x).
 *
 * Groupings whose product at x = 1 is not `rows` are discarded before any
 * expansion. Survivors are expanded and kept when a(x) and b(x) are 0/1
 * polynomials with rows and cols terms. Results are canonical, duplicate
 * free and sorted; thread count never changes the output.
 *
 * Throws CapExceededError when rows*cols exceeds the cap or the number of
 * groupings to expand exceeds max_candidates.
 */
std::vector<Splitting> enumerate_cyclotomic(int rows, int cols, const SplitterOptions& options = {});

/// (a(x), b(x)) for a splitting; their product is 1 + x + ... + x^(m-1).
std::pair<Poly, Poly> solution_polynomials(const Splitting& s);

}  // namespace sumtable
