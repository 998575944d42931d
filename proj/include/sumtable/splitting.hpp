#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sumtable {

using Label = std::int64_t;
using LabelSet = std::vector<Label>;

/**
 * A labeling of an rows x cols addition table: row labels a (|a| = rows) and
 * column labels b (|b| = cols) such that the cells a_i + b_j are exactly
 * 0, 1, ..., rows*cols - 1, each once.
 *
 * Both label lists are kept sorted. Ordering compares (rows, cols, a, b)
 * lexicographically, which is the output order of every engine.
 */
struct Splitting {
    int rows = 0;
    int cols = 0;
    LabelSet a;
    LabelSet b;

    std::int64_t cells() const noexcept { return static_cast<std::int64_t>(rows) * cols; }

    auto operator<=>(const Splitting&) const = default;
    bool operator==(const Splitting&) const = default;
};

/**
 * Canonical orientation. For square tables the pair is unordered, so the side
 * holding the label 1 is moved to b. Rectangular tables keep a as the
 * rows-sized side and are returned unchanged (apart from sorting).
 */
Splitting canonicalize(Splitting s);

/// Sorts and removes duplicates in place.
void sort_unique(std::vector<Splitting>& list);

/// "0,2,20,22"
std::string join_labels(const LabelSet& labels, const char* sep = ",");

/// Parses "0,2, 20 22" (commas and/or whitespace). Throws std::invalid_argument.
LabelSet parse_labels(const std::string& text);

}  // namespace sumtable
