#pragma once

#include "sumtable/poly.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace sumtable {

using Faces = std::vector<std::int64_t>;

/// How often each total occurs when two dice are rolled, over all face pairs.
struct SumDistribution {
    std::map<std::int64_t, std::int64_t> counts;

    std::int64_t total() const;
    bool operator==(const SumDistribution&) const = default;
};

/// Multiplicity polynomial of a die: the coefficient of x^k counts faces labeled k.
Poly face_polynomial(std::span<const std::int64_t> faces);

/// Distribution of die1 + die2, read off the product of the two face polynomials.
/// Faces must be positive and both dice nonempty (std::invalid_argument otherwise).
SumDistribution sum_distribution(std::span<const std::int64_t> die1, std::span<const std::int64_t> die2);

/// Faces 1..n.
Faces standard_die(int n);

}  // namespace sumtable
