#include "sumtable/dice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sumtable {

std::int64_t SumDistribution::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::int64_t{0},
                           [](std::int64_t acc, const auto& kv) { return acc + kv.second; });
}

Poly face_polynomial(std::span<const std::int64_t> faces) {
    if (faces.empty()) throw std::invalid_argument("a die needs at least one face");
    const auto top = *std::max_element(faces.begin(), faces.end());
    std::vector<Poly::Coeff> mult(static_cast<std::size_t>(std::max<std::int64_t>(top, 0)) + 1, 0);
    for (const auto f : faces) {
        if (f < 1) throw std::invalid_argument("die faces must be positive, got " + std::to_string(f));
        ++mult[static_cast<std::size_t>(f)];
    }
    return Poly(std::move(mult));
}

SumDistribution sum_distribution(std::span<const std::int64_t> die1, std::span<const std::int64_t> die2) {
    const auto product = poly_mul(face_polynomial(die1), face_polynomial(die2));
    SumDistribution out;
    const auto c = product.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) out.counts.emplace(static_cast<std::int64_t>(k), c[k]);
    }
    return out;
}

Faces standard_die(int n) {
    if (n < 1) throw std::invalid_argument("a die needs at least one face");
    Faces faces(static_cast<std::size_t>(n));
    std::iota(faces.begin(), faces.end(), 1);
    return faces;
}

}  // namespace sumtable
