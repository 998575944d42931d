#pragma once

#include "sumtable/poly.hpp"

#include <cstdint>
#include <vector>

namespace sumtable {

/// All positive divisors of n in ascending order. n must be >= 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/**
 * The d-th cyclotomic polynomial.
 *
 * Computed by dividing x^d - 1 by Phi_e for every proper divisor e of d, with
 * each Phi_e itself taken from a process-wide memo. The memo is guarded by a
 * shared mutex, so concurrent callers are fine.
 */
Poly cyclotomic(std::int64_t d);

struct CyclotomicFactor {
    std::int64_t d;
    Poly phi;

    bool operator==(const CyclotomicFactor&) const = default;
};

/// Irreducible factors of x^m - 1 (or of its cofactor c(x)), sorted by d ascending.
struct CyclotomicFactorization {
    std::int64_t m = 0;
    std::vector<CyclotomicFactor> factors;

    /// Product of all listed factors.
    Poly product() const;
};

/// x^m - 1 = prod_{d | m} Phi_d. Verifies the product before returning.
CyclotomicFactorization factorize_unity(std::int64_t m);

/// c(x) = 1 + x + ... + x^(m-1): factorize_unity(m) without Phi_1. Requires m >= 2.
CyclotomicFactorization factorize_c(std::int64_t m);

}  // namespace sumtable
