#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sumtable {

/**
 * Dense univariate polynomial with exact 64-bit integer coefficients.
 *
 * coeffs()[k] is the coefficient of x^k. The representation is always
 * canonical: trailing zero coefficients are stripped, so the zero polynomial
 * has an empty coefficient vector and no degree. Every arithmetic routine in
 * this header uses checked operations and throws OverflowError instead of
 * wrapping.
 */
class Poly {
public:
    using Coeff = std::int64_t;

    Poly() = default;
    explicit Poly(std::vector<Coeff> coeffs);
    Poly(std::initializer_list<Coeff> coeffs);

    /// c * x^k
    static Poly monomial(Coeff c, std::size_t k);
    /// x^k - 1
    static Poly x_pow_minus_one(std::size_t k);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    std::optional<std::size_t> degree() const noexcept;
    std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
    /// Coefficient of x^k; zero past the degree.
    Coeff operator[](std::size_t k) const noexcept { return k < coeffs_.size() ? coeffs_[k] : 0; }
    Coeff leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    /// Number of nonzero coefficients.
    std::size_t term_count() const noexcept;

    bool operator==(const Poly&) const = default;

    enum class Order { descending, ascending };
    /// Human-readable form, e.g. "x^2 - x + 1" (descending) or "1 - x + x^2" (ascending).
    std::string to_string(Order order = Order::descending) const;

private:
    void normalize() noexcept;
    std::vector<Coeff> coeffs_;
};

Poly operator+(const Poly& lhs, const Poly& rhs);
Poly operator-(const Poly& lhs, const Poly& rhs);

/// Exact product. Throws OverflowError naming the exponent whose coefficient overflowed.
Poly poly_mul(const Poly& lhs, const Poly& rhs);
inline Poly operator*(const Poly& lhs, const Poly& rhs) { return poly_mul(lhs, rhs); }

/// Product of a sequence; the empty product is 1.
Poly poly_product(std::span<const Poly> factors);

/**
 * Exact quotient num / den by integer long division.
 *
 * Throws NotDivisibleError when a quotient step is not an integer or the
 * final remainder is nonzero, and std::invalid_argument when den is zero.
 */
Poly poly_divexact(const Poly& num, const Poly& den);

/// p(point), exactly.
Poly::Coeff poly_eval_int(const Poly& p, Poly::Coeff point);

/// Sorted exponent list if every coefficient is 0 or 1, std::nullopt otherwise.
std::optional<std::vector<std::int64_t>> poly_support_if_zero_one(const Poly& p);

/// Inverse of poly_support_if_zero_one. Exponents must be distinct and nonnegative.
Poly poly_from_support(std::span<const std::int64_t> exponents);

}  // namespace sumtable
