#include "sumtable/poly.hpp"

#include "sumtable/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sumtable {

namespace {

using Coeff = Poly::Coeff;

Coeff checked_add(Coeff a, Coeff b, std::size_t exponent) {
    Coeff out;
    if (__builtin_add_overflow(a, b, &out)) {
        throw OverflowError("polynomial coefficient overflow in addition", exponent);
    }
    return out;
}

Coeff checked_sub(Coeff a, Coeff b, std::size_t exponent) {
    Coeff out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw OverflowError("polynomial coefficient overflow in subtraction", exponent);
    }
    return out;
}

Coeff checked_mul(Coeff a, Coeff b, std::size_t exponent) {
    Coeff out;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw OverflowError("polynomial coefficient overflow in multiplication", exponent);
    }
    return out;
}

}  // namespace

Poly::Poly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { normalize(); }

Poly Poly::monomial(Coeff c, std::size_t k) {
    std::vector<Coeff> v(k + 1, 0);
    v[k] = c;
    return Poly(std::move(v));
}

Poly Poly::x_pow_minus_one(std::size_t k) {
    std::vector<Coeff> v(k + 1, 0);
    v[0] -= 1;
    v[k] += 1;
    return Poly(std::move(v));
}

void Poly::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

std::size_t Poly::term_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Coeff c) { return c != 0; }));
}

std::string Poly::to_string(Order order) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    auto emit = [&](std::size_t k) {
        const Coeff c = coeffs_[k];
        if (c == 0) return;
        // |c| via unsigned to stay defined for INT64_MIN
        const auto mag = c < 0 ? 0 - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag;
            return;
        }
        if (mag != 1) out << mag;
        out << 'x';
        if (k > 1) out << '^' << k;
    };
    if (order == Order::descending) {
        for (std::size_t k = coeffs_.size(); k-- > 0;) emit(k);
    } else {
        for (std::size_t k = 0; k < coeffs_.size(); ++k) emit(k);
    }
    return out.str();
}

Poly operator+(const Poly& lhs, const Poly& rhs) {
    const auto a = lhs.coeffs();
    const auto b = rhs.coeffs();
    std::vector<Coeff> out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked_add(lhs[k], rhs[k], k);
    return Poly(std::move(out));
}

Poly operator-(const Poly& lhs, const Poly& rhs) {
    const auto a = lhs.coeffs();
    const auto b = rhs.coeffs();
    std::vector<Coeff> out(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = checked_sub(lhs[k], rhs[k], k);
    return Poly(std::move(out));
}

Poly poly_mul(const Poly& lhs, const Poly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    const auto a = lhs.coeffs();
    const auto b = rhs.coeffs();
    std::vector<Coeff> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            const std::size_t k = i + j;
            out[k] = checked_add(out[k], checked_mul(a[i], b[j], k), k);
        }
    }
    return Poly(std::move(out));
}

Poly poly_product(std::span<const Poly> factors) {
    Poly acc{1};
    for (const auto& f : factors) acc = poly_mul(acc, f);
    return acc;
}

Poly poly_divexact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::invalid_argument("poly_divexact: division by the zero polynomial");
    if (num.is_zero()) return {};

    const auto d = den.coeffs();
    const std::size_t den_deg = d.size() - 1;
    const Coeff lead = d.back();

    std::vector<Coeff> rem(num.coeffs().begin(), num.coeffs().end());
    if (rem.size() < d.size()) {
        throw NotDivisibleError("poly_divexact: divisor degree exceeds dividend degree");
    }
    std::vector<Coeff> quot(rem.size() - den_deg, 0);

    for (std::size_t k = quot.size(); k-- > 0;) {
        const Coeff top = rem[k + den_deg];
        if (top == 0) continue;
        if (top % lead != 0) {
            throw NotDivisibleError("poly_divexact: non-integer quotient coefficient at x^" + std::to_string(k));
        }
        const Coeff q = top / lead;
        quot[k] = q;
        for (std::size_t j = 0; j <= den_deg; ++j) {
            if (d[j] == 0) continue;
            rem[k + j] = checked_sub(rem[k + j], checked_mul(q, d[j], k + j), k + j);
        }
    }
    for (std::size_t k = 0; k < den_deg; ++k) {
        if (rem[k] != 0) {
            throw NotDivisibleError("poly_divexact: nonzero remainder (coefficient " + std::to_string(rem[k]) +
                                    " at x^" + std::to_string(k) + ")");
        }
    }
    return Poly(std::move(quot));
}

Coeff poly_eval_int(const Poly& p, Coeff point) {
    const auto c = p.coeffs();
    Coeff acc = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
        acc = checked_add(checked_mul(acc, point, k), c[k], k);
    }
    return acc;
}

std::optional<std::vector<std::int64_t>> poly_support_if_zero_one(const Poly& p) {
    std::vector<std::int64_t> support;
    const auto c = p.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 1) {
            support.push_back(static_cast<std::int64_t>(k));
        } else if (c[k] != 0) {
            return std::nullopt;
        }
    }
    return support;
}

Poly poly_from_support(std::span<const std::int64_t> exponents) {
    if (exponents.empty()) return {};
    const auto max_it = std::max_element(exponents.begin(), exponents.end());
    std::vector<Coeff> out(static_cast<std::size_t>(*max_it) + 1, 0);
    for (const auto e : exponents) {
        if (e < 0) throw std::invalid_argument("poly_from_support: negative exponent " + std::to_string(e));
        auto& slot = out[static_cast<std::size_t>(e)];
        if (slot != 0) throw std::invalid_argument("poly_from_support: repeated exponent " + std::to_string(e));
        slot = 1;
    }
    return Poly(std::move(out));
}

}  // namespace sumtable
