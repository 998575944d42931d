#include "sumtable/geometry.hpp"

#include "sumtable/errors.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace sumtable {

namespace {

void factorize_into(std::int64_t n, std::size_t max_parts, std::vector<std::int64_t>& prefix,
                    std::vector<std::vector<std::int64_t>>& out) {
    if (n == 1) {
        out.push_back(prefix);
        return;
    }
    if (max_parts != 0 && prefix.size() == max_parts) return;
    for (std::int64_t f = 2; f <= n; ++f) {
        if (n % f != 0) continue;
        prefix.push_back(f);
        factorize_into(n / f, max_parts, prefix, out);
        prefix.pop_back();
    }
}

RadixScheme interleave(const std::vector<std::int64_t>& first, Side first_side, const std::vector<std::int64_t>& second,
                       Side second_side) {
    RadixScheme s;
    for (std::size_t i = 0; i < std::max(first.size(), second.size()); ++i) {
        if (i < first.size()) s.factors.push_back({first[i], first_side});
        if (i < second.size()) s.factors.push_back({second[i], second_side});
    }
    return s;
}

void check_cap(int rows, int cols, std::int64_t cap) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("table dimensions must be positive, got " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    const std::int64_t m = static_cast<std::int64_t>(rows) * cols;
    if (m > cap) throw CapExceededError("table has " + std::to_string(m) + " cells, cap is " + std::to_string(cap));
}

std::vector<Splitting> realize_all(int rows, int cols, std::size_t max_per_side) {
    std::vector<Splitting> out;
    for (const auto& scheme : alternating_schemes(rows, cols, max_per_side)) {
        out.push_back(canonicalize(realize(scheme)));
    }
    sort_unique(out);
    return out;
}

}  // namespace

std::int64_t RadixScheme::side_product(Side side) const {
    std::int64_t p = 1;
    for (const auto& f : factors) {
        if (f.side == side && __builtin_mul_overflow(p, f.radix, &p)) {
            throw std::invalid_argument("radix scheme product overflows");
        }
    }
    return p;
}

std::string RadixScheme::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << ' ';
        out << factors[i].radix << (factors[i].side == Side::A ? 'A' : 'B');
    }
    out << ']';
    return out.str();
}

Splitting realize(const RadixScheme& scheme) {
    LabelSet a{0};
    LabelSet b{0};
    std::int64_t place = 1;
    for (const auto& f : scheme.factors) {
        if (f.radix < 2) throw std::invalid_argument("radix must be >= 2, got " + std::to_string(f.radix));
        auto& labels = f.side == Side::A ? a : b;
        LabelSet grown;
        grown.reserve(labels.size() * static_cast<std::size_t>(f.radix));
        for (std::int64_t digit = 0; digit < f.radix; ++digit) {
            for (const auto x : labels) grown.push_back(x + digit * place);
        }
        labels = std::move(grown);
        if (__builtin_mul_overflow(place, f.radix, &place) || place > std::numeric_limits<int>::max()) {
            throw std::invalid_argument("radix scheme " + scheme.to_string() + " is too large");
        }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return Splitting{static_cast<int>(a.size()), static_cast<int>(b.size()), std::move(a), std::move(b)};
}

std::vector<std::vector<std::int64_t>> ordered_factorizations(std::int64_t n, std::size_t max_parts) {
    if (n < 1) throw std::invalid_argument("ordered_factorizations: n must be >= 1");
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> prefix;
    factorize_into(n, max_parts, prefix, out);
    return out;
}

std::vector<RadixScheme> alternating_schemes(int rows, int cols, std::size_t max_factors_per_side) {
    const auto row_chains = ordered_factorizations(rows, max_factors_per_side);
    const auto col_chains = ordered_factorizations(cols, max_factors_per_side);
    std::vector<RadixScheme> out;
    for (const auto& fa : row_chains) {
        for (const auto& fb : col_chains) {
            const auto ka = fa.size();
            const auto kb = fb.size();
            if (ka == kb) {
                out.push_back(interleave(fb, Side::B, fa, Side::A));
                if (ka != 0) out.push_back(interleave(fa, Side::A, fb, Side::B));
            } else if (ka == kb + 1) {
                out.push_back(interleave(fa, Side::A, fb, Side::B));
            } else if (kb == ka + 1) {
                out.push_back(interleave(fb, Side::B, fa, Side::A));
            }
        }
    }
    return out;
}

std::vector<Splitting> enumerate_schemes(int rows, int cols, const GeometryOptions& options) {
    check_cap(rows, cols, options.cell_cap);
    return realize_all(rows, cols, 0);
}

std::vector<Splitting> flat_patterns(int n, const GeometryOptions& options) {
    check_cap(n, n, options.cell_cap);
    return realize_all(n, n, 2);
}

}  // namespace sumtable
