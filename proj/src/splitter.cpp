#include "sumtable/splitter.hpp"

#include "sumtable/cyclotomic.hpp"
#include "sumtable/errors.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

namespace sumtable {

namespace {

void check_dimensions(int rows, int cols, std::int64_t cap) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("table dimensions must be positive, got " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    const std::int64_t m = static_cast<std::int64_t>(rows) * cols;
    if (m > cap) {
        throw CapExceededError("table has " + std::to_string(m) + " cells, cap is " + std::to_string(cap));
    }
}

// A grouping is a bitmask over the factor list: bit i set puts factor i into a(x).
std::optional<Splitting> try_grouping(const CyclotomicFactorization& fac, std::uint64_t mask, int rows, int cols) {
    Poly a{1};
    Poly b{1};
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        if (mask >> i & 1U) a = poly_mul(a, fac.factors[i].phi);
    }
    if (a.term_count() != static_cast<std::size_t>(rows)) return std::nullopt;
    auto a_support = poly_support_if_zero_one(a);
    if (!a_support) return std::nullopt;

    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        if (!(mask >> i & 1U)) b = poly_mul(b, fac.factors[i].phi);
    }
    if (b.term_count() != static_cast<std::size_t>(cols)) return std::nullopt;
    auto b_support = poly_support_if_zero_one(b);
    if (!b_support) return std::nullopt;

    return canonicalize(Splitting{rows, cols, std::move(*a_support), std::move(*b_support)});
}

}  // namespace

std::vector<Splitting> enumerate_cyclotomic(int rows, int cols, const SplitterOptions& options) {
    check_dimensions(rows, cols, options.cell_cap);
    const std::int64_t m = static_cast<std::int64_t>(rows) * cols;
    if (m == 1) return {Splitting{1, 1, {0}, {0}}};

    const auto fac = factorize_c(m);
    const std::size_t k = fac.factors.size();
    if (k >= 64) throw CapExceededError("too many cyclotomic factors: " + std::to_string(k));

    // Phi_d(1) is q for d a power of the prime q and 1 otherwise, so only the
    // prime-power factors constrain a(1) = rows. The unit factors go either way.
    std::vector<std::size_t> weighted;
    std::vector<std::size_t> unit;
    std::vector<Poly::Coeff> at_one(k);
    for (std::size_t i = 0; i < k; ++i) {
        at_one[i] = poly_eval_int(fac.factors[i].phi, 1);
        (at_one[i] == 1 ? unit : weighted).push_back(i);
    }

    std::vector<std::uint64_t> weighted_masks;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << weighted.size()); ++sub) {
        Poly::Coeff value = 1;
        std::uint64_t mask = 0;
        for (std::size_t j = 0; j < weighted.size(); ++j) {
            if (sub >> j & 1U) {
                value *= at_one[weighted[j]];
                mask |= std::uint64_t{1} << weighted[j];
            }
        }
        if (value == rows) weighted_masks.push_back(mask);
    }

    if (unit.size() >= 63) throw CapExceededError("too many unit cyclotomic factors: " + std::to_string(unit.size()));
    const std::uint64_t unit_combos = std::uint64_t{1} << unit.size();
    const std::uint64_t total = weighted_masks.size() * unit_combos;
    if (unit_combos != 0 && total / unit_combos != weighted_masks.size()) {
        throw CapExceededError("factor grouping count overflows");
    }
    if (total > options.max_candidates) {
        throw CapExceededError("m = " + std::to_string(m) + " needs " + std::to_string(total) +
                               " factor groupings, limit is " + std::to_string(options.max_candidates));
    }

    auto candidate_mask = [&](std::uint64_t index) {
        std::uint64_t mask = weighted_masks[index / unit_combos];
        const std::uint64_t sub = index % unit_combos;
        for (std::size_t j = 0; j < unit.size(); ++j) {
            if (sub >> j & 1U) mask |= std::uint64_t{1} << unit[j];
        }
        return mask;
    };

    unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
    if (total < 256) threads = 1;
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(total, 1)));

    std::vector<std::vector<Splitting>> partial(threads);
    std::vector<std::exception_ptr> failures(threads);
    auto work = [&](unsigned t) {
        try {
            for (std::uint64_t i = t; i < total; i += threads) {
                if (auto s = try_grouping(fac, candidate_mask(i), rows, cols)) partial[t].push_back(std::move(*s));
            }
        } catch (...) {
            failures[t] = std::current_exception();
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }
    for (const auto& f : failures) {
        if (f) std::rethrow_exception(f);
    }

    std::vector<Splitting> out;
    for (auto& chunk : partial) out.insert(out.end(), std::make_move_iterator(chunk.begin()), std::make_move_iterator(chunk.end()));
    sort_unique(out);
    return out;
}

std::pair<Poly, Poly> solution_polynomials(const Splitting& s) {
    return {poly_from_support(s.a), poly_from_support(s.b)};
}

}  // namespace sumtable
