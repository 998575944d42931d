#include "sumtable/oracle.hpp"

#include "sumtable/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sumtable {

VerifyResult verify_splitting(const LabelSet& a, const LabelSet& b, int rows, int cols) {
    auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
    if (rows < 1 || cols < 1) return fail("table dimensions must be positive");
    if (a.size() != static_cast<std::size_t>(rows)) {
        return fail("|A| = " + std::to_string(a.size()) + ", expected " + std::to_string(rows));
    }
    if (b.size() != static_cast<std::size_t>(cols)) {
        return fail("|B| = " + std::to_string(b.size()) + ", expected " + std::to_string(cols));
    }

    // a shifted pair such as {-1, 1} + {1, 2} covers 0..3 but is not a labeling
    for (const auto* side : {&a, &b}) {
        for (const auto x : *side) {
            if (x < 0) return fail(std::string("label ") + std::to_string(x) + " in " + (side == &a ? "A" : "B") +
                                   " is negative");
        }
    }

    const std::int64_t m = static_cast<std::int64_t>(rows) * cols;
    // first (a, b) pair seen for each value, for the duplicate message
    std::vector<std::int64_t> hits(static_cast<std::size_t>(m), 0);
    std::vector<std::pair<Label, Label>> first(static_cast<std::size_t>(m));
    for (const auto x : a) {
        for (const auto y : b) {
            Label s;
            if (__builtin_add_overflow(x, y, &s) || s < 0 || s >= m) {
                std::ostringstream msg;
                msg << "sum " << x << "+" << y << " outside 0.." << m - 1;
                return fail(msg.str());
            }
            const auto idx = static_cast<std::size_t>(s);
            if (hits[idx]++ == 0) first[idx] = {x, y};
        }
    }
    for (std::size_t v = 0; v < hits.size(); ++v) {
        if (hits[v] == 1) continue;
        std::ostringstream msg;
        if (hits[v] == 0) {
            msg << "value " << v << " missing";
        } else {
            msg << "value " << v << " duplicated (" << hits[v] << " times, first as " << first[v].first << "+"
                << first[v].second << ")";
        }
        return fail(msg.str());
    }
    return {true, {}};
}

namespace {

class Backtracker {
public:
    Backtracker(int rows, int cols, const OracleOptions& options) : rows_(rows), cols_(cols), options_(options) {
        if (rows < 1 || cols < 1) {
            throw std::invalid_argument("table dimensions must be positive, got " + std::to_string(rows) + "x" +
                                        std::to_string(cols));
        }
        m_ = static_cast<std::int64_t>(rows) * cols;
        if (m_ > options.cell_cap) {
            throw CapExceededError("table has " + std::to_string(m_) + " cells, brute-force cap is " +
                                   std::to_string(options.cell_cap));
        }
        covered_.assign(static_cast<std::size_t>(m_), 0);
        start_ = std::chrono::steady_clock::now();
    }

    template <typename OnSolution>
    void run(OnSolution&& on_solution) {
        a_ = {0};
        b_ = {0};
        covered_[0] = 1;
        search(1, on_solution);
    }

private:
    template <typename OnSolution>
    void search(std::int64_t from, OnSolution& on_solution) {
        if ((++nodes_ & 0x3ff) == 0) check_budget();

        std::int64_t v = from;
        while (v < m_ && covered_[static_cast<std::size_t>(v)]) ++v;
        if (v == m_) {
            on_solution(a_, b_);
            return;
        }
        // Square tables are unordered pairs: the label 1 always goes to b.
        const bool square = rows_ == cols_;
        if (b_.size() < static_cast<std::size_t>(cols_) && place(v, a_, b_)) {
            search(v + 1, on_solution);
            unplace(b_, a_);
        }
        if (square && v == 1) return;
        if (a_.size() < static_cast<std::size_t>(rows_) && place(v, b_, a_)) {
            search(v + 1, on_solution);
            unplace(a_, b_);
        }
    }

    // Adds v to `side`, covering v + x for every x in `other`. Fails without
    // side effects when a sum leaves the table or lands on a covered cell.
    bool place(std::int64_t v, const LabelSet& other, LabelSet& side) {
        for (const auto x : other) {
            const auto s = v + x;
            if (s >= m_ || covered_[static_cast<std::size_t>(s)]) return false;
        }
        for (const auto x : other) covered_[static_cast<std::size_t>(v + x)] = 1;
        side.push_back(v);
        return true;
    }

    void unplace(LabelSet& side, const LabelSet& other) {
        const auto v = side.back();
        side.pop_back();
        for (const auto x : other) covered_[static_cast<std::size_t>(v + x)] = 0;
    }

    void check_budget() const {
        if (!options_.time_budget) return;
        if (std::chrono::steady_clock::now() - start_ > *options_.time_budget) {
            throw TimeBudgetExceededError("brute-force search for " + std::to_string(rows_) + "x" +
                                          std::to_string(cols_) + " exceeded its time budget");
        }
    }

    int rows_;
    int cols_;
    const OracleOptions& options_;
    std::int64_t m_ = 0;
    std::vector<char> covered_;
    LabelSet a_;
    LabelSet b_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

std::vector<Splitting> enumerate_bruteforce(int rows, int cols, const OracleOptions& options) {
    std::vector<Splitting> out;
    Backtracker search(rows, cols, options);
    search.run([&](const LabelSet& a, const LabelSet& b) {
        if (a.size() != static_cast<std::size_t>(rows) || b.size() != static_cast<std::size_t>(cols)) {
            throw InvariantViolation("backtracking reached full coverage with wrong side sizes");
        }
        out.push_back(canonicalize(Splitting{rows, cols, a, b}));
    });
    sort_unique(out);
    return out;
}

std::uint64_t count_bruteforce(int rows, int cols, const OracleOptions& options) {
    std::uint64_t count = 0;
    Backtracker search(rows, cols, options);
    search.run([&](const LabelSet&, const LabelSet&) { ++count; });
    return count;
}

}  // namespace sumtable
