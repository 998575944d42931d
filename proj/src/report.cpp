#include "sumtable/report.hpp"

#include "sumtable/cyclotomic.hpp"
#include "sumtable/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <iterator>
#include <sstream>

namespace sumtable {

namespace {

std::vector<Splitting> difference(const std::vector<Splitting>& lhs, const std::vector<Splitting>& rhs) {
    std::vector<Splitting> out;
    std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(out));
    return out;
}

std::string describe(int n, const std::string& first, const std::string& second, const std::vector<Splitting>& only_first,
                     const std::vector<Splitting>& only_second) {
    std::ostringstream out;
    out << "engines disagree for n = " << n << ": " << first << " vs " << second;
    auto list = [&](const std::string& name, const std::vector<Splitting>& items) {
        for (const auto& s : items) {
            out << "\n  only " << name << ": A={" << join_labels(s.a) << "} B={" << join_labels(s.b) << "}";
        }
    };
    list(first, only_first);
    list(second, only_second);
    return out.str();
}

struct EngineResult {
    std::string name;
    std::vector<Splitting> solutions;
};

}  // namespace

std::int64_t predict(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("predict: n must be >= 2, got " + std::to_string(n));
    const auto p = static_cast<std::int64_t>(divisors(n).size());
    return (p - 2) * (p - 1) + 1;
}

std::optional<std::uint64_t> PredictionRow::actual() const {
    if (oracle) return oracle;
    if (cyclotomic) return cyclotomic;
    return geometry_full;
}

EngineDisagreementError::EngineDisagreementError(int n_, std::string first, std::string second,
                                                 std::vector<Splitting> only_first_, std::vector<Splitting> only_second_)
    : std::runtime_error(describe(n_, first, second, only_first_, only_second_)),
      n(n_),
      first_engine(std::move(first)),
      second_engine(std::move(second)),
      only_first(std::move(only_first_)),
      only_second(std::move(only_second_)) {}

std::vector<PredictionRow> build_report(int n_min, int n_max, const ReportOptions& options) {
    if (n_min < 2 || n_max < n_min) {
        throw std::invalid_argument("report range must satisfy 2 <= from <= to, got " + std::to_string(n_min) + ".." +
                                    std::to_string(n_max));
    }
    std::vector<PredictionRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        PredictionRow row;
        row.n = n;
        row.divisor_list = divisors(n);
        row.p = static_cast<int>(row.divisor_list.size());
        row.predicted = predict(n);

        std::vector<EngineResult> full_engines;
        try {
            auto sols = enumerate_cyclotomic(n, n, options.splitter);
            row.cyclotomic = sols.size();
            full_engines.push_back({"cyclotomic", std::move(sols)});
        } catch (const ResourceError& e) {
            row.notes.push_back(std::string("cyclotomic: ") + e.what());
        }
        try {
            auto sols = enumerate_schemes(n, n, options.geometry);
            row.geometry_full = sols.size();
            full_engines.push_back({"geometry", std::move(sols)});
            row.geometry_flat = flat_patterns(n, options.geometry).size();
        } catch (const ResourceError& e) {
            row.notes.push_back(std::string("geometry: ") + e.what());
        }
        if (options.skip_oracle_above && n > *options.skip_oracle_above) {
            row.notes.push_back("oracle: skipped above n = " + std::to_string(*options.skip_oracle_above));
        } else {
            try {
                OracleOptions oracle_options;
                oracle_options.cell_cap = options.oracle_cell_cap;
                oracle_options.time_budget = options.budget;
                auto sols = enumerate_bruteforce(n, n, oracle_options);
                row.oracle = sols.size();
                full_engines.push_back({"oracle", std::move(sols)});
            } catch (const ResourceError& e) {
                row.notes.push_back(std::string("oracle: ") + e.what());
            }
        }

        for (std::size_t k = 1; k < full_engines.size(); ++k) {
            const auto& ref = full_engines.front();
            const auto& other = full_engines[k];
            if (ref.solutions != other.solutions) {
                row.engine_mismatch = true;
                throw EngineDisagreementError(n, ref.name, other.name, difference(ref.solutions, other.solutions),
                                              difference(other.solutions, ref.solutions));
            }
        }
        for (const auto& count : {row.cyclotomic, row.geometry_full, row.oracle}) {
            if (count && static_cast<std::int64_t>(*count) != row.predicted) row.prediction_mismatch = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string format_report(const std::vector<PredictionRow>& rows) {
    auto opt = [](const std::optional<std::uint64_t>& v) { return v ? std::to_string(*v) : std::string("-"); };
    std::size_t div_width = std::string("Divisors").size();
    std::vector<std::string> div_text;
    for (const auto& r : rows) {
        std::ostringstream d;
        for (std::size_t i = 0; i < r.divisor_list.size(); ++i) d << (i ? ", " : "") << r.divisor_list[i];
        div_text.push_back(d.str());
        div_width = std::max(div_width, div_text.back().size());
    }

    std::ostringstream out;
    out << std::left << std::setw(5) << "n" << std::setw(7) << "n^2" << std::setw(static_cast<int>(div_width) + 2)
        << "Divisors" << std::setw(4) << "p" << std::setw(8) << "N_pred" << std::setw(9) << "N_cyclo" << std::setw(8)
        << "N_flat" << std::setw(8) << "N_full" << std::setw(10) << "N_oracle"
        << "flag\n";
    for (std::size_t k = 0; k < rows.size(); ++k) {
        const auto& r = rows[k];
        std::ostringstream line;
        line << std::left << std::setw(5) << r.n << std::setw(7) << static_cast<std::int64_t>(r.n) * r.n
             << std::setw(static_cast<int>(div_width) + 2) << div_text[k] << std::setw(4) << r.p << std::setw(8)
             << r.predicted << std::setw(9) << opt(r.cyclotomic) << std::setw(8) << opt(r.geometry_flat) << std::setw(8)
             << opt(r.geometry_full) << std::setw(10) << opt(r.oracle) << (r.prediction_mismatch ? "*" : "");
        auto text = line.str();
        text.erase(text.find_last_not_of(' ') + 1);
        out << text << '\n';
    }
    bool any_notes = false;
    for (const auto& r : rows) {
        for (const auto& note : r.notes) {
            if (!any_notes) out << '\n';
            any_notes = true;
            out << "n = " << r.n << ": " << note << '\n';
        }
    }
    return out.str();
}

}  // namespace sumtable
