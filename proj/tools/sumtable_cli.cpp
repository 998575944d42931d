// sumtable: labelings of addition tables whose cells are 0..rc-1.
//
// Exit codes: 0 success, 1 verification/comparison failure, 2 usage error,
// 3 resource cap or arithmetic overflow. Results go to stdout, errors to stderr.

#include "sumtable/sumtable.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace sumtable;
using json = nlohmann::ordered_json;

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

struct Output {
    bool json = false;
    bool csv = false;
    bool deterministic = false;
};

void add_output_flags(CLI::App* cmd, Output& out, bool with_csv) {
    cmd->add_flag("--json", out.json, "Machine-readable JSON output");
    if (with_csv) cmd->add_flag("--csv", out.csv, "CSV output");
    cmd->add_flag("--deterministic", out.deterministic, "Omit timings so JSON is byte-identical across runs");
}

class Stopwatch {
public:
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

json envelope(const std::string& command, json parameters) {
    json j;
    j["command"] = command;
    j["parameters"] = std::move(parameters);
    return j;
}

void emit(json j, const Output& out, const json& timings) {
    if (!out.deterministic && !timings.empty()) j["timings_ms"] = timings;
    std::cout << j.dump(2) << '\n';
}

// "0,1,2", "0 1 2" or "@file"
LabelSet read_labels(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::invalid_argument("cannot open label file " + arg.substr(1));
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_labels(buffer.str());
    }
    return parse_labels(arg);
}

json poly_json(const Poly& p) {
    json j;
    j["degree"] = p.degree() ? json(*p.degree()) : json(nullptr);
    j["coeffs"] = std::vector<Poly::Coeff>(p.coeffs().begin(), p.coeffs().end());
    j["poly"] = p.to_string();
    return j;
}

json solutions_json(int rows, int cols, const std::vector<Splitting>& sols) {
    json j;
    j["rows"] = rows;
    j["cols"] = cols;
    j["count"] = sols.size();
    j["solutions"] = json::array();
    for (const auto& s : sols) j["solutions"].push_back({{"A", s.a}, {"B", s.b}});
    return j;
}

void print_solutions(const std::string& command, json params, int rows, int cols, const std::vector<Splitting>& sols,
                     const Output& out, const json& timings) {
    if (out.json) {
        auto j = envelope(command, std::move(params));
        j.update(solutions_json(rows, cols, sols));
        emit(std::move(j), out, timings);
    } else if (out.csv) {
        std::cout << "index,A,B\n";
        for (std::size_t i = 0; i < sols.size(); ++i) {
            std::cout << i + 1 << ',' << join_labels(sols[i].a, " ") << ',' << join_labels(sols[i].b, " ") << '\n';
        }
    } else {
        std::cout << rows << " x " << cols << " table: " << sols.size() << (sols.size() == 1 ? " solution" : " solutions")
                  << '\n';
        for (std::size_t i = 0; i < sols.size(); ++i) {
            std::cout << "Solution " << i + 1 << ": A = {" << join_labels(sols[i].a, ", ") << "}, B = {"
                      << join_labels(sols[i].b, ", ") << "}\n";
        }
    }
}

std::string distribution_text(const SumDistribution& d) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [sum, count] : d.counts) {
        out << (first ? "" : " ") << sum << ':' << count;
        first = false;
    }
    return out.str();
}

json distribution_json(const SumDistribution& d) {
    json j = json::object();
    for (const auto& [sum, count] : d.counts) j[std::to_string(sum)] = count;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Labelings of addition tables whose cells are exactly 0..rc-1"};
    app.require_subcommand(1);
    Output out;
    std::function<int()> run;

    // cyclotomic <d>
    auto* cyc = app.add_subcommand("cyclotomic", "Print the d-th cyclotomic polynomial");
    std::int64_t cyc_d = 0;
    bool cyc_ascending = false;
    cyc->add_option("d", cyc_d, "Index d >= 1")->required()->check(CLI::PositiveNumber);
    cyc->add_flag("--ascending", cyc_ascending, "Write terms from the constant upward");
    add_output_flags(cyc, out, false);
    cyc->callback([&] {
        run = [&] {
            Stopwatch clock;
            const auto phi = cyclotomic(cyc_d);
            if (out.json) {
                auto j = envelope("cyclotomic", {{"d", cyc_d}});
                j["d"] = cyc_d;
                j.update(poly_json(phi));
                emit(std::move(j), out, {{"cyclotomic", clock.ms()}});
            } else {
                std::cout << "Phi_" << cyc_d << " = "
                          << phi.to_string(cyc_ascending ? Poly::Order::ascending : Poly::Order::descending) << '\n';
            }
            return kOk;
        };
    });

    // factor <m>
    auto* fac = app.add_subcommand("factor", "Factor x^m - 1 (or c(x) with --c) into cyclotomic polynomials");
    std::int64_t fac_m = 0;
    bool fac_c = false;
    fac->add_option("m", fac_m, "Exponent m >= 1")->required()->check(CLI::PositiveNumber);
    fac->add_flag("--c", fac_c, "Factor c(x) = 1 + x + ... + x^(m-1) instead");
    add_output_flags(fac, out, false);
    fac->callback([&] {
        run = [&] {
            Stopwatch clock;
            const auto f = fac_c ? factorize_c(fac_m) : factorize_unity(fac_m);
            const std::string target = fac_c ? "1 + x + ... + x^" + std::to_string(fac_m - 1)
                                             : Poly::x_pow_minus_one(static_cast<std::size_t>(fac_m)).to_string();
            if (out.json) {
                auto j = envelope("factor", {{"m", fac_m}, {"c", fac_c}});
                j["m"] = fac_m;
                j["target"] = target;
                j["factors"] = json::array();
                for (const auto& [d, phi] : f.factors) {
                    json item{{"d", d}};
                    item.update(poly_json(phi));
                    item["value_at_1"] = poly_eval_int(phi, 1);
                    j["factors"].push_back(std::move(item));
                }
                emit(std::move(j), out, {{"factor", clock.ms()}});
            } else {
                std::cout << target << " =";
                for (const auto& factor : f.factors) std::cout << " Phi_" << factor.d;
                std::cout << '\n';
                for (const auto& [d, phi] : f.factors) std::cout << "Phi_" << d << " = " << phi.to_string() << '\n';
            }
            return kOk;
        };
    });

    // solve <r> <c>
    auto* solve = app.add_subcommand("solve", "Enumerate labelings by splitting the cyclotomic factors of c(x)");
    int solve_r = 0;
    int solve_c = 0;
    SplitterOptions solve_opts;
    solve->add_option("rows", solve_r, "Number of rows r (size of A)")->required()->check(CLI::PositiveNumber);
    solve->add_option("cols", solve_c, "Number of columns c (size of B)")->required()->check(CLI::PositiveNumber);
    solve->add_option("--max-cells", solve_opts.cell_cap, "Largest r*c accepted")->capture_default_str();
    solve->add_option("--max-candidates", solve_opts.max_candidates, "Largest number of factor groupings to expand")
        ->capture_default_str();
    solve->add_option("--threads", solve_opts.threads, "Worker threads (0 = all cores)");
    add_output_flags(solve, out, true);
    solve->callback([&] {
        run = [&] {
            Stopwatch clock;
            const auto sols = enumerate_cyclotomic(solve_r, solve_c, solve_opts);
            print_solutions("solve", {{"rows", solve_r}, {"cols", solve_c}}, solve_r, solve_c, sols, out,
                            {{"cyclotomic", clock.ms()}});
            return kOk;
        };
    });

    // oracle <r> <c>
    auto* orc = app.add_subcommand("oracle", "Enumerate labelings by exhaustive backtracking");
    int orc_r = 0;
    int orc_c = 0;
    bool orc_count_only = false;
    double orc_seconds = 0;
    OracleOptions orc_opts;
    orc->add_option("rows", orc_r, "Number of rows r")->required()->check(CLI::PositiveNumber);
    orc->add_option("cols", orc_c, "Number of columns c")->required()->check(CLI::PositiveNumber);
    orc->add_flag("--count-only", orc_count_only, "Print only the number of solutions");
    orc->add_option("--max-seconds", orc_seconds, "Wall-clock budget (0 = unlimited)")->check(CLI::NonNegativeNumber);
    orc->add_option("--max-cells", orc_opts.cell_cap, "Largest r*c accepted")->capture_default_str();
    add_output_flags(orc, out, true);
    orc->callback([&] {
        run = [&] {
            if (orc_seconds > 0) orc_opts.time_budget = std::chrono::duration<double>(orc_seconds);
            Stopwatch clock;
            json params{{"rows", orc_r}, {"cols", orc_c}};
            if (orc_count_only) {
                const auto n = count_bruteforce(orc_r, orc_c, orc_opts);
                if (out.json) {
                    auto j = envelope("oracle", params);
                    j.update(json{{"rows", orc_r}, {"cols", orc_c}, {"count", n}});
                    emit(std::move(j), out, {{"oracle", clock.ms()}});
                } else {
                    std::cout << n << '\n';
                }
                return kOk;
            }
            const auto sols = enumerate_bruteforce(orc_r, orc_c, orc_opts);
            print_solutions("oracle", params, orc_r, orc_c, sols, out, {{"oracle", clock.ms()}});
            return kOk;
        };
    });

    // verify --A ... --B ...
    auto* ver = app.add_subcommand("verify", "Check that a labeling fills 0..rc-1 exactly once");
    std::string ver_a;
    std::string ver_b;
    int ver_rows = 0;
    int ver_cols = 0;
    ver->add_option("--A", ver_a, "Row labels, comma separated or @file")->required();
    ver->add_option("--B", ver_b, "Column labels, comma separated or @file")->required();
    ver->add_option("--rows", ver_rows, "Expected |A| (default: as given)");
    ver->add_option("--cols", ver_cols, "Expected |B| (default: as given)");
    add_output_flags(ver, out, false);
    ver->callback([&] {
        run = [&] {
            const auto a = read_labels(ver_a);
            const auto b = read_labels(ver_b);
            const int rows = ver_rows ? ver_rows : static_cast<int>(a.size());
            const int cols = ver_cols ? ver_cols : static_cast<int>(b.size());
            const auto result = verify_splitting(a, b, rows, cols);
            if (out.json) {
                auto j = envelope("verify", {{"A", a}, {"B", b}, {"rows", rows}, {"cols", cols}});
                j["valid"] = result.ok;
                j["diagnostic"] = result.diagnostic;
                emit(std::move(j), out, {});
            } else {
                std::cout << (result.ok ? "VALID" : "INVALID: " + result.diagnostic) << '\n';
            }
            return result.ok ? kOk : kFailure;
        };
    });

    // geometry <r> <c>
    auto* geo = app.add_subcommand("geometry", "Enumerate labelings from nested block (mixed-radix) schemes");
    int geo_r = 0;
    int geo_c = 0;
    bool geo_flat = false;
    GeometryOptions geo_opts;
    geo->add_option("rows", geo_r, "Number of rows r")->required()->check(CLI::PositiveNumber);
    geo->add_option("cols", geo_c, "Number of columns c")->required()->check(CLI::PositiveNumber);
    geo->add_flag("--flat-only", geo_flat, "Only single-level block patterns (square tables)");
    geo->add_option("--max-cells", geo_opts.cell_cap, "Largest r*c accepted")->capture_default_str();
    add_output_flags(geo, out, true);
    geo->callback([&] {
        run = [&] {
            if (geo_flat && geo_r != geo_c) throw CLI::ValidationError("--flat-only", "needs a square table");
            Stopwatch clock;
            const auto sols = geo_flat ? flat_patterns(geo_r, geo_opts) : enumerate_schemes(geo_r, geo_c, geo_opts);
            print_solutions("geometry", {{"rows", geo_r}, {"cols", geo_c}, {"flat_only", geo_flat}}, geo_r, geo_c, sols,
                            out, {{"geometry", clock.ms()}});
            return kOk;
        };
    });

    // render --A ... --B ...
    auto* ren = app.add_subcommand("render", "Draw a labeled table as text or SVG");
    std::string ren_a;
    std::string ren_b;
    bool ren_values = false;
    bool ren_path = false;
    bool ren_blocks = false;
    std::string ren_svg;
    ren->add_option("--A", ren_a, "Row labels, comma separated or @file")->required();
    ren->add_option("--B", ren_b, "Column labels, comma separated or @file")->required();
    auto* f_values = ren->add_flag("--values", ren_values, "Cell values (default)");
    auto* f_path = ren->add_flag("--path", ren_path, "Arrows from each value to the next");
    auto* f_blocks = ren->add_flag("--blocks", ren_blocks, "Block outlines");
    f_values->excludes(f_path)->excludes(f_blocks);
    f_path->excludes(f_blocks);
    ren->add_option("--svg", ren_svg, "Also write the view as SVG to this file");
    ren->callback([&] {
        run = [&] {
            auto a = read_labels(ren_a);
            auto b = read_labels(ren_b);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            const Splitting s{static_cast<int>(a.size()), static_cast<int>(b.size()), a, b};
            const auto view = ren_path ? RenderView::path : ren_blocks ? RenderView::blocks : RenderView::values;
            std::cout << render_text(s, view);
            if (!ren_svg.empty()) {
                std::ofstream file(ren_svg);
                if (!file) throw std::runtime_error("cannot write " + ren_svg);
                file << render_svg(s, view);
            }
            return kOk;
        };
    });

    // dice --die1 ... --die2 ...
    auto* dice = app.add_subcommand("dice", "Sum distribution of two dice via face polynomials");
    std::string die1_arg;
    std::string die2_arg;
    bool compare_standard = false;
    dice->add_option("--die1", die1_arg, "Faces of the first die, comma separated")->required();
    dice->add_option("--die2", die2_arg, "Faces of the second die, comma separated")->required();
    dice->add_flag("--compare-standard", compare_standard,
                   "Compare against standard dice with the same face counts; exit 1 if different");
    add_output_flags(dice, out, false);
    dice->callback([&] {
        run = [&] {
            const auto d1 = read_labels(die1_arg);
            const auto d2 = read_labels(die2_arg);
            const auto dist = sum_distribution(d1, d2);
            std::optional<SumDistribution> standard;
            if (compare_standard) {
                standard = sum_distribution(standard_die(static_cast<int>(d1.size())),
                                            standard_die(static_cast<int>(d2.size())));
            }
            const bool equal = standard && *standard == dist;
            if (out.json) {
                auto j = envelope("dice", {{"die1", d1}, {"die2", d2}, {"compare_standard", compare_standard}});
                j["distribution"] = distribution_json(dist);
                if (standard) {
                    j["standard"] = distribution_json(*standard);
                    j["equal"] = equal;
                }
                emit(std::move(j), out, {});
            } else {
                std::cout << "dice:     " << distribution_text(dist) << '\n';
                if (standard) {
                    std::cout << "standard: " << distribution_text(*standard) << '\n';
                    std::cout << (equal ? "EQUAL" : "DIFFERENT") << '\n';
                }
            }
            return compare_standard && !equal ? kFailure : kOk;
        };
    });

    // predict <n>
    auto* pred = app.add_subcommand("predict", "Predicted solution count (p-2)(p-1)+1 for an n x n table");
    std::int64_t pred_n = 0;
    pred->add_option("n", pred_n, "Side length n >= 2")->required()->check(CLI::Range(std::int64_t{2}, INT64_MAX));
    add_output_flags(pred, out, false);
    pred->callback([&] {
        run = [&] {
            const auto divs = divisors(pred_n);
            const auto n_pred = predict(pred_n);
            if (out.json) {
                auto j = envelope("predict", {{"n", pred_n}});
                j["n"] = pred_n;
                j["divisors"] = divs;
                j["p"] = divs.size();
                j["predicted"] = n_pred;
                emit(std::move(j), out, {});
            } else {
                std::cout << "n = " << pred_n << ": divisors " << join_labels(divs, ", ") << "; p = " << divs.size()
                          << "; N = " << n_pred << '\n';
            }
            return kOk;
        };
    });

    // report --from --to
    auto* rep = app.add_subcommand("report", "Compare the predicted count with every engine for a range of n");
    int rep_from = 2;
    int rep_to = 12;
    int rep_skip = 0;
    double rep_seconds = 0;
    ReportOptions rep_opts;
    rep->add_option("--from", rep_from, "Smallest n (>= 2)")->capture_default_str();
    rep->add_option("--to", rep_to, "Largest n")->capture_default_str();
    rep->add_option("--skip-oracle-above", rep_skip, "No brute-force count for n above this");
    rep->add_option("--max-seconds", rep_seconds, "Per-row brute-force budget in seconds (0 = unlimited)")
        ->check(CLI::NonNegativeNumber);
    add_output_flags(rep, out, false);
    rep->callback([&] {
        run = [&] {
            if (rep_skip > 0) rep_opts.skip_oracle_above = rep_skip;
            if (rep_seconds > 0) rep_opts.budget = std::chrono::duration<double>(rep_seconds);
            Stopwatch clock;
            const auto rows = build_report(rep_from, rep_to, rep_opts);
            if (out.json) {
                auto j = envelope("report", {{"from", rep_from}, {"to", rep_to}});
                auto opt = [](const std::optional<std::uint64_t>& v) { return v ? json(*v) : json(nullptr); };
                j["rows"] = json::array();
                for (const auto& r : rows) {
                    j["rows"].push_back({{"n", r.n},
                                         {"cells", static_cast<std::int64_t>(r.n) * r.n},
                                         {"divisors", r.divisor_list},
                                         {"p", r.p},
                                         {"predicted", r.predicted},
                                         {"cyclotomic", opt(r.cyclotomic)},
                                         {"geometry_flat", opt(r.geometry_flat)},
                                         {"geometry_full", opt(r.geometry_full)},
                                         {"oracle", opt(r.oracle)},
                                         {"prediction_mismatch", r.prediction_mismatch},
                                         {"engine_mismatch", r.engine_mismatch},
                                         {"notes", r.notes}});
                }
                emit(std::move(j), out, {{"report", clock.ms()}});
            } else {
                std::cout << format_report(rows);
            }
            return kOk;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        return run();
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    } catch (const OverflowError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kResource;
    } catch (const EngineDisagreementError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
}
