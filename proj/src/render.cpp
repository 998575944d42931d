#include "sumtable/render.hpp"

#include "sumtable/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sumtable {

namespace {

struct Cell {
    std::size_t row;
    std::size_t col;
};

void require_valid(const Splitting& s) {
    if (auto v = verify_splitting(s); !v) {
        throw std::invalid_argument("cannot render an invalid labeling: " + v.diagnostic);
    }
}

// positions[v] = cell holding value v
std::vector<Cell> value_positions(const Splitting& s) {
    std::vector<Cell> pos(static_cast<std::size_t>(s.cells()));
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        for (std::size_t j = 0; j < s.b.size(); ++j) pos[static_cast<std::size_t>(s.a[i] + s.b[j])] = {i, j};
    }
    return pos;
}

int sign(std::ptrdiff_t x) { return (x > 0) - (x < 0); }

const char* arrow(int dr, int dc) {
    static const char* const table[3][3] = {
        {"↖", "↑", "↗"},
        {"←", "●", "→"},
        {"↙", "↓", "↘"},
    };
    return table[dr + 1][dc + 1];
}

// arrows[i][j] for the path view
std::vector<std::vector<std::string>> path_marks(const Splitting& s) {
    const auto pos = value_positions(s);
    std::vector<std::vector<std::string>> marks(s.a.size(), std::vector<std::string>(s.b.size()));
    for (std::size_t v = 0; v < pos.size(); ++v) {
        const auto [i, j] = pos[v];
        if (v == 0 || v + 1 == pos.size()) {
            marks[i][j] = "●";
            continue;
        }
        const auto next = pos[v + 1];
        marks[i][j] = arrow(sign(static_cast<std::ptrdiff_t>(next.row) - static_cast<std::ptrdiff_t>(i)),
                            sign(static_cast<std::ptrdiff_t>(next.col) - static_cast<std::ptrdiff_t>(j)));
    }
    return marks;
}

// Boundary weight between consecutive labels: 0 for the smallest gap, 1 for the next distinct gap, ...
std::vector<int> boundary_levels(const LabelSet& labels) {
    std::vector<Label> gaps;
    for (std::size_t k = 0; k + 1 < labels.size(); ++k) gaps.push_back(labels[k + 1] - labels[k]);
    const std::set<Label> distinct(gaps.begin(), gaps.end());
    std::vector<int> levels;
    for (const auto g : gaps) levels.push_back(static_cast<int>(std::distance(distinct.begin(), distinct.find(g))));
    return levels;
}

std::string frame(const Splitting& s, const std::vector<std::vector<std::string>>& body) {
    std::ostringstream out;
    out << '+';
    for (const auto y : s.b) out << '\t' << y;
    out << '\n';
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        out << s.a[i];
        for (std::size_t j = 0; j < s.b.size(); ++j) out << '\t' << body[i][j];
        out << '\n';
    }
    return out.str();
}

std::string blocks_text(const Splitting& s) {
    const auto row_levels = boundary_levels(s.a);
    const auto col_levels = boundary_levels(s.b);
    const std::size_t width = std::to_string(std::max<std::int64_t>(s.cells() - 1, 0)).size();

    auto col_sep = [&](std::size_t j, char fill, bool crossing) {
        const int level = col_levels[j];
        if (level == 0) return std::string(1, fill);
        return std::string(1, fill) + std::string(static_cast<std::size_t>(level), crossing ? '+' : '|') +
               std::string(1, fill);
    };

    std::ostringstream out;
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        if (i > 0 && row_levels[i - 1] > 0) {
            const char fill = row_levels[i - 1] == 1 ? '-' : '=';
            for (std::size_t j = 0; j < s.b.size(); ++j) {
                if (j > 0) out << col_sep(j - 1, fill, true);
                out << std::string(width, fill);
            }
            out << '\n';
        }
        for (std::size_t j = 0; j < s.b.size(); ++j) {
            if (j > 0) out << col_sep(j - 1, ' ', false);
            const auto text = std::to_string(s.a[i] + s.b[j]);
            out << std::string(width - text.size(), ' ') << text;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string render_text(const Splitting& s, RenderView view) {
    switch (view) {
        case RenderView::values: {
            std::vector<std::vector<std::string>> body(s.a.size(), std::vector<std::string>(s.b.size()));
            for (std::size_t i = 0; i < s.a.size(); ++i) {
                for (std::size_t j = 0; j < s.b.size(); ++j) body[i][j] = std::to_string(s.a[i] + s.b[j]);
            }
            return frame(s, body);
        }
        case RenderView::path:
            require_valid(s);
            return frame(s, path_marks(s));
        case RenderView::blocks:
            require_valid(s);
            return blocks_text(s);
    }
    throw std::invalid_argument("unknown render view");
}

std::string render_svg(const Splitting& s, RenderView view) {
    if (view != RenderView::values) require_valid(s);
    constexpr int cell = 32;
    constexpr int margin = cell;  // label row / column
    const int w = margin + cell * static_cast<int>(s.b.size());
    const int h = margin + cell * static_cast<int>(s.a.size());
    auto cx = [&](std::size_t j) { return margin + cell * static_cast<int>(j) + cell / 2; };
    auto cy = [&](std::size_t i) { return margin + cell * static_cast<int>(i) + cell / 2; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
        << ' ' << h << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    out << "<text x=\"" << margin / 2 << "\" y=\"" << margin / 2 + 4 << "\">+</text>\n";
    for (std::size_t j = 0; j < s.b.size(); ++j) {
        out << "<text x=\"" << cx(j) << "\" y=\"" << margin / 2 + 4 << "\" font-weight=\"bold\">" << s.b[j] << "</text>\n";
    }
    for (std::size_t i = 0; i < s.a.size(); ++i) {
        out << "<text x=\"" << margin / 2 << "\" y=\"" << cy(i) + 4 << "\" font-weight=\"bold\">" << s.a[i] << "</text>\n";
    }
    for (std::size_t i = 0; i <= s.a.size(); ++i) {
        out << "<line x1=\"" << margin << "\" y1=\"" << margin + cell * static_cast<int>(i) << "\" x2=\"" << w
            << "\" y2=\"" << margin + cell * static_cast<int>(i) << "\" stroke=\"#bbb\"/>\n";
    }
    for (std::size_t j = 0; j <= s.b.size(); ++j) {
        out << "<line x1=\"" << margin + cell * static_cast<int>(j) << "\" y1=\"" << margin << "\" x2=\""
            << margin + cell * static_cast<int>(j) << "\" y2=\"" << h << "\" stroke=\"#bbb\"/>\n";
    }

    switch (view) {
        case RenderView::values:
            for (std::size_t i = 0; i < s.a.size(); ++i) {
                for (std::size_t j = 0; j < s.b.size(); ++j) {
                    out << "<text x=\"" << cx(j) << "\" y=\"" << cy(i) + 4 << "\">" << s.a[i] + s.b[j] << "</text>\n";
                }
            }
            break;
        case RenderView::path: {
            const auto pos = value_positions(s);
            out << "<polyline fill=\"none\" stroke=\"#c33\" stroke-width=\"2\" points=\"";
            for (std::size_t v = 0; v < pos.size(); ++v) {
                if (v) out << ' ';
                out << cx(pos[v].col) << ',' << cy(pos[v].row);
            }
            out << "\"/>\n";
            for (const auto& end : {pos.front(), pos.back()}) {
                out << "<circle cx=\"" << cx(end.col) << "\" cy=\"" << cy(end.row) << "\" r=\"5\" fill=\"#c33\"/>\n";
            }
            break;
        }
        case RenderView::blocks: {
            const auto row_levels = boundary_levels(s.a);
            const auto col_levels = boundary_levels(s.b);
            for (std::size_t i = 0; i < row_levels.size(); ++i) {
                if (row_levels[i] == 0) continue;
                const int y = margin + cell * static_cast<int>(i + 1);
                out << "<line x1=\"" << margin << "\" y1=\"" << y << "\" x2=\"" << w << "\" y2=\"" << y
                    << "\" stroke=\"black\" stroke-width=\"" << 1 + row_levels[i] << "\"/>\n";
            }
            for (std::size_t j = 0; j < col_levels.size(); ++j) {
                if (col_levels[j] == 0) continue;
                const int x = margin + cell * static_cast<int>(j + 1);
                out << "<line x1=\"" << x << "\" y1=\"" << margin << "\" x2=\"" << x << "\" y2=\"" << h
                    << "\" stroke=\"black\" stroke-width=\"" << 1 + col_levels[j] << "\"/>\n";
            }
            for (std::size_t i = 0; i < s.a.size(); ++i) {
                for (std::size_t j = 0; j < s.b.size(); ++j) {
                    out << "<text x=\"" << cx(j) << "\" y=\"" << cy(i) + 4 << "\">" << s.a[i] + s.b[j] << "</text>\n";
                }
            }
            break;
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace sumtable
