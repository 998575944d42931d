#include "sumtable/splitting.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sumtable {

Splitting canonicalize(Splitting s) {
    std::sort(s.a.begin(), s.a.end());
    std::sort(s.b.begin(), s.b.end());
    if (s.rows == s.cols && std::binary_search(s.a.begin(), s.a.end(), Label{1})) {
        std::swap(s.a, s.b);
    }
    return s;
}

void sort_unique(std::vector<Splitting>& list) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
}

std::string join_labels(const LabelSet& labels, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i) out << sep;
        out << labels[i];
    }
    return out.str();
}

LabelSet parse_labels(const std::string& text) {
    LabelSet out;
    const char* p = text.data();
    const char* end = p + text.size();
    auto is_sep = [](char ch) { return ch == ',' || ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
    while (p < end) {
        while (p < end && is_sep(*p)) ++p;
        if (p == end) break;
        Label value{};
        const auto [next, ec] = std::from_chars(p, end, value);
        if (ec != std::errc{} || (next < end && !is_sep(*next))) {
            throw std::invalid_argument("cannot parse label list near '" + std::string(p, std::min(end, p + 16)) + "'");
        }
        out.push_back(value);
        p = next;
    }
    return out;
}

}  // namespace sumtable
