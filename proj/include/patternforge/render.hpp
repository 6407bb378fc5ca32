#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <string>
#include <vector>

#include "patternforge/marked_word.hpp"
#include "patternforge/word.hpp"

namespace patternforge {

/// ASCII drawing of a lattice path, one row per ordinate from the highest
/// down, one column per path point. 'o' is a path point, '*' a marked peak,
/// '.' the axis. A last row brackets each marked span: '[' under its first
/// point, ']' under its last.
inline std::string render_path(const MarkedWord& mw, std::size_t span_length, std::size_t span_ones) {
    const std::vector<int> heights = profile(mw.word);
    const int top = *std::max_element(heights.begin(), heights.end());
    const int bottom = *std::min_element(heights.begin(), heights.end());

    std::vector<bool> marked_peak(heights.size(), false);
    for (std::size_t s : mw.spans)
        if (s + span_ones < heights.size()) marked_peak[s + span_ones] = true;

    std::string out;
    for (int y = top; y >= bottom; --y) {
        char prefix[16];
        std::snprintf(prefix, sizeof prefix, "%3d |", y);
        std::string row = prefix;
        for (std::size_t t = 0; t < heights.size(); ++t) {
            if (heights[t] == y)
                row += marked_peak[t] ? '*' : 'o';
            else
                row += (y == 0) ? '.' : ' ';
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row + '\n';
    }
    if (!mw.spans.empty()) {
        std::string row(heights.size(), ' ');
        for (std::size_t s : mw.spans) {
            for (std::size_t t = s + 1; t < s + span_length && t < row.size(); ++t) row[t] = '-';
            row[s] = '[';
            if (s + span_length < row.size()) row[s + span_length] = ']';
        }
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += "    |" + row + '\n';
    }
    return out;
}

}  // namespace patternforge
