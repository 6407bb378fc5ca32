#pragma once

// A marked word is a binary word together with the copies of the factor that
// are "marked": atomic blocks whose steps can never be separated by a cut.
// A marked span is identified by its start index; its length is the pattern
// length and its marked point is its peak (the point after the j-th rise).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "patternforge/error.hpp"
#include "patternforge/word.hpp"

namespace patternforge {

struct MarkedSpan {
    std::size_t start = 0;
    std::size_t length = 0;
    /// Ordinate of the marked peak.
    int peak = 0;

    std::size_t end() const noexcept { return start + length; }
    std::size_t peak_index(const Pattern& p) const noexcept { return start + static_cast<std::size_t>(p.j()); }
};

struct MarkedWord {
    Word word;
    /// Start indices of the marked spans, strictly increasing.
    std::vector<std::size_t> spans;

    std::size_t marked_count() const noexcept { return spans.size(); }

    friend bool operator==(const MarkedWord&, const MarkedWord&) = default;
    friend auto operator<=>(const MarkedWord&, const MarkedWord&) = default;
};

/// Text form "bits@s1,s2,..." ("bits" alone when nothing is marked).
inline std::string to_string(const MarkedWord& mw) {
    std::string out = mw.word.bits();
    if (mw.spans.empty()) return out;
    out += '@';
    for (std::size_t q = 0; q < mw.spans.size(); ++q) {
        if (q) out += ',';
        out += std::to_string(mw.spans[q]);
    }
    return out;
}

inline std::vector<std::size_t> parse_span_list(std::string_view text) {
    std::vector<std::size_t> spans;
    if (text.empty()) return spans;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string_view item = text.substr(pos, comma - pos);
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw InvalidWord("bad span index '" + std::string(item) + "'");
        spans.push_back(std::stoul(std::string(item)));
        pos = comma + 1;
    }
    std::sort(spans.begin(), spans.end());
    return spans;
}

inline MarkedWord parse_marked_word(std::string_view text) {
    const std::size_t at = text.find('@');
    MarkedWord mw{Word(std::string(text.substr(0, at))), {}};
    if (at != std::string_view::npos) mw.spans = parse_span_list(text.substr(at + 1));
    return mw;
}

/// Throws InvalidWord unless every span lies in bounds, covers the factor and
/// spans are pairwise disjoint.
inline void validate(const MarkedWord& mw, const Pattern& p) {
    const std::string factor = p.factor();
    for (std::size_t q = 0; q < mw.spans.size(); ++q) {
        const std::size_t s = mw.spans[q];
        if (s + p.length() > mw.word.size() || mw.word.bits().compare(s, p.length(), factor) != 0)
            throw InvalidWord("span at " + std::to_string(s) + " does not cover " + factor + " in " +
                              mw.word.bits());
        if (q > 0 && mw.spans[q - 1] + p.length() > s)
            throw InvalidWord("spans at " + std::to_string(mw.spans[q - 1]) + " and " + std::to_string(s) +
                              " overlap");
    }
}

inline std::vector<MarkedSpan> marked_spans(const MarkedWord& mw, const Pattern& p) {
    const std::vector<int> heights = profile(mw.word);
    std::vector<MarkedSpan> out;
    out.reserve(mw.spans.size());
    for (std::size_t s : mw.spans)
        out.push_back(MarkedSpan{s, p.length(), heights[s + static_cast<std::size_t>(p.j())]});
    return out;
}

/// True when path point `point` lies between two steps of one marked span.
inline bool strictly_inside(std::size_t point, const std::vector<std::size_t>& spans, std::size_t span_length) {
    auto it = std::lower_bound(spans.begin(), spans.end(), point);
    if (it == spans.begin()) return false;
    --it;
    return *it < point && point < *it + span_length;
}

struct SuffixSplit {
    Word prefix;
    Word suffix;
    std::size_t start = 0;
};

/// Splits at the rightmost axis point that is neither strictly inside a span
/// nor the final point; the whole word when there is none.
inline std::size_t rightmost_suffix_start(const MarkedWord& mw, const Pattern& p) {
    const std::vector<int> heights = profile(mw.word);
    for (std::size_t t = mw.word.size(); t-- > 0;)
        if (heights[t] == 0 && !strictly_inside(t, mw.spans, p.length())) return t;
    return 0;
}

inline SuffixSplit rightmost_suffix(const MarkedWord& mw, const Pattern& p) {
    const std::size_t start = rightmost_suffix_start(mw, p);
    const std::string& bits = mw.word.bits();
    return SuffixSplit{Word(bits.substr(0, start)), Word(bits.substr(start)), start};
}

enum class PathKind { DeltaOnAxis, DeltaAboveAxis, Gamma };

inline const char* to_string(PathKind kind) {
    switch (kind) {
        case PathKind::DeltaOnAxis: return "delta-on-axis";
        case PathKind::DeltaAboveAxis: return "delta-above-axis";
        case PathKind::Gamma: return "gamma";
    }
    return "?";
}

struct PathClass {
    PathKind kind = PathKind::DeltaOnAxis;
    /// Start of the suffix rho (meaningful for the two off-axis kinds).
    std::size_t suffix_start = 0;
    /// Start of the span with i < b < j that makes the path a Gamma-path.
    std::optional<std::size_t> qualifying_span;

    bool is_delta() const noexcept { return kind != PathKind::Gamma; }
};

inline PathClass classify(const MarkedWord& mw, const Pattern& p) {
    const std::vector<int> heights = profile(mw.word);
    const int k = heights.back();
    if (k < 0) throw Unclassifiable(to_string(mw) + " ends below the axis");
    const std::size_t start = rightmost_suffix_start(mw, p);
    if (k == 0) return PathClass{PathKind::DeltaOnAxis, start, std::nullopt};

    const std::size_t j = static_cast<std::size_t>(p.j());
    if (mw.word[start] == '1') {
        const bool above = std::all_of(heights.begin() + static_cast<std::ptrdiff_t>(start) + 1, heights.end(),
                                       [](int y) { return y > 0; });
        if (above) {
            for (std::size_t s : mw.spans)
                if (s >= start && heights[s + j] < p.j())
                    throw Unclassifiable(to_string(mw) + ": marked peak below j inside a Delta suffix");
            return PathClass{PathKind::DeltaAboveAxis, start, std::nullopt};
        }
    } else {
        for (std::size_t s : mw.spans) {
            const int b = heights[s + j];
            if (s >= start && p.i() < b && b < p.j()) return PathClass{PathKind::Gamma, start, s};
        }
    }
    throw Unclassifiable(to_string(mw) + " is neither a Delta-path nor a Gamma-path");
}

}  // namespace patternforge
