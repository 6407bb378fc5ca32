#pragma once

// Binary words read as lattice paths: '1' is a rise step (+1), '0' a fall
// step (-1). The forbidden factor is 1^j 0^i with 0 < i < j.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "patternforge/error.hpp"

namespace patternforge {

class Pattern {
public:
    Pattern(int ones, int zeros) : ones_(ones), zeros_(zeros) {
        if (!(0 < zeros && zeros < ones))
            throw InvalidPattern("pattern 1^" + std::to_string(ones) + " 0^" + std::to_string(zeros) +
                                 " requires 0 < i < j");
    }

    int j() const noexcept { return ones_; }
    int i() const noexcept { return zeros_; }
    std::size_t length() const noexcept { return static_cast<std::size_t>(ones_ + zeros_); }
    /// Ordinate gained by one copy of the factor.
    int drift() const noexcept { return ones_ - zeros_; }

    std::string factor() const {
        return std::string(static_cast<std::size_t>(ones_), '1') + std::string(static_cast<std::size_t>(zeros_), '0');
    }

    std::string name() const { return "p(" + std::to_string(ones_) + "," + std::to_string(zeros_) + ")"; }

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    int ones_;
    int zeros_;
};

class Word {
public:
    Word() = default;

    explicit Word(std::string bits) : bits_(std::move(bits)) {
        for (std::size_t t = 0; t < bits_.size(); ++t)
            if (bits_[t] != '0' && bits_[t] != '1')
                throw InvalidWord("word has a non-binary character at index " + std::to_string(t));
    }

    const std::string& bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }
    char operator[](std::size_t t) const { return bits_[t]; }

    int ones() const noexcept {
        int n = 0;
        for (char c : bits_) n += (c == '1');
        return n;
    }
    int zeros() const noexcept { return static_cast<int>(bits_.size()) - ones(); }
    /// Ordinate of the path's last point.
    int endpoint() const noexcept { return ones() - zeros(); }
    /// Membership in the class F: no more zeros than ones.
    bool in_class_f() const noexcept { return endpoint() >= 0; }

    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::string bits_;
};

/// Length first, then lexicographic.
inline bool shortlex_less(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

inline bool shortlex_less(const Word& a, const Word& b) { return shortlex_less(a.bits(), b.bits()); }

/// Ordinates of the |w|+1 path points, starting at 0.
inline std::vector<int> profile(std::string_view bits) {
    std::vector<int> heights;
    heights.reserve(bits.size() + 1);
    int y = 0;
    heights.push_back(y);
    for (char c : bits) {
        y += (c == '1') ? 1 : -1;
        heights.push_back(y);
    }
    return heights;
}

inline std::vector<int> profile(const Word& w) { return profile(w.bits()); }

/// Start indices of every occurrence of the factor, ascending.
///
/// Scans maximal runs: an occurrence sits at the tail of a run of at least j
/// ones that is followed by at least i zeros. 1^j 0^i has no proper border,
/// so occurrences never overlap and each 1-run/0-run boundary yields at most one.
inline std::vector<std::size_t> occurrences(std::string_view bits, const Pattern& p) {
    std::vector<std::size_t> found;
    const auto j = static_cast<std::size_t>(p.j());
    const auto i = static_cast<std::size_t>(p.i());
    std::size_t t = 0;
    while (t < bits.size()) {
        if (bits[t] != '1') {
            ++t;
            continue;
        }
        std::size_t ones_end = t;
        while (ones_end < bits.size() && bits[ones_end] == '1') ++ones_end;
        std::size_t zeros_end = ones_end;
        while (zeros_end < bits.size() && bits[zeros_end] == '0') ++zeros_end;
        if (ones_end - t >= j && zeros_end - ones_end >= i) found.push_back(ones_end - j);
        t = zeros_end;
    }
    return found;
}

inline std::vector<std::size_t> occurrences(const Word& w, const Pattern& p) { return occurrences(w.bits(), p); }

inline std::string complement(std::string_view bits) {
    std::string out(bits);
    for (char& c : out) c = (c == '1') ? '0' : '1';
    return out;
}

inline Word complement(const Word& w) { return Word(complement(w.bits())); }

}  // namespace patternforge
