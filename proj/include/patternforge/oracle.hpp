#pragma once

// Ground truth for the construction, built from first principles: exhaustive
// enumeration of the words of F with n ones, and a dynamic program over the
// automaton that recognises the forbidden factor.

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "patternforge/error.hpp"
#include "patternforge/word.hpp"

namespace patternforge {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::size_t default_brute_force_budget = 10'000'000;

/// Number of candidate words with n ones and at most n zeros.
inline BigCount candidate_count(int ones) {
    BigCount total = 0;
    BigCount binom = 1;  // C(n+m, m)
    for (int m = 0; m <= ones; ++m) {
        if (m > 0) binom = binom * (ones + m) / m;
        total += binom;
    }
    return total;
}

/// Every word with `ones` ones and m <= ones zeros that avoids the factor,
/// sorted by length then lexicographically.
inline std::vector<Word> brute_force(const Pattern& p, int ones, std::size_t budget = default_brute_force_budget) {
    if (ones < 0) throw Error("brute_force: negative number of ones");
    if (candidate_count(ones) > budget)
        throw BudgetExceeded("brute_force over " + std::to_string(ones) + " ones needs " +
                             candidate_count(ones).str() + " candidates, budget is " + std::to_string(budget));
    const std::string factor = p.factor();
    std::vector<Word> out;
    for (int m = 0; m <= ones; ++m) {
        std::string w = std::string(static_cast<std::size_t>(m), '0') + std::string(static_cast<std::size_t>(ones), '1');
        do {
            if (w.find(factor) == std::string::npos) out.emplace_back(w);
        } while (std::next_permutation(w.begin(), w.end()));
    }
    return out;
}

/// DFA over {0,1}; state s < length means the longest suffix read so far that
/// is a prefix of the factor has length s. State `length` is the absorbing
/// dead state.
class FactorAutomaton {
public:
    explicit FactorAutomaton(const Pattern& p) : factor_(p.factor()), next_(factor_.size() + 1) {
        const std::size_t len = factor_.size();
        std::vector<std::size_t> border(len + 1, 0);
        for (std::size_t q = 1, b = 0; q < len; ++q) {
            while (b > 0 && factor_[q] != factor_[b]) b = border[b];
            if (factor_[q] == factor_[b]) ++b;
            border[q + 1] = b;
        }
        for (std::size_t s = 0; s <= len; ++s) {
            for (int bit = 0; bit < 2; ++bit) {
                if (s == len) {
                    next_[s][bit] = len;
                    continue;
                }
                const char c = bit ? '1' : '0';
                std::size_t q = s;
                while (q > 0 && factor_[q] != c) q = border[q];
                next_[s][bit] = (factor_[q] == c) ? q + 1 : 0;
            }
        }
    }

    std::size_t state_count() const noexcept { return next_.size(); }
    std::size_t dead_state() const noexcept { return factor_.size(); }
    std::size_t start_state() const noexcept { return 0; }

    std::size_t next(std::size_t state, char c) const { return next_.at(state)[c == '1' ? 1 : 0]; }

    std::size_t run(std::string_view bits) const {
        std::size_t s = start_state();
        for (char c : bits) s = next(s, c);
        return s;
    }

    bool accepts(std::string_view bits) const { return run(bits) != dead_state(); }

private:
    std::string factor_;
    std::vector<std::array<std::size_t, 2>> next_;
};

inline FactorAutomaton build_automaton(const Pattern& p) { return FactorAutomaton(p); }

/// table[o][z] = number of avoiding words with o ones and z zeros.
inline std::vector<std::vector<BigCount>> avoiding_count_table(const Pattern& p, int max_ones, int max_zeros) {
    const FactorAutomaton dfa(p);
    const std::size_t states = dfa.state_count();
    const auto O = static_cast<std::size_t>(max_ones) + 1;
    const auto Z = static_cast<std::size_t>(max_zeros) + 1;
    // dp[z][o][s]
    std::vector<std::vector<std::vector<BigCount>>> dp(Z, std::vector<std::vector<BigCount>>(O, std::vector<BigCount>(states)));
    dp[0][0][dfa.start_state()] = 1;
    for (std::size_t z = 0; z < Z; ++z) {
        for (std::size_t o = 0; o < O; ++o) {
            for (std::size_t s = 0; s < states; ++s) {
                const BigCount& here = dp[z][o][s];
                if (here == 0 || s == dfa.dead_state()) continue;
                if (o + 1 < O) dp[z][o + 1][dfa.next(s, '1')] += here;
                if (z + 1 < Z) dp[z + 1][o][dfa.next(s, '0')] += here;
            }
        }
    }
    std::vector<std::vector<BigCount>> table(O, std::vector<BigCount>(Z));
    for (std::size_t o = 0; o < O; ++o)
        for (std::size_t z = 0; z < Z; ++z)
            for (std::size_t s = 0; s < states; ++s)
                if (s != dfa.dead_state()) table[o][z] += dp[z][o][s];
    return table;
}

inline BigCount count_avoiding(const Pattern& p, int ones, int zeros) {
    if (ones < 0 || zeros < 0) throw Error("count_avoiding: negative size");
    return avoiding_count_table(p, ones, zeros)[static_cast<std::size_t>(ones)][static_cast<std::size_t>(zeros)];
}

/// Avoiding words of F with exactly `ones` ones.
inline BigCount level_count(const Pattern& p, int ones) {
    if (ones < 0) throw Error("level_count: negative number of ones");
    const auto table = avoiding_count_table(p, ones, ones);
    BigCount total = 0;
    for (const BigCount& c : table[static_cast<std::size_t>(ones)]) total += c;
    return total;
}

}  // namespace patternforge
