#pragma once

// Level-by-level driver for the construction: expands every node (both
// signs), files children into per-level buckets, and tallies each level by
// label and by word. A word's net multiplicity is #plus - #minus; the
// construction is sound when it is 1 for avoiding words and 0 otherwise.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iterator>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "patternforge/construction.hpp"
#include "patternforge/error.hpp"
#include "patternforge/marked_word.hpp"
#include "patternforge/oracle.hpp"
#include "patternforge/word.hpp"

namespace patternforge {

struct Tally {
    std::int64_t plus = 0;
    std::int64_t minus = 0;

    std::int64_t net() const noexcept { return plus - minus; }
    void add(Sign s) noexcept { (s == Sign::plus ? plus : minus) += 1; }

    friend bool operator==(const Tally&, const Tally&) = default;
};

struct WordTally {
    std::string word;
    Tally tally;
};

struct NetViolation {
    int level = 0;
    std::string word;
    std::int64_t net = 0;
    std::vector<std::string> provenances;
};

struct LevelCensus {
    int level = 0;
    /// Nodes after sorting by (word, spans, sign, provenance).
    std::vector<TreeNode> nodes;
    std::map<int, Tally> by_label;
    /// Sorted by length, then lexicographically.
    std::vector<WordTally> by_word;
    std::size_t delta_nodes = 0;
    std::size_t gamma_nodes = 0;

    std::vector<WordTally> survivors() const {
        std::vector<WordTally> out;
        for (const WordTally& w : by_word)
            if (w.tally.net() == 1) out.push_back(w);
        return out;
    }
};

struct RunOptions {
    /// 0 picks the hardware concurrency. PATTERNFORGE_THREADS caps either value.
    unsigned threads = 0;
    /// Drop (word, spans) node pairs of opposite sign before expanding them.
    bool cancel_nodes = false;
    /// Throw NetOutOfRange at the first offending level instead of recording it.
    bool strict = true;
};

struct RunResult {
    Pattern pattern;
    int max_ones = 0;
    std::vector<LevelCensus> levels;
    std::vector<NetViolation> violations;
    std::size_t jumpj_expansions = 0;
    /// Every jump-j expansion is checked against the production's multiset.
    std::size_t multiset_checks = 0;

    std::size_t gamma_nodes() const {
        std::size_t n = 0;
        for (const LevelCensus& l : levels) n += l.gamma_nodes;
        return n;
    }
};

inline unsigned worker_count(unsigned requested) {
    unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap = std::getenv("PATTERNFORGE_THREADS")) {
        const long v = std::strtol(cap, nullptr, 10);
        if (v > 0) n = std::min(n, static_cast<unsigned>(v));
    }
    return std::max(1u, n);
}

namespace detail {

inline bool node_less(const TreeNode& a, const TreeNode& b) {
    if (a.mw.word.bits() != b.mw.word.bits()) return a.mw.word.bits() < b.mw.word.bits();
    if (a.mw.spans != b.mw.spans) return a.mw.spans < b.mw.spans;
    if (a.sign != b.sign) return a.sign < b.sign;
    return a.provenance < b.provenance;
}

/// Runs fn(index) for every index in [0, n) on up to `workers` threads;
/// rethrows the first exception in index order.
template <class Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    if (workers <= 1 || n < 2) {
        for (std::size_t q = 0; q < n; ++q) fn(q);
        return;
    }
    const std::size_t chunks = std::min<std::size_t>(workers, n);
    std::vector<std::exception_ptr> errors(chunks);
    {
        std::vector<std::jthread> pool;
        pool.reserve(chunks);
        for (std::size_t c = 0; c < chunks; ++c) {
            pool.emplace_back([&, c] {
                try {
                    for (std::size_t q = c * n / chunks; q < (c + 1) * n / chunks; ++q) fn(q);
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
}

inline void cancel_opposite_pairs(std::vector<TreeNode>& nodes) {
    std::vector<TreeNode> kept;
    kept.reserve(nodes.size());
    std::size_t q = 0;
    while (q < nodes.size()) {
        std::size_t r = q;
        while (r < nodes.size() && nodes[r].mw == nodes[q].mw) ++r;
        std::vector<std::size_t> plus, minus;
        for (std::size_t s = q; s < r; ++s) (nodes[s].sign == Sign::plus ? plus : minus).push_back(s);
        const std::size_t paired = std::min(plus.size(), minus.size());
        for (std::size_t s = paired; s < plus.size(); ++s) kept.push_back(std::move(nodes[plus[s]]));
        for (std::size_t s = paired; s < minus.size(); ++s) kept.push_back(std::move(nodes[minus[s]]));
        q = r;
    }
    std::sort(kept.begin(), kept.end(), node_less);
    nodes = std::move(kept);
}

inline LevelCensus tally_level(int level, std::vector<TreeNode> nodes, const Pattern& p) {
    LevelCensus census;
    census.level = level;
    std::sort(nodes.begin(), nodes.end(), node_less);
    std::map<std::string, Tally> words;
    for (const TreeNode& n : nodes) {
        census.by_label[n.label].add(n.sign);
        words[n.mw.word.bits()].add(n.sign);
        if (classify(n.mw, p).is_delta())
            ++census.delta_nodes;
        else
            ++census.gamma_nodes;
    }
    for (auto& [w, t] : words) census.by_word.push_back(WordTally{w, t});
    std::sort(census.by_word.begin(), census.by_word.end(),
              [](const WordTally& a, const WordTally& b) { return shortlex_less(a.word, b.word); });
    census.nodes = std::move(nodes);
    return census;
}

}  // namespace detail

/// Builds levels 0..max_ones from the axiom (the empty path, label 0).
inline RunResult run_levels(const Pattern& p, int max_ones, const RunOptions& options = {}) {
    if (max_ones < 0) throw Error("run_levels: max_ones must be non-negative");
    const unsigned workers = worker_count(options.threads);
    const auto N = static_cast<std::size_t>(max_ones);

    RunResult result{p, max_ones, {}, {}, 0, 0};
    std::vector<std::vector<TreeNode>> pending(N + 1);
    pending[0].push_back(axiom_node());

    for (std::size_t n = 0; n <= N; ++n) {
        LevelCensus census = detail::tally_level(static_cast<int>(n), std::move(pending[n]), p);
        pending[n].clear();

        for (const WordTally& w : census.by_word) {
            const std::int64_t net = w.tally.net();
            if (net == 0 || net == 1) continue;
            NetViolation v{static_cast<int>(n), w.word, net, {}};
            for (const TreeNode& node : census.nodes)
                if (node.mw.word.bits() == w.word)
                    v.provenances.push_back(std::string(to_string(node.sign)) + " " + to_string(node.mw) + " " +
                                            to_string(node.provenance));
            if (options.strict) {
                std::string msg = p.name() + " level " + std::to_string(n) + ": word '" + w.word + "' has net " +
                                  std::to_string(net);
                for (const std::string& s : v.provenances) msg += "\n  " + s;
                throw NetOutOfRange(msg);
            }
            result.violations.push_back(std::move(v));
        }

        if (n < N) {
            std::vector<TreeNode> frontier = census.nodes;
            if (options.cancel_nodes) detail::cancel_opposite_pairs(frontier);
            const bool want_jumpj = n + static_cast<std::size_t>(p.j()) <= N;
            std::vector<Expansion> expansions(frontier.size());
            detail::parallel_for(frontier.size(), workers, [&](std::size_t q) {
                expansions[q] = expand_node(frontier[q], p, want_jumpj);
            });
            for (Expansion& e : expansions) {
                for (TreeNode& c : e.jump1) pending[n + 1].push_back(std::move(c));
                if (!want_jumpj) continue;
                ++result.jumpj_expansions;
                if (e.a) ++result.multiset_checks;
                for (TreeNode& c : e.jumpj) pending[n + static_cast<std::size_t>(p.j())].push_back(std::move(c));
            }
        }
        result.levels.push_back(std::move(census));
    }
    return result;
}

struct Copy {
    Sign sign;
    MarkedWord mw;
    std::vector<Step> provenance;
};

/// Every node of the word's level whose underlying word is `word`.
inline std::vector<Copy> collect_copies(const RunResult& run, const Word& word) {
    const int level = word.ones();
    if (level > run.max_ones)
        throw Error("collect_copies: run stops at level " + std::to_string(run.max_ones) + ", word needs " +
                    std::to_string(level));
    std::vector<Copy> out;
    for (const TreeNode& n : run.levels[static_cast<std::size_t>(level)].nodes)
        if (n.mw.word == word) out.push_back(Copy{n.sign, n.mw, n.provenance});
    return out;
}

struct LevelVerdict {
    int level = 0;
    bool pass = true;
    std::size_t expected_survivors = 0;
    std::size_t actual_survivors = 0;
    std::vector<std::string> divergences;
};

struct VerifyReport {
    Pattern pattern;
    std::vector<LevelVerdict> levels;

    bool pass() const {
        return std::all_of(levels.begin(), levels.end(), [](const LevelVerdict& l) { return l.pass; });
    }
};

/// Survivors against brute force, per-label nets against the automaton count
/// of avoiding words with n ones and n-k zeros.
inline VerifyReport verify_against_oracle(const RunResult& run, std::size_t budget = default_brute_force_budget) {
    const Pattern& p = run.pattern;
    VerifyReport report{p, {}};
    const auto table = avoiding_count_table(p, run.max_ones, run.max_ones);
    for (const LevelCensus& census : run.levels) {
        const int n = census.level;
        LevelVerdict v;
        v.level = n;

        std::vector<std::string> expected;
        for (const Word& w : brute_force(p, n, budget)) expected.push_back(w.bits());
        std::vector<std::string> actual;
        for (const WordTally& w : census.survivors()) actual.push_back(w.word);
        v.expected_survivors = expected.size();
        v.actual_survivors = actual.size();

        std::vector<std::string> missing, spurious;
        auto cmp = [](const std::string& a, const std::string& b) { return shortlex_less(a, b); };
        std::set_difference(expected.begin(), expected.end(), actual.begin(), actual.end(), std::back_inserter(missing), cmp);
        std::set_difference(actual.begin(), actual.end(), expected.begin(), expected.end(), std::back_inserter(spurious), cmp);
        for (const std::string& w : missing) v.divergences.push_back("missing survivor '" + w + "'");
        for (const std::string& w : spurious) v.divergences.push_back("spurious survivor '" + w + "'");

        for (int k = 0; k <= n; ++k) {
            const BigCount want = table[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - k)];
            auto it = census.by_label.find(k);
            const BigCount got = it == census.by_label.end() ? BigCount(0) : BigCount(it->second.net());
            if (got != want)
                v.divergences.push_back("label " + std::to_string(k) + ": net " + got.str() + ", expected " + want.str());
        }
        for (const auto& [label, tally] : census.by_label)
            if ((label < 0 || label > n) && tally.net() != 0)
                v.divergences.push_back("label " + std::to_string(label) + ": net " + std::to_string(tally.net()) +
                                        ", expected 0");
        v.pass = v.divergences.empty();
        report.levels.push_back(std::move(v));
    }
    return report;
}

}  // namespace patternforge
