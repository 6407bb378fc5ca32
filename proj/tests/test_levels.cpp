#include <catch_amalgamated.hpp>

#include <set>

#include "patternforge/levels.hpp"

using namespace patternforge;

namespace {

std::vector<std::string> survivor_words(const LevelCensus& c) {
    std::vector<std::string> out;
    for (const WordTally& w : c.survivors()) out.push_back(w.word);
    return out;
}

const WordTally* find_word(const LevelCensus& c, const std::string& w) {
    for (const WordTally& t : c.by_word)
        if (t.word == w) return &t;
    return nullptr;
}

RunOptions lenient(unsigned threads = 0) {
    RunOptions o;
    o.threads = threads;
    o.strict = false;
    return o;
}

// patterns on which the construction is bijective through level 8
const std::vector<Pattern> sound_patterns{Pattern(2, 1), Pattern(3, 2), Pattern(4, 3)};

std::vector<Pattern> small_patterns() {
    std::vector<Pattern> out;
    for (int j = 2; j <= 6; ++j)
        for (int i = 1; i < j && j + i <= 7; ++i) out.emplace_back(j, i);
    return out;
}

}  // namespace

TEST_CASE("first levels for p(2,1)") {
    const RunResult run = run_levels(Pattern(2, 1), 2);
    REQUIRE(run.levels.size() == 3);
    CHECK(survivor_words(run.levels[0]) == std::vector<std::string>{""});
    CHECK(survivor_words(run.levels[1]) == std::vector<std::string>{"1", "01", "10"});
    CHECK(survivor_words(run.levels[2]) == std::vector<std::string>{"11", "011", "101", "0011", "0101", "1001", "1010"});
    for (const char* w : {"110", "1100", "0110"}) {
        const WordTally* t = find_word(run.levels[2], w);
        REQUIRE(t);
        CHECK(t->tally == Tally{1, 1});
    }
    CHECK(run.violations.empty());
}

TEST_CASE("jump-j children past the last level are not built") {
    const RunResult run = run_levels(Pattern(3, 1), 2);
    CHECK(run.jumpj_expansions == 0);
    CHECK(run.multiset_checks == 0);
    CHECK_THROWS_AS(run_levels(Pattern(2, 1), -1), Error);
}

TEST_CASE("copies of a word") {
    const RunResult run = run_levels(Pattern(2, 1), 4);
    auto copies = collect_copies(run, Word("110"));
    REQUIRE(copies.size() == 2);
    std::multiset<Sign> signs;
    for (const Copy& c : copies) signs.insert(c.sign);
    CHECK(signs.count(Sign::plus) == 1);
    for (const Copy& c : copies)
        if (c.sign == Sign::minus) CHECK(to_string(c.mw) == "110@0");
        else CHECK(to_string(c.provenance) == "0 r1 r1");

    copies = collect_copies(run, Word("11"));
    REQUIRE(copies.size() == 1);
    CHECK(copies[0].sign == Sign::plus);

    copies = collect_copies(run, Word("110110"));
    REQUIRE(copies.size() == 4);
    CHECK(std::count_if(copies.begin(), copies.end(), [](const Copy& c) { return c.sign == Sign::plus; }) == 2);

    CHECK_THROWS_AS(collect_copies(run, Word("11111")), Error);
}

TEST_CASE("labels are endpoints and signs follow the span count") {
    for (const Pattern& p : small_patterns()) {
        INFO(p.name());
        const RunResult run = run_levels(p, 8, lenient());
        for (const LevelCensus& level : run.levels)
            for (const TreeNode& n : level.nodes) {
                REQUIRE(n.label == n.mw.word.endpoint());
                REQUIRE(n.level == level.level);
                REQUIRE(n.mw.word.ones() == level.level);
                REQUIRE((n.sign == Sign::minus) == (n.mw.spans.size() % 2 == 1));
                REQUIRE_NOTHROW(validate(n.mw, p));
            }
    }
}

TEST_CASE("no two nodes of a level share word, spans and provenance") {
    for (const Pattern& p : small_patterns()) {
        INFO(p.name());
        const RunResult run = run_levels(p, 7, lenient());
        for (const LevelCensus& level : run.levels) {
            std::set<std::tuple<std::string, std::vector<std::size_t>, std::string>> seen;
            for (const TreeNode& n : level.nodes)
                REQUIRE(seen.emplace(n.mw.word.bits(), n.mw.spans, to_string(n.provenance)).second);
        }
    }
}

TEST_CASE("every word appears 2^C times with balanced signs") {
    for (const Pattern& p : sound_patterns) {
        INFO(p.name());
        const RunResult run = run_levels(p, 6);
        for (const LevelCensus& level : run.levels)
            for (const WordTally& w : level.by_word) {
                INFO(w.word);
                const auto c = occurrences(w.word, p).size();
                if (c == 0)
                    REQUIRE(w.tally == Tally{1, 0});
                else
                    REQUIRE(w.tally == Tally{std::int64_t{1} << (c - 1), std::int64_t{1} << (c - 1)});
            }
    }
}

TEST_CASE("survivors and label nets match the oracles") {
    for (const Pattern& p : sound_patterns) {
        INFO(p.name());
        const RunResult run = run_levels(p, 8);
        const VerifyReport report = verify_against_oracle(run);
        for (const LevelVerdict& v : report.levels) {
            INFO("level " << v.level << (v.divergences.empty() ? "" : ": " + v.divergences.front()));
            CHECK(v.pass);
        }
        CHECK(run.violations.empty());
        CHECK(run.multiset_checks > 0);
    }
}

TEST_CASE("a missing extra child is caught at level 1") {
    RunResult run = run_levels(Pattern(2, 1), 2);
    std::vector<TreeNode> nodes = run.levels[1].nodes;
    std::erase_if(nodes, [](const TreeNode& n) { return n.mw.word.bits() == "01"; });
    run.levels[1] = detail::tally_level(1, nodes, run.pattern);
    const VerifyReport report = verify_against_oracle(run);
    CHECK_FALSE(report.pass());
    CHECK(report.levels[0].pass);
    REQUIRE_FALSE(report.levels[1].pass);
    CHECK(report.levels[1].divergences.front() == "missing survivor '01'");
}

TEST_CASE("thread count does not change the result") {
    for (const Pattern& p : {Pattern(2, 1), Pattern(4, 1)}) {
        const RunResult a = run_levels(p, 7, lenient(1));
        const RunResult b = run_levels(p, 7, lenient(4));
        REQUIRE(a.levels.size() == b.levels.size());
        for (std::size_t n = 0; n < a.levels.size(); ++n) {
            REQUIRE(a.levels[n].nodes.size() == b.levels[n].nodes.size());
            for (std::size_t q = 0; q < a.levels[n].nodes.size(); ++q) {
                const TreeNode& x = a.levels[n].nodes[q];
                const TreeNode& y = b.levels[n].nodes[q];
                REQUIRE(x.mw == y.mw);
                REQUIRE(x.sign == y.sign);
                REQUIRE(x.provenance == y.provenance);
            }
        }
    }
}

TEST_CASE("node cancellation keeps the nets") {
    RunOptions cancel = lenient();
    cancel.cancel_nodes = true;
    for (const Pattern& p : sound_patterns) {
        const RunResult plain = run_levels(p, 7, lenient());
        const RunResult pruned = run_levels(p, 7, cancel);
        for (std::size_t n = 0; n < plain.levels.size(); ++n) {
            REQUIRE(survivor_words(plain.levels[n]) == survivor_words(pruned.levels[n]));
            for (const auto& [label, t] : plain.levels[n].by_label) {
                const auto it = pruned.levels[n].by_label.find(label);
                const std::int64_t net = it == pruned.levels[n].by_label.end() ? 0 : it->second.net();
                REQUIRE(net == t.net());
            }
            REQUIRE(pruned.levels[n].nodes.size() <= plain.levels[n].nodes.size());
        }
    }
}

TEST_CASE("worker count honours the environment cap") {
    CHECK(worker_count(3) >= 1);
    CHECK(worker_count(1) == 1);
}
