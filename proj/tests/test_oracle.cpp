#include <catch_amalgamated.hpp>

#include "patternforge/oracle.hpp"

using namespace patternforge;

namespace {
std::vector<std::string> bits_of(const std::vector<Word>& words) {
    std::vector<std::string> out;
    for (const Word& w : words) out.push_back(w.bits());
    return out;
}
}  // namespace

TEST_CASE("brute force examples") {
    const Pattern p(2, 1);
    CHECK(bits_of(brute_force(p, 0)) == std::vector<std::string>{""});
    CHECK(bits_of(brute_force(p, 1)) == std::vector<std::string>{"1", "01", "10"});
    CHECK(bits_of(brute_force(p, 2)) == std::vector<std::string>{"11", "011", "101", "0011", "0101", "1001", "1010"});
    CHECK_THROWS_AS(brute_force(p, -1), Error);
}

TEST_CASE("brute force respects its budget") {
    CHECK(candidate_count(2) == 10);
    CHECK_THROWS_AS(brute_force(Pattern(2, 1), 2, 9), BudgetExceeded);
    CHECK_NOTHROW(brute_force(Pattern(2, 1), 2, 10));
}

TEST_CASE("automaton transitions") {
    const FactorAutomaton a = build_automaton(Pattern(2, 1));
    CHECK(a.state_count() == 4);
    CHECK(a.dead_state() == 3);
    CHECK(a.next(2, '1') == 2);
    CHECK(a.next(2, '0') == a.dead_state());
    CHECK(a.next(a.dead_state(), '1') == a.dead_state());
    CHECK(build_automaton(Pattern(3, 1)).next(0, '0') == 0);
    CHECK(a.accepts("10101"));
    CHECK_FALSE(a.accepts("01101"));
}

TEST_CASE("automaton is total and agrees with substring search") {
    for (int j = 2; j <= 6; ++j)
        for (int i = 1; i < j && j + i <= 7; ++i) {
            const Pattern p(j, i);
            const FactorAutomaton a(p);
            REQUIRE(a.state_count() == p.length() + 1);
            for (std::size_t s = 0; s < a.state_count(); ++s)
                for (char c : {'0', '1'}) REQUIRE(a.next(s, c) < a.state_count());
            for (std::size_t len = 0; len <= 12; ++len)
                for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
                    std::string w(len, '0');
                    for (std::size_t t = 0; t < len; ++t)
                        if (mask >> t & 1) w[t] = '1';
                    REQUIRE(a.accepts(w) == (w.find(p.factor()) == std::string::npos));
                }
        }
}

TEST_CASE("count examples") {
    const Pattern p(2, 1);
    CHECK(count_avoiding(p, 2, 2) == 4);
    CHECK(count_avoiding(p, 2, 1) == 2);
    CHECK(count_avoiding(Pattern(4, 3), 0, 0) == 1);
    CHECK(level_count(p, 2) == 7);
    CHECK(level_count(p, 1) == 3);
    CHECK(level_count(Pattern(5, 2), 0) == 1);
    CHECK_THROWS_AS(count_avoiding(p, -1, 0), Error);
}

TEST_CASE("the two oracles agree") {
    for (int j = 2; j <= 6; ++j)
        for (int i = 1; i < j && j + i <= 7; ++i) {
            const Pattern p(j, i);
            for (int n = 0; n <= 7; ++n) REQUIRE(BigCount(brute_force(p, n).size()) == level_count(p, n));
        }
}

TEST_CASE("a longer factor is avoided by at least as many words") {
    for (int j = 2; j <= 5; ++j)
        for (int i = 1; i < j; ++i) {
            const auto shorter = avoiding_count_table(Pattern(j, i), 9, 9);
            const auto longer = avoiding_count_table(Pattern(j + 1, i), 9, 9);
            for (int n = 0; n <= 9; ++n)
                for (int m = 0; m <= 9; ++m) REQUIRE(shorter[n][m] <= longer[n][m]);
        }
}

TEST_CASE("counts need more than 64 bits") {
    // central binomial growth overflows 64 bits well before 40 ones
    const BigCount c = count_avoiding(Pattern(6, 5), 40, 40);
    CHECK(c > BigCount(std::numeric_limits<std::uint64_t>::max()));
}
