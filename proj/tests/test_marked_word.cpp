#include <catch_amalgamated.hpp>

#include "patternforge/marked_word.hpp"

using namespace patternforge;

namespace {
MarkedWord mw(const std::string& bits, std::vector<std::size_t> spans = {}) { return MarkedWord{Word(bits), std::move(spans)}; }
}  // namespace

TEST_CASE("marked word text form round-trips") {
    const MarkedWord a = parse_marked_word("110110@0,3");
    CHECK(a.word.bits() == "110110");
    CHECK(a.spans == std::vector<std::size_t>{0, 3});
    CHECK(to_string(a) == "110110@0,3");
    CHECK(to_string(parse_marked_word("0101")) == "0101");
    CHECK(parse_marked_word("@").word.empty());
    CHECK(parse_span_list("3,0") == std::vector<std::size_t>{0, 3});
    CHECK_THROWS_AS(parse_span_list("1,,2"), InvalidWord);
    CHECK_THROWS_AS(parse_span_list("x"), InvalidWord);
    CHECK_THROWS_AS(parse_marked_word("12@0"), InvalidWord);
}

TEST_CASE("span validation") {
    const Pattern p(2, 1);
    CHECK_NOTHROW(validate(mw("110110", {0, 3}), p));
    CHECK_THROWS_AS(validate(mw("110110", {1}), p), InvalidWord);
    CHECK_THROWS_AS(validate(mw("110", {1}), p), InvalidWord);
    CHECK_THROWS_AS(validate(mw("11010", {0}), Pattern(3, 1)), InvalidWord);
    CHECK_NOTHROW(validate(mw("11101110", {0, 4}), Pattern(3, 1)));
}

TEST_CASE("marked spans report their peak") {
    const auto spans = marked_spans(mw("0111001110", {1, 6}), Pattern(3, 2));
    REQUIRE(spans.size() == 2);
    CHECK(spans[0].peak == 2);
    CHECK(spans[0].end() == 6);
    CHECK(spans[1].peak == 3);
    CHECK(spans[1].peak_index(Pattern(3, 2)) == 9);
}

TEST_CASE("strictly inside") {
    const std::vector<std::size_t> spans{1, 6};
    CHECK_FALSE(strictly_inside(1, spans, 4));
    CHECK(strictly_inside(2, spans, 4));
    CHECK(strictly_inside(4, spans, 4));
    CHECK_FALSE(strictly_inside(5, spans, 4));
    CHECK_FALSE(strictly_inside(0, spans, 4));
    CHECK(strictly_inside(9, spans, 4));
}

TEST_CASE("rightmost suffix") {
    const Pattern p21(2, 1), p31(3, 1);
    auto s = rightmost_suffix(mw("1101"), p21);
    CHECK(s.prefix.bits().empty());
    CHECK(s.suffix.bits() == "1101");
    CHECK(s.start == 0);

    s = rightmost_suffix(mw("101"), p21);
    CHECK(s.prefix.bits() == "10");
    CHECK(s.suffix.bits() == "1");
    CHECK(s.start == 2);

    s = rightmost_suffix(mw("01110", {1}), p31);
    CHECK(s.prefix.bits().empty());
    CHECK(s.suffix.bits() == "01110");
    CHECK(s.start == 0);

    // unmarked, the same word splits at its interior axis point
    CHECK(rightmost_suffix_start(mw("01110"), p31) == 2);
    // the final point never counts, even on the axis
    CHECK(rightmost_suffix_start(mw("1010"), p21) == 2);
    CHECK(rightmost_suffix_start(mw(""), p21) == 0);
}

TEST_CASE("classify examples") {
    const Pattern p21(2, 1), p31(3, 1);
    CHECK(classify(mw("1010"), p21).kind == PathKind::DeltaOnAxis);

    const PathClass above = classify(mw("1101"), p21);
    CHECK(above.kind == PathKind::DeltaAboveAxis);
    CHECK(above.suffix_start == 0);

    const PathClass g = classify(mw("01110", {1}), p31);
    CHECK(g.kind == PathKind::Gamma);
    REQUIRE(g.qualifying_span);
    CHECK(*g.qualifying_span == 1);
    CHECK_FALSE(g.is_delta());

    CHECK(classify(mw(""), p21).kind == PathKind::DeltaOnAxis);
    CHECK(classify(mw("01"), p21).kind == PathKind::DeltaOnAxis);
    CHECK_THROWS_AS(classify(mw("100"), p21), Unclassifiable);
    CHECK(classify(mw("011"), p21).kind == PathKind::DeltaAboveAxis);
    CHECK(std::string(to_string(PathKind::Gamma)) == "gamma");
}

TEST_CASE("every marked word of F is classified") {
    for (const Pattern p : {Pattern(2, 1), Pattern(3, 1), Pattern(4, 1), Pattern(4, 2), Pattern(5, 2)}) {
        for (std::size_t len = 0; len <= 12; ++len)
            for (std::size_t mask = 0; mask < (std::size_t{1} << len); ++mask) {
                std::string w(len, '0');
                for (std::size_t t = 0; t < len; ++t)
                    if (mask >> t & 1) w[t] = '1';
                if (!Word(w).in_class_f()) continue;
                const std::vector<std::size_t> occ = occurrences(w, p);
                for (std::size_t pick = 0; pick < (std::size_t{1} << occ.size()); ++pick) {
                    MarkedWord m{Word(w), {}};
                    for (std::size_t q = 0; q < occ.size(); ++q)
                        if (pick >> q & 1) m.spans.push_back(occ[q]);
                    INFO(p.name() << " " << to_string(m));
                    REQUIRE_NOTHROW(classify(m, p));
                }
            }
    }
}
