#pragma once

// Textual succession rules with jumps and marked labels, and their label-level
// census. Grammar (whitespace insignificant, ';' or newline separates, '#'
// starts a comment):
//
//   rule       := "axiom" ":" INT (SEP production)+
//   production := "jump" INT ":" atom ("," atom)*
//   atom       := "(" expr [".." expr] ")" ["~"] ["^" expr]
//   expr       := affine expression in k over integer literals
//
// "~" marks the produced labels; "^" gives a multiplicity (default 1).

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "patternforge/error.hpp"

namespace patternforge {

/// coef * k + constant
struct Affine {
    std::int64_t coef = 0;
    std::int64_t constant = 0;

    std::int64_t operator()(std::int64_t k) const noexcept { return coef * k + constant; }
    bool is_constant() const noexcept { return coef == 0; }

    friend bool operator==(const Affine&, const Affine&) = default;
};

inline std::string to_string(const Affine& a) {
    std::string out;
    if (a.coef != 0) {
        if (a.coef == -1)
            out = "-";
        else if (a.coef != 1)
            out = std::to_string(a.coef) + "*";
        out += "k";
    }
    if (a.constant != 0 || out.empty()) {
        if (!out.empty() && a.constant > 0) out += "+";
        out += std::to_string(a.constant);
    }
    return out;
}

struct Atom {
    Affine lo;
    /// Upper end of a range atom; a single label when absent.
    std::optional<Affine> hi;
    bool marked = false;
    Affine multiplicity{0, 1};

    friend bool operator==(const Atom&, const Atom&) = default;
};

struct RuleProduction {
    int jump = 1;
    std::vector<Atom> atoms;

    friend bool operator==(const RuleProduction&, const RuleProduction&) = default;
};

struct RuleSpec {
    std::int64_t axiom = 0;
    std::vector<RuleProduction> productions;

    friend bool operator==(const RuleSpec&, const RuleSpec&) = default;
};

inline std::string to_string(const RuleSpec& rule) {
    std::string out = "axiom: " + std::to_string(rule.axiom);
    for (const RuleProduction& prod : rule.productions) {
        out += " ; jump " + std::to_string(prod.jump) + ":";
        for (std::size_t q = 0; q < prod.atoms.size(); ++q) {
            const Atom& a = prod.atoms[q];
            out += q ? ", (" : " (";
            out += to_string(a.lo);
            if (a.hi) out += ".." + to_string(*a.hi);
            out += ")";
            if (a.marked) out += "~";
            if (a.multiplicity != Affine{0, 1}) out += "^" + to_string(a.multiplicity);
        }
    }
    return out;
}

namespace detail {

class RuleParser {
public:
    explicit RuleParser(std::string_view text) : text_(text) {}

    RuleSpec parse() {
        RuleSpec rule;
        skip_separators();
        expect_word("axiom");
        expect(':');
        rule.axiom = integer();
        if (rule.axiom < 0) fail("axiom must be non-negative");
        while (true) {
            const bool separated = skip_separators();
            if (at_end()) break;
            if (!separated) fail("expected ';' or a newline before the next production");
            rule.productions.push_back(production());
        }
        if (rule.productions.empty()) fail("a rule needs at least one production");
        return rule;
    }

private:
    RuleProduction production() {
        RuleProduction prod;
        expect_word("jump");
        const std::int64_t jump = integer();
        if (jump < 1) fail("jump must be at least 1");
        prod.jump = static_cast<int>(jump);
        expect(':');
        prod.atoms.push_back(atom());
        while (peek_inline() == ',') {
            advance();
            skip_blank(true);
            prod.atoms.push_back(atom());
        }
        return prod;
    }

    Atom atom() {
        Atom a;
        expect('(');
        a.lo = expr();
        skip_blank(false);
        if (text_.substr(pos_, 2) == "..") {
            advance();
            advance();
            a.hi = expr();
        }
        expect(')');
        if (peek_inline() == '~') {
            advance();
            a.marked = true;
        }
        if (peek_inline() == '^') {
            advance();
            a.multiplicity = expr();
        }
        return a;
    }

    Affine expr() {
        Affine acc = term();
        while (true) {
            const char c = peek_inline();
            if (c != '+' && c != '-') return acc;
            advance();
            const Affine rhs = term();
            const std::int64_t sign = c == '+' ? 1 : -1;
            acc.coef += sign * rhs.coef;
            acc.constant += sign * rhs.constant;
        }
    }

    Affine term() {
        Affine acc = factor();
        while (true) {
            skip_blank(false);
            // "2k" is read as 2*k
            const bool implicit = pos_ < text_.size() && text_[pos_] == 'k';
            if (!implicit && peek_inline() != '*') return acc;
            const std::size_t line = line_, col = col_;
            if (!implicit) advance();
            const Affine rhs = factor();
            if (!acc.is_constant() && !rhs.is_constant()) throw ParseError("product of two k terms is not affine", line, col);
            acc = acc.is_constant() ? Affine{acc.constant * rhs.coef, acc.constant * rhs.constant}
                                    : Affine{acc.coef * rhs.constant, acc.constant * rhs.constant};
        }
    }

    Affine factor() {
        const char c = peek_inline();
        if (c == '-') {
            advance();
            const Affine f = factor();
            return Affine{-f.coef, -f.constant};
        }
        if (c == '(') {
            advance();
            const Affine inner = expr();
            expect(')');
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Affine{0, integer()};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t line = line_, col = col_;
            std::string name;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                name += text_[pos_];
                advance();
            }
            if (name != "k") throw ParseError("unknown variable '" + name + "'", line, col);
            return Affine{1, 0};
        }
        fail(c ? std::string("unexpected '") + c + "' in expression" : "unexpected end of input in expression");
    }

    std::int64_t integer() {
        const char c = peek_inline();
        bool negative = false;
        if (c == '-') {
            negative = true;
            advance();
        }
        if (!std::isdigit(static_cast<unsigned char>(peek_inline()))) fail("expected an integer");
        std::int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + (text_[pos_] - '0');
            if (v > (std::int64_t{1} << 40)) fail("integer literal too large");
            advance();
        }
        return negative ? -v : v;
    }

    void expect_word(std::string_view word) {
        skip_blank(false);
        if (text_.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
        for (std::size_t q = 0; q < word.size(); ++q) advance();
    }

    void expect(char c) {
        if (peek_inline() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    /// Next significant character on the current logical line (0 at end).
    char peek_inline() {
        skip_blank(false);
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_blank(bool newlines) {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || (newlines && c == '\n')) {
                advance();
            } else {
                return;
            }
        }
    }

    /// Consumes any run of ';' and newlines; true when at least one was seen.
    bool skip_separators() {
        bool seen = false;
        while (true) {
            skip_blank(false);
            if (pos_ < text_.size() && (text_[pos_] == ';' || text_[pos_] == '\n')) {
                seen = true;
                advance();
            } else {
                return seen;
            }
        }
    }

    bool at_end() {
        skip_blank(true);
        return pos_ >= text_.size();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

inline RuleSpec parse_rule(std::string_view text) { return detail::RuleParser(text).parse(); }

/// Adds the two productions "(k)" and "(k)~": every node gains an unmarked
/// and a marked copy of itself one level down, which cancel in every net count.
inline RuleSpec rewrite_with_marks(RuleSpec rule) {
    rule.productions.push_back(RuleProduction{1, {Atom{Affine{1, 0}, std::nullopt, false, Affine{0, 1}}}});
    rule.productions.push_back(RuleProduction{1, {Atom{Affine{1, 0}, std::nullopt, true, Affine{0, 1}}}});
    return rule;
}

using CensusCount = boost::multiprecision::cpp_int;

struct LabelTally {
    CensusCount plus = 0;
    CensusCount minus = 0;

    CensusCount net() const { return plus - minus; }
    friend bool operator==(const LabelTally&, const LabelTally&) = default;
};

struct RuleCensus {
    int level = 0;
    std::map<std::int64_t, LabelTally> labels;

    CensusCount net_total() const {
        CensusCount total = 0;
        for (const auto& [label, t] : labels) total += t.net();
        return total;
    }
};

/// Label-level breadth-first evaluation of levels 0..levels. A child's sign is
/// its parent's sign flipped once per marked atom.
inline std::vector<RuleCensus> expand_census(const RuleSpec& rule, int levels) {
    if (levels < 0) throw Error("expand_census: levels must be non-negative");
    std::vector<RuleCensus> out(static_cast<std::size_t>(levels) + 1);
    for (int n = 0; n <= levels; ++n) out[static_cast<std::size_t>(n)].level = n;
    out[0].labels[rule.axiom].plus = 1;

    for (int n = 0; n <= levels; ++n) {
        for (const auto& [k, tally] : out[static_cast<std::size_t>(n)].labels) {
            for (const RuleProduction& prod : rule.productions) {
                if (n + prod.jump > levels) continue;
                auto& target = out[static_cast<std::size_t>(n + prod.jump)].labels;
                for (const Atom& atom : prod.atoms) {
                    const std::int64_t lo = atom.lo(k);
                    const std::int64_t hi = atom.hi ? (*atom.hi)(k) : lo;
                    const std::int64_t mult = atom.multiplicity(k);
                    if (hi < lo) continue;
                    if (lo < 0)
                        throw NegativeLabel("label " + std::to_string(lo) + " produced from (" + std::to_string(k) +
                                            ") at level " + std::to_string(n));
                    if (mult < 0)
                        throw Error("negative multiplicity " + std::to_string(mult) + " for (" + std::to_string(k) + ")");
                    if (mult == 0) continue;
                    for (std::int64_t v = lo; v <= hi; ++v) {
                        LabelTally& child = target[v];
                        child.plus += mult * (atom.marked ? tally.minus : tally.plus);
                        child.minus += mult * (atom.marked ? tally.plus : tally.minus);
                    }
                }
            }
        }
    }
    return out;
}

enum class CensusMode { net, exact };

struct CensusComparison {
    bool equal = true;
    std::string first_divergence;
};

inline CensusComparison census_equal(const std::vector<RuleCensus>& a, const std::vector<RuleCensus>& b, CensusMode mode) {
    if (a.size() != b.size())
        return {false, "level counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size())};
    for (std::size_t n = 0; n < a.size(); ++n) {
        std::map<std::int64_t, std::pair<LabelTally, LabelTally>> merged;
        for (const auto& [label, t] : a[n].labels) merged[label].first = t;
        for (const auto& [label, t] : b[n].labels) merged[label].second = t;
        for (const auto& [label, pair] : merged) {
            const auto& [x, y] = pair;
            const bool same = mode == CensusMode::net ? x.net() == y.net() : x == y;
            if (same) continue;
            std::string what = "level " + std::to_string(n) + ", label " + std::to_string(label) + ": ";
            if (mode == CensusMode::net)
                what += "net " + x.net().str() + " vs " + y.net().str();
            else
                what += "(+" + x.plus.str() + ", -" + x.minus.str() + ") vs (+" + y.plus.str() + ", -" + y.minus.str() + ")";
            return {false, what};
        }
    }
    return {true, {}};
}

}  // namespace patternforge
