#pragma once

// Generating-tree construction of the marked words over the class F, ordered
// by number of ones. A node labelled (k) is a path ending at ordinate k.
//
// Delta-paths:
//   (k) -1-> (0)^2 (1) ... (k+1)
//   (k) -j-> (0~)^{j-i+1-a} (1~)^{j-i-a} ... (j-i-1-a~)^2 (j-i-a~) ... (k+j-i~)
// Gamma-paths:
//   (k) -1-> (0) (1) ... (k+1)
//   (k) -j-> (0~) (1~) ... (k+j-i~)
// where ~ marks a label: the child carries one more marked span and the
// opposite sign.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "patternforge/error.hpp"
#include "patternforge/marked_word.hpp"
#include "patternforge/word.hpp"

namespace patternforge {

enum class Sign : std::uint8_t { plus, minus };

inline Sign flip(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline const char* to_string(Sign s) noexcept { return s == Sign::plus ? "+" : "-"; }

enum class Production : char {
    Rise = 'r',          // Delta, jump 1: one rise then falls
    ExtraZero = 'z',     // Delta, jump 1: the extra (0) child
    Marked = 'm',        // Delta, jump j: marked factor then falls
    ExtraMarked = 'x',   // Delta, jump j: cut-and-paste children
    GammaRise = 'R',     // Gamma, jump 1
    GammaMarked = 'M',   // Gamma, jump j
};

inline bool is_jump_j(Production p) noexcept {
    return p == Production::Marked || p == Production::ExtraMarked || p == Production::GammaMarked;
}

struct Step {
    Production production;
    int label;

    friend bool operator==(const Step&, const Step&) = default;
    friend auto operator<=>(const Step&, const Step&) = default;
};

/// Label sequence from the root, e.g. "0 r1 m0~ z0".
inline std::string to_string(const std::vector<Step>& provenance) {
    std::string out = "0";
    for (const Step& s : provenance) {
        out += ' ';
        out += static_cast<char>(s.production);
        out += std::to_string(s.label);
        if (is_jump_j(s.production)) out += '~';
    }
    return out;
}

struct TreeNode {
    MarkedWord mw;
    int label = 0;
    Sign sign = Sign::plus;
    int level = 0;
    std::vector<Step> provenance;
};

inline TreeNode axiom_node() { return TreeNode{}; }

/// Shape data that selects the jump-j production of a Delta-path.
struct DeltaContext {
    int k = 0;
    int a = 0;
    /// Highest unmarked peak in rho, 0 when rho has none.
    int h = 0;
    /// Highest marked peak in rho.
    std::optional<int> h_star;
};

namespace detail {

struct Peak {
    std::size_t point;
    int height;
    bool marked;
};

inline std::vector<Peak> peaks_from(const MarkedWord& mw, const Pattern& p, std::size_t from) {
    const std::string& bits = mw.word.bits();
    const std::vector<int> heights = profile(mw.word);
    std::vector<Peak> out;
    for (std::size_t t = from + 1; t < bits.size(); ++t) {
        if (bits[t - 1] != '1' || bits[t] != '0') continue;
        const bool marked = t >= static_cast<std::size_t>(p.j()) &&
                            std::binary_search(mw.spans.begin(), mw.spans.end(), t - static_cast<std::size_t>(p.j()));
        out.push_back(Peak{t, heights[t], marked});
    }
    return out;
}

inline int clamp_ladder(int d, const Pattern& p) {
    if (d <= 0) return 0;
    if (d < p.drift()) return d;
    return p.drift() - 1;
}

inline TreeNode make_child(const TreeNode& parent, MarkedWord mw, Production production, const Pattern& p) {
    TreeNode child;
    child.label = mw.word.endpoint();
    child.level = parent.level + (is_jump_j(production) ? p.j() : 1);
    child.sign = is_jump_j(production) ? flip(parent.sign) : parent.sign;
    child.provenance = parent.provenance;
    child.provenance.push_back(Step{production, child.label});
    child.mw = std::move(mw);
    return child;
}

inline void sort_children(std::vector<TreeNode>& nodes) {
    std::stable_sort(nodes.begin(), nodes.end(), [](const TreeNode& a, const TreeNode& b) {
        if (a.mw.word.bits() != b.mw.word.bits()) return a.mw.word.bits() < b.mw.word.bits();
        return a.mw.spans < b.mw.spans;
    });
}

inline std::string falls(int n) { return std::string(static_cast<std::size_t>(std::max(n, 0)), '0'); }

}  // namespace detail

inline DeltaContext compute_delta_context(const MarkedWord& mw, const Pattern& p) {
    const PathClass cls = classify(mw, p);
    if (!cls.is_delta()) throw NotDelta(to_string(mw) + " is a Gamma-path");

    DeltaContext ctx;
    ctx.k = mw.word.endpoint();
    if (cls.kind == PathKind::DeltaOnAxis) return ctx;

    std::optional<std::size_t> h_at;
    std::optional<std::size_t> h_star_at;
    for (const detail::Peak& pk : detail::peaks_from(mw, p, cls.suffix_start)) {
        if (pk.marked) {
            if (!ctx.h_star || pk.height >= *ctx.h_star) {
                ctx.h_star = pk.height;
                h_star_at = pk.point;
            }
        } else if (!h_at || pk.height >= ctx.h) {
            ctx.h = pk.height;
            h_at = pk.point;
        }
    }

    const int by_unmarked = detail::clamp_ladder(ctx.h - ctx.k, p);
    if (!ctx.h_star) {
        ctx.a = by_unmarked;
        return ctx;
    }
    const int gap = *ctx.h_star - ctx.h;
    const int by_marked = detail::clamp_ladder(*ctx.h_star - ctx.k - p.i(), p);
    if (gap < p.i())
        ctx.a = by_unmarked;
    else if (gap > p.i())
        ctx.a = by_marked;
    else  // tie: the side of the two highest peaks decides
        ctx.a = (h_at && *h_at < *h_star_at) ? by_unmarked : by_marked;
    return ctx;
}

inline int compute_a(const MarkedWord& mw, const Pattern& p) { return compute_delta_context(mw, p).a; }

struct CutAndPaste {
    MarkedWord result;
    std::size_t suffix_start = 0;
    /// Point right of the rightmost marked span that anchors the line s.
    std::size_t t = 0;
    /// Cut point inside phi; phi = beta . alpha with beta ending at z.
    std::size_t z = 0;
};

/// Rotates the strictly-above suffix phi of a path ending at e >= 1 into
/// v . fall . alpha . beta, which ends at e - 1. Spans travel unsplit.
///
/// z is the highest point of phi on or above the horizontal line through t,
/// leftmost among equals, skipping points strictly inside a span.
inline CutAndPaste cut_and_paste(const MarkedWord& mw, const Pattern& p) {
    const std::string& bits = mw.word.bits();
    const std::vector<int> heights = profile(mw.word);
    const std::size_t len = p.length();
    const int e = heights.back();
    if (e < 1) throw Error("cut_and_paste needs a path ending at ordinate >= 1, got " + to_string(mw));

    CutAndPaste out;
    out.suffix_start = rightmost_suffix_start(mw, p);
    const std::size_t s0 = out.suffix_start;
    auto first_in_phi = std::lower_bound(mw.spans.begin(), mw.spans.end(), s0);
    if (first_in_phi == mw.spans.end()) throw NoMarkedPoint(to_string(mw) + " has no marked point in its suffix");

    // end point of the rightmost marked span; span ends are never strictly inside
    out.t = mw.spans.back() + len;
    const int line = heights[out.t];

    std::optional<std::size_t> z;
    for (std::size_t c = s0; c <= bits.size(); ++c) {
        if (strictly_inside(c, mw.spans, len) || heights[c] < line) continue;
        if (!z || heights[c] > heights[*z]) z = c;
    }
    out.z = z.value_or(out.t);

    std::string rotated = bits.substr(0, s0);
    rotated += '0';
    rotated += bits.substr(out.z);
    rotated += bits.substr(s0, out.z - s0);

    const std::size_t alpha_len = bits.size() - out.z;
    std::vector<std::size_t> spans;
    spans.reserve(mw.spans.size());
    for (std::size_t s : mw.spans) {
        if (s < s0)
            spans.push_back(s);
        else if (s >= out.z)
            spans.push_back(s - out.z + s0 + 1);
        else if (s + len <= out.z)
            spans.push_back(s + 1 + alpha_len);
        else
            throw SpanSplit("cut at " + std::to_string(out.z) + " splits the span at " + std::to_string(s) + " of " +
                            to_string(mw));
    }
    std::sort(spans.begin(), spans.end());
    out.result = MarkedWord{Word(std::move(rotated)), std::move(spans)};
    if (out.result.word.endpoint() != e - 1)
        throw Error("cut_and_paste changed the endpoint by more than one step on " + to_string(mw));
    return out;
}

/// k+3 children one level down: k+2 by appending a rise then falls, plus the
/// extra (0) child that ends on the axis.
inline std::vector<TreeNode> delta_jump1(const TreeNode& node, const Pattern& p) {
    const PathClass cls = classify(node.mw, p);
    if (!cls.is_delta()) throw NotDelta(to_string(node.mw) + " is a Gamma-path");
    const int k = node.label;
    const std::string& bits = node.mw.word.bits();

    std::vector<TreeNode> children;
    children.reserve(static_cast<std::size_t>(k) + 3);
    for (int y = 0; y <= k + 1; ++y)
        children.push_back(detail::make_child(
            node, MarkedWord{Word(bits + '1' + detail::falls(k + 1 - y)), node.mw.spans}, Production::Rise, p));

    const MarkedWord lifted{Word(bits + '1' + detail::falls(k)), node.mw.spans};
    const std::size_t s0 = rightmost_suffix_start(lifted, p);
    const bool phi_marked = std::lower_bound(node.mw.spans.begin(), node.mw.spans.end(), s0) != node.mw.spans.end();
    MarkedWord extra;
    if (!phi_marked) {
        const std::string& lb = lifted.word.bits();
        extra = MarkedWord{Word(lb.substr(0, s0) + complement(std::string_view(lb).substr(s0)) + '1'), node.mw.spans};
    } else {
        extra = cut_and_paste(lifted, p).result;
    }
    children.push_back(detail::make_child(node, std::move(extra), Production::ExtraZero, p));
    return children;
}

/// Label multiset of the Delta jump-j production for endpoint k and parameter a.
inline std::map<int, int> delta_jumpj_multiset(int k, int a, const Pattern& p) {
    std::map<int, int> counts;
    for (int m = 0; m <= k + p.drift(); ++m) counts[m] = 1;
    for (int m = 0; m <= p.drift() - 1 - a; ++m) counts[m] += p.drift() - a - m;
    return counts;
}

/// Marked children j levels down. Base children append the marked factor and
/// falls; for y in [k+a, k+j-i-1] the path omega.factor.fall^y is cut and
/// pasted and then extended by every admissible number of further falls.
inline std::vector<TreeNode> delta_jumpj(const TreeNode& node, const Pattern& p, int a) {
    const PathClass cls = classify(node.mw, p);
    if (!cls.is_delta()) throw NotDelta(to_string(node.mw) + " is a Gamma-path");
    if (a < 0 || a > p.drift() - 1)
        throw Error("parameter a=" + std::to_string(a) + " outside [0, " + std::to_string(p.drift() - 1) + "]");

    const int k = node.label;
    const int top = k + p.drift();
    const std::string& bits = node.mw.word.bits();
    const std::string factor = p.factor();
    std::vector<std::size_t> spans = node.mw.spans;
    spans.push_back(bits.size());

    std::vector<TreeNode> children;
    for (int y = 0; y <= top; ++y)
        children.push_back(detail::make_child(
            node, MarkedWord{Word(bits + factor + detail::falls(top - y)), spans}, Production::Marked, p));

    for (int y = k + a; y <= top - 1; ++y) {
        const MarkedWord lowered{Word(bits + factor + detail::falls(y)), spans};
        const CutAndPaste cut = cut_and_paste(lowered, p);
        if (k == 0 && cut.z != bits.size() + p.length())
            throw Error("on-axis parent " + to_string(node.mw) + ": cut point is not the end of the new factor");
        const int label = top - y - 1;
        for (int g = 0; g <= label; ++g) {
            MarkedWord mw{Word(cut.result.word.bits() + detail::falls(g)), cut.result.spans};
            children.push_back(detail::make_child(node, std::move(mw), Production::ExtraMarked, p));
        }
    }

    std::map<int, int> emitted;
    for (const TreeNode& c : children) ++emitted[c.label];
    if (emitted != delta_jumpj_multiset(k, a, p))
        throw MultiplicityMismatch("jump-" + std::to_string(p.j()) + " children of " + to_string(node.mw) +
                                   " do not match the production for a=" + std::to_string(a));
    return children;
}

struct GammaChildren {
    std::vector<TreeNode> jump1;
    std::vector<TreeNode> jumpj;
};

inline GammaChildren gamma_expand(const TreeNode& node, const Pattern& p) {
    const PathClass cls = classify(node.mw, p);
    if (cls.kind != PathKind::Gamma) throw NotGamma(to_string(node.mw) + " is a Delta-path");
    const int k = node.label;
    const std::string& bits = node.mw.word.bits();

    GammaChildren out;
    for (int y = 0; y <= k + 1; ++y)
        out.jump1.push_back(detail::make_child(
            node, MarkedWord{Word(bits + '1' + detail::falls(k + 1 - y)), node.mw.spans}, Production::GammaRise, p));

    std::vector<std::size_t> spans = node.mw.spans;
    spans.push_back(bits.size());
    const int top = k + p.drift();
    for (int y = 0; y <= top; ++y)
        out.jumpj.push_back(detail::make_child(
            node, MarkedWord{Word(bits + p.factor() + detail::falls(top - y)), spans}, Production::GammaMarked, p));
    return out;
}

struct Expansion {
    PathClass path_class;
    /// Parameter a of a Delta-path; nullopt for Gamma-paths or when jump-j was skipped.
    std::optional<int> a;
    std::vector<TreeNode> jump1;
    std::vector<TreeNode> jumpj;
};

/// Dispatches on the path class. With include_jumpj false the jump-j children
/// are not built (used when they would land beyond the last requested level).
inline Expansion expand_node(const TreeNode& node, const Pattern& p, bool include_jumpj = true) {
    Expansion out;
    out.path_class = classify(node.mw, p);
    if (out.path_class.is_delta()) {
        out.jump1 = delta_jump1(node, p);
        if (include_jumpj) {
            out.a = compute_a(node.mw, p);
            out.jumpj = delta_jumpj(node, p, *out.a);
        }
    } else {
        GammaChildren g = gamma_expand(node, p);
        out.jump1 = std::move(g.jump1);
        if (include_jumpj) out.jumpj = std::move(g.jumpj);
    }
    detail::sort_children(out.jump1);
    detail::sort_children(out.jumpj);
    return out;
}

}  // namespace patternforge
