#include "gsb/lyndon.hpp"

#include <algorithm>
#include <sstream>

namespace gsb {

std::vector<std::size_t> XWord::occurrences(const XWord& u) const
{
    std::vector<std::size_t> out;
    if (u.empty() || u.size() > s_.size()) return out;
    for (std::size_t p = s_.find(u.s_); p != std::u16string::npos; p = s_.find(u.s_, p + 1)) out.push_back(p);
    return out;
}

std::string XWord::debug() const
{
    if (s_.empty()) return "1";
    std::string out;
    for (char16_t c : s_) out += "x" + std::to_string(static_cast<unsigned>(c) + 1);
    return out;
}

std::strong_ordering lex_compare(const XWord& u, const XWord& v)
{
    const std::size_t n = std::min(u.size(), v.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = u[i] <=> v[i]; c != 0) return c;
    // a proper prefix is greater
    return v.size() <=> u.size();
}

std::strong_ordering deglex_compare(const XWord& u, const XWord& v)
{
    if (auto c = u.size() <=> v.size(); c != 0) return c;
    return lex_compare(u, v);
}

bool is_alsw(const XWord& w)
{
    if (w.empty()) throw WordError("is_alsw: empty word");
    for (std::size_t k = 1; k < w.size(); ++k) {
        const XWord rotated = w.sub(k) + w.sub(0, k);
        if (lex_compare(w, rotated) <= 0) return false;
    }
    return true;
}

std::vector<XWord> lyndon_factorize(const XWord& w)
{
    if (w.empty()) throw WordError("lyndon_factorize: empty word");
    // Duval's algorithm with the letter order reversed.
    std::vector<XWord> out;
    const std::size_t n = w.size();
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && w[k] >= w[j]) {
            k = (w[k] > w[j]) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            out.push_back(w.sub(i, j - k));
            i += j - k;
        }
    }
    return out;
}

XWord longest_alsw_suffix(const XWord& w)
{
    for (std::size_t start = 1; start < w.size(); ++start) {
        XWord s = w.sub(start);
        if (is_alsw(s)) return s;
    }
    throw WordError("longest_alsw_suffix: word of length < 2");
}

std::vector<XWord> enumerate_alsw(std::size_t alphabet_size, std::size_t max_len)
{
    std::vector<XWord> out;
    if (alphabet_size == 0) return out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::u16string cur(len, 0);
        std::vector<XWord> level;
        while (true) {
            XWord w(cur);
            if (is_alsw(w)) level.push_back(w);
            std::size_t i = len;
            while (i > 0 && cur[i - 1] + 1u == alphabet_size) cur[--i] = 0;
            if (i == 0) break;
            ++cur[i - 1];
        }
        std::sort(level.begin(), level.end(), DegLexLess{});
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

LieTree LieTree::leaf(Letter x, int mark)
{
    auto n = std::make_shared<Node>();
    n->letter = x;
    n->mark = mark;
    n->marked_below = mark != 0;
    return LieTree(std::move(n));
}

LieTree LieTree::node(const LieTree& left, const LieTree& right, int mark)
{
    auto n = std::make_shared<Node>();
    n->left = left.node_;
    n->right = right.node_;
    n->mark = mark;
    n->length = left.length() + right.length();
    n->marked_below = mark != 0 || left.has_mark() || right.has_mark();
    return LieTree(std::move(n));
}

LieTree LieTree::with_mark(int mark) const
{
    if (is_leaf()) return leaf(letter(), mark);
    return node(left(), right(), mark);
}

XWord LieTree::foliage() const
{
    if (is_leaf()) return XWord::letter(letter());
    return left().foliage() + right().foliage();
}

std::string LieTree::debug() const
{
    std::string body = is_leaf() ? "x" + std::to_string(letter() + 1) : "[" + left().debug() + "," + right().debug() + "]";
    return mark() != 0 ? "<" + body + ">" : body;
}

bool operator==(const LieTree& a, const LieTree& b)
{
    if (a.node_ == b.node_) return true;
    if (!a.valid() || !b.valid()) return false;
    if (a.is_leaf() != b.is_leaf() || a.mark() != b.mark()) return false;
    if (a.is_leaf()) return a.letter() == b.letter();
    return a.left() == b.left() && a.right() == b.right();
}

LieTree std_bracketing(const XWord& w)
{
    if (w.empty() || !is_alsw(w)) throw WordError("std_bracketing: " + w.debug() + " is not an ALSW");
    if (w.size() == 1) return LieTree::leaf(w[0]);
    const XWord v = longest_alsw_suffix(w);
    return LieTree::node(std_bracketing(w.sub(0, w.size() - v.size())), std_bracketing(v));
}

bool is_nlsw(const LieTree& t)
{
    if (t.is_leaf()) return true;
    if (!is_alsw(t.foliage())) return false;
    const LieTree l = t.left(), r = t.right();
    if (!is_nlsw(l) || !is_nlsw(r)) return false;
    if (lex_compare(l.foliage(), r.foliage()) <= 0) return false;
    if (!l.is_leaf() && lex_compare(l.right().foliage(), r.foliage()) > 0) return false;
    return true;
}

namespace {

// Smallest subtree of t (rooted at offset `base`) whose span starts at `pos`
// and covers at least `len` letters. Returns its span length, 0 if none.
std::size_t covering_span(const LieTree& t, std::size_t base, std::size_t pos, std::size_t len)
{
    if (pos < base || pos >= base + t.length()) return 0;
    if (!t.is_leaf()) {
        const std::size_t split = base + t.left().length();
        const std::size_t inner =
            pos < split ? covering_span(t.left(), base, pos, len) : covering_span(t.right(), split, pos, len);
        if (inner != 0) return inner;
    }
    if (pos == base && t.length() >= len) return t.length();
    return 0;
}

// Replace the subtree with span [start, start+len) by `repl`.
LieTree replace_span(const LieTree& t, std::size_t base, std::size_t start, std::size_t len, const LieTree& repl)
{
    if (base == start && t.length() == len) return repl;
    if (t.is_leaf()) throw WordError("replace_span: span is not a subtree");
    const std::size_t split = base + t.left().length();
    if (start + len <= split) return LieTree::node(replace_span(t.left(), base, start, len, repl), t.right(), t.mark());
    if (start >= split) return LieTree::node(t.left(), replace_span(t.right(), split, start, len, repl), t.mark());
    throw WordError("replace_span: span straddles a bracket");
}

void check_occurrence(const XWord& w, const XWord& u, std::size_t pos)
{
    if (u.empty() || !w.occurs_at(u, pos))
        throw WordError(u.debug() + " does not occur in " + w.debug() + " at position " + std::to_string(pos));
}

struct SpecialPlan {
    std::size_t span_len = 0;           // length of the subtree [uc]
    std::vector<XWord> factors;         // c1 .. cn
};

SpecialPlan plan_special(const LieTree& whole, const XWord& w, const XWord& u, std::size_t pos)
{
    SpecialPlan plan;
    plan.span_len = covering_span(whole, 0, pos, u.size());
    if (plan.span_len == 0) throw WordError("no subtree of [" + w.debug() + "] starts at the occurrence of " + u.debug());
    if (plan.span_len > u.size()) plan.factors = lyndon_factorize(w.sub(pos + u.size(), plan.span_len - u.size()));
    return plan;
}

LieTree left_normed(const XWord& u, const std::vector<XWord>& factors, int mark)
{
    LieTree t = std_bracketing(u).with_mark(mark);
    for (const auto& c : factors) t = LieTree::node(t, std_bracketing(c));
    return t;
}

}  // namespace

LieTree special_bracketing(const XWord& w, const XWord& u, std::size_t pos, int mark)
{
    if (!is_alsw(w)) throw WordError("special_bracketing: " + w.debug() + " is not an ALSW");
    if (u.empty() || !is_alsw(u)) throw WordError("special_bracketing: " + u.debug() + " is not an ALSW");
    check_occurrence(w, u, pos);
    const LieTree whole = std_bracketing(w);
    const SpecialPlan plan = plan_special(whole, w, u, pos);
    return replace_span(whole, 0, pos, plan.span_len, left_normed(u, plan.factors, mark));
}

LieTree chibrikov_bracketing(const XWord& u, const XWord& c)
{
    if (u.empty()) throw WordError("chibrikov_bracketing: empty u");
    const XWord uc = u + c;
    if (!is_alsw(u) || !is_alsw(uc)) throw WordError("chibrikov_bracketing: invalid context " + u.debug() + "|" + c.debug());
    const LieTree t = std_bracketing(uc);
    if (c.empty()) return t;
    const std::vector<XWord> factors = lyndon_factorize(c);
    // Walk the left spine: right children must be [cn], ..., [c1].
    LieTree cur = t;
    for (std::size_t i = factors.size(); i-- > 0;) {
        if (cur.is_leaf() || !(cur.right().foliage() == factors[i]))
            throw WordError("chibrikov_bracketing: [" + uc.debug() + "] is not of the form [u[c1]...[cn]]");
        cur = cur.left();
    }
    if (!(cur.foliage() == u))
        throw WordError("chibrikov_bracketing: [" + uc.debug() + "] is not of the form [u[c1]...[cn]]");
    return t;
}

LieTree double_bracketing(const XWord& w, const XWord& u, std::size_t u_pos, const XWord& v, std::size_t v_pos)
{
    if (!is_alsw(w) || u.empty() || v.empty() || !is_alsw(u) || !is_alsw(v))
        throw WordError("double_bracketing: words must be ALSWs");
    check_occurrence(w, u, u_pos);
    check_occurrence(w, v, v_pos);
    if (v_pos < u_pos + u.size()) throw WordError("double_bracketing: occurrences overlap");

    const LieTree whole = std_bracketing(w);
    const SpecialPlan pu = plan_special(whole, w, u, u_pos);
    const LieTree tu = replace_span(whole, 0, u_pos, pu.span_len, left_normed(u, pu.factors, 1));

    if (v_pos >= u_pos + pu.span_len) {
        // disjoint subtrees [up] and [vs]
        const SpecialPlan pv = plan_special(whole, w, v, v_pos);
        return replace_span(tu, 0, v_pos, pv.span_len, left_normed(v, pv.factors, 2));
    }
    // v lies inside some factor ct of c
    std::size_t start = u_pos + u.size();
    for (const auto& ct : pu.factors) {
        if (v_pos >= start && v_pos + v.size() <= start + ct.size())
            return replace_span(tu, 0, start, ct.size(), special_bracketing(ct, v, v_pos - start, 2));
        start += ct.size();
    }
    throw WordError("double_bracketing: " + v.debug() + " straddles the factors of c");
}

}  // namespace gsb
