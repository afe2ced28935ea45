#pragma once

// Word combinatorics on X*: the lex and deg-lex orders, associative
// Lyndon-Shirshov words (ALSW), their factorization and standard bracketing,
// and the special bracketings used to build normal s-words.
//
// Letters are generator ranks; a higher rank is a greater letter. The lex
// order makes every proper prefix greater than the word itself, and an ALSW
// is a word strictly greater than each of its proper rotations.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsb {

using Letter = std::uint16_t;

/// An associative word over X; the empty word is the identity 1.
class XWord {
public:
    XWord() = default;
    explicit XWord(std::u16string letters) : s_(std::move(letters)) {}
    XWord(std::initializer_list<Letter> letters) : s_(letters.begin(), letters.end()) {}
    static XWord letter(Letter x) { return XWord(std::u16string(1, static_cast<char16_t>(x))); }

    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    Letter operator[](std::size_t i) const { return static_cast<Letter>(s_[i]); }
    const std::u16string& str() const { return s_; }

    XWord sub(std::size_t pos, std::size_t len = std::u16string::npos) const { return XWord(s_.substr(pos, len)); }
    bool occurs_at(const XWord& u, std::size_t pos) const
    {
        return pos + u.size() <= s_.size() && s_.compare(pos, u.size(), u.s_) == 0;
    }
    /// All start positions of u in this word, ascending.
    std::vector<std::size_t> occurrences(const XWord& u) const;

    friend XWord operator+(const XWord& a, const XWord& b) { return XWord(a.s_ + b.s_); }
    friend bool operator==(const XWord&, const XWord&) = default;

    /// Debug form such as "x2x1" (ranks are 1-based in the output).
    std::string debug() const;

private:
    std::u16string s_;
};

struct XWordHash {
    std::size_t operator()(const XWord& w) const { return std::hash<std::u16string>{}(w.str()); }
};

/// Lex order: 1 > t for t != 1, then first letters, then the rest.
std::strong_ordering lex_compare(const XWord& u, const XWord& v);
/// Deg-lex order: length first, lex to break ties.
std::strong_ordering deglex_compare(const XWord& u, const XWord& v);

struct DegLexLess {
    bool operator()(const XWord& a, const XWord& b) const { return deglex_compare(a, b) < 0; }
};

class WordError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Definitional check: w = uv with u, v != 1 implies w > vu. Throws on the
/// empty word.
bool is_alsw(const XWord& w);

/// w = c1 c2 ... cn with each ci an ALSW and c1 <= c2 <= ... <= cn.
std::vector<XWord> lyndon_factorize(const XWord& w);

/// Longest proper suffix of w that is an ALSW (|w| >= 2).
XWord longest_alsw_suffix(const XWord& w);

/// All ALSWs of length 1..max_len over `alphabet_size` letters, deg-lex
/// ascending.
std::vector<XWord> enumerate_alsw(std::size_t alphabet_size, std::size_t max_len);

/// Binary bracketing tree over X. Nodes are immutable and shared. A node may
/// carry a mark (1 or 2) naming the subtree that a normal s-word substitutes.
class LieTree {
public:
    LieTree() = default;
    static LieTree leaf(Letter x, int mark = 0);
    static LieTree node(const LieTree& left, const LieTree& right, int mark = 0);

    bool valid() const { return node_ != nullptr; }
    bool is_leaf() const { return node_->left == nullptr; }
    Letter letter() const { return node_->letter; }
    LieTree left() const { return LieTree(node_->left); }
    LieTree right() const { return LieTree(node_->right); }
    int mark() const { return node_->mark; }
    std::size_t length() const { return node_->length; }
    bool has_mark() const { return node_->marked_below; }

    LieTree with_mark(int mark) const;
    XWord foliage() const;

    /// Nested-bracket form, e.g. "[x2,[x2,x1]]"; marked subtrees as "<...>".
    std::string debug() const;

    friend bool operator==(const LieTree& a, const LieTree& b);

private:
    struct Node {
        Letter letter = 0;
        std::shared_ptr<const Node> left, right;
        int mark = 0;
        std::size_t length = 1;
        bool marked_below = false;
    };
    explicit LieTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// The unique NLSW bracketing [w] = [[u][v]], v the longest proper ALSW
/// suffix. Throws WordError if w is not an ALSW.
LieTree std_bracketing(const XWord& w);

/// Definition of an NLSW: ALSW foliage, NLSW children, and u12 <= u2 when the
/// left child is itself a bracket [[u11][u12]].
bool is_nlsw(const LieTree& t);

/// The special bracketing [w]_u of w relative to the occurrence of u at `pos`:
/// the subtree [uc] of [w] starting there is replaced by the left-normed
/// [...[[u][c1]][c2]...[cn]] over the factorization of c. The subtree [u] is
/// marked with `mark`.
LieTree special_bracketing(const XWord& w, const XWord& u, std::size_t pos, int mark = 1);

/// Decomposes the NLSW [uc] as [...[u'[c1]]...[cn]] with the foliage of u'
/// equal to u. Throws WordError if uc does not have that shape.
LieTree chibrikov_bracketing(const XWord& u, const XWord& c);

/// A bracketing of w = a u b v c with marked subtrees for u (mark 1) and
/// v (mark 2) whose leading word is w.
LieTree double_bracketing(const XWord& w, const XWord& u, std::size_t u_pos, const XWord& v, std::size_t v_pos);

}  // namespace gsb
