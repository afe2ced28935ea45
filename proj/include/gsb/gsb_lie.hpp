#pragma once

// Groebner-Shirshov bases in Lie_{k[Y]}(X): normal s-words, the four kinds
// of compositions, reduction modulo (S, w), capped Shirshov completion, the
// irreducible basis Irr(S) and normal forms.

#include "gsb/freelie.hpp"
#include "gsb/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace gsb {

class ContextError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapsExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// [a s b]_{s-bar}: the special bracketing of a s-bar^X b relative to s-bar^X
/// with s substituted for the marked subtree. Its leading monomial is
/// s-bar^Y (a s-bar^X b). Throws ContextError unless a s-bar^X b is an ALSW.
LieElement normal_s_word(const LieElement& s, const XWord& a, const XWord& b);

/// True if t = beta a s-bar b, i.e. s-bar^Y | t^Y and s-bar^X is a subword of t^X.
bool divides_mixed(const TAMonomial& s_lead, const TAMonomial& t);

enum class MatchPolicy {
    first_rule,     ///< lowest rule index, leftmost occurrence
    greatest_rule,  ///< greatest leading monomial, rightmost occurrence
};

/// An append-only list of k-monic relations indexed by leading X-word.
class LieRuleSet {
public:
    explicit LieRuleSet(Field f) : field_(f) {}

    Field field() const { return field_; }
    std::size_t size() const { return rules_.size(); }
    const LieElement& rule(std::size_t i) const { return rules_[i]; }
    const TAMonomial& lead(std::size_t i) const { return leads_[i]; }
    const std::vector<LieElement>& rules() const { return rules_; }

    /// Normalizes to k-monic and appends; returns the index. Zero is rejected.
    std::size_t add(const LieElement& s);

    struct Match {
        std::size_t rule;
        std::size_t pos;
    };
    /// A rule among the first `limit` whose leading word divides t.
    std::optional<Match> find(const TAMonomial& t, MatchPolicy policy, std::size_t limit) const;
    std::optional<Match> find(const TAMonomial& t, MatchPolicy policy = MatchPolicy::first_rule) const
    {
        return find(t, policy, rules_.size());
    }

private:
    Field field_;
    std::vector<LieElement> rules_;
    std::vector<TAMonomial> leads_;
    std::unordered_map<XWord, std::vector<std::size_t>, XWordHash> by_word_;
    std::size_t max_word_len_ = 0;
};

struct ReductionStep {
    std::size_t rule = 0;
    XWord a, b;
    YMonomial beta;
    Scalar alpha;
};

/// input = sum alpha * beta * [a s b] + remainder, remainder supported on
/// words not of the form beta a s-bar b.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    LieElement remainder;
    /// Every step's leading word was below the supplied bound.
    bool within_bound = true;
};

/// Reduces with normal s-words, caching them per (rule, a, b). Not thread
/// safe; use one reducer per thread.
class LieReducer {
public:
    explicit LieReducer(const LieRuleSet& rules, MatchPolicy policy = MatchPolicy::first_rule)
        : rules_(&rules), policy_(policy)
    {
    }

    /// Uses only the first `limit` rules (all when omitted).
    ReductionTrace reduce(const LieElement& h, const std::optional<MixedMonomial>& bound = std::nullopt,
                          bool record = true, std::optional<std::size_t> limit = std::nullopt);
    LieElement remainder(const LieElement& h, std::optional<std::size_t> limit = std::nullopt)
    {
        return reduce(h, std::nullopt, false, limit).remainder;
    }
    const LieElement& normal_word(std::size_t rule, const XWord& a, const XWord& b);

private:
    struct Key {
        std::size_t rule;
        XWord a, b;
        friend bool operator==(const Key&, const Key&) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const
        {
            return k.rule * 7919u ^ XWordHash{}(k.a) * 31u ^ XWordHash{}(k.b);
        }
    };
    const LieRuleSet* rules_;
    MatchPolicy policy_;
    std::unordered_map<Key, LieElement, KeyHash> cache_;
};

ReductionTrace reduce(const LieElement& h, const std::vector<LieElement>& s,
                      const std::optional<MixedMonomial>& bound = std::nullopt,
                      MatchPolicy policy = MatchPolicy::first_rule);

/// Recomputes sum alpha beta [a s b] + remainder from a trace.
LieElement replay(const ReductionTrace& trace, const std::vector<LieElement>& s, Field f);

enum class CompositionKind { inclusion, intersection, external, multiplication };
std::string to_string(CompositionKind k);

struct CompositionRecord {
    CompositionKind kind = CompositionKind::inclusion;
    std::size_t f = 0, g = 0;  ///< rule indices (g == f for multiplication)
    XWord a, b, c;
    /// The ambiguity; for multiplication compositions w is not in T_A.
    MixedMonomial w;
    LieElement value;
};

/// C1 = (L/f^Y) f - (L/g^Y) [a g b]; requires f-bar^X = a g-bar^X b.
CompositionRecord comp_inclusion(const LieElement& f, const LieElement& g, const XWord& a, const XWord& b);
/// C2 = (L/f^Y) [f b] - (L/g^Y) [a g] over the overlap of length overlap_len.
CompositionRecord comp_intersection(const LieElement& f, const LieElement& g, std::size_t overlap_len);
/// C3 = (L/f^Y) [a f b g^X c] - (L/g^Y) [a f^X b g c]; requires gcd(f^Y, g^Y) != 1.
CompositionRecord comp_external(const LieElement& f, const LieElement& g, const XWord& a, const XWord& b,
                                const XWord& c);
/// C4 = [a f^X b] [a f b]; requires f-bar^Y != 1.
CompositionRecord comp_multiplication(const LieElement& f, const XWord& a, const XWord& b);

/// Every composition of the rules within the caps. Only pairs in which at
/// least one rule has index >= `first_new` are listed. Deterministic order.
std::vector<CompositionRecord> enumerate_compositions(const LieRuleSet& rules, std::size_t alphabet_size,
                                                      const Caps& caps, std::size_t first_new = 0);
std::vector<CompositionRecord> enumerate_compositions(const std::vector<LieElement>& s, std::size_t alphabet_size,
                                                      const Caps& caps);

struct CompletionOptions {
    unsigned threads = 1;
    std::size_t max_elements = 20000;
    std::size_t max_rounds = 64;
};

struct CompletionResult {
    std::vector<LieElement> basis;   ///< k-monic, interreduced, ascending by leading monomial
    std::size_t rounds = 0;
    std::size_t compositions = 0;    ///< composition records reduced
    std::size_t discarded = 0;       ///< nonzero remainders beyond the caps
    Caps caps;
};

/// Capped Shirshov algorithm. Throws BudgetExceeded past the element or round
/// cap.
CompletionResult shirshov_complete(const std::vector<LieElement>& s, std::size_t alphabet_size, const Caps& caps,
                                   const CompletionOptions& opts = {});

struct GsbCheck {
    bool ok = true;
    std::size_t checked = 0;
    std::vector<CompositionRecord> failures;  ///< value replaced by the remainder
};

/// True iff every capped composition is trivial modulo (S, w).
GsbCheck is_gsb(const std::vector<LieElement>& s, std::size_t alphabet_size, const Caps& caps, unsigned threads = 1);

/// Tail-reduced, k-monic, no leading word divisible by another's; ascending.
std::vector<LieElement> interreduce(const std::vector<LieElement>& s);

/// The T_A images of Irr(S) within the caps, ascending.
std::vector<TAMonomial> irr_basis(const std::vector<LieElement>& s, std::size_t alphabet_size,
                                  std::size_t y_count, const Caps& caps);

/// Normal form modulo a capped GSB. Throws CapsExceeded if e is outside.
LieElement nf(const LieElement& e, const std::vector<LieElement>& s, const Caps& caps);

/// Word problem for Lie_K(X | S) with S a finite X-homogeneous subset of
/// Lie_k(X): completes S through the X-degree of e and reduces.
bool word_problem_homogeneous(const LieElement& e, const std::vector<LieElement>& s, std::size_t alphabet_size);

/// Embedding into a two-generated algebra: adds generators b < a above X and
/// the relations [a a b^i a b] - x_i (i = 1..|X|). R{a,b} arises from R.
LiePresentation embed_two_generated(const LiePresentation& p);

}  // namespace gsb
