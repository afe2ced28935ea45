#pragma once

// Groebner-Shirshov bases in k[Y]<X>, enough to compute normal forms in
// universal enveloping algebras.

#include "gsb/gsb_lie.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace gsb {

/// K<X | S> with K = k[Y | R].
struct AssocPresentation {
    Field field;
    std::vector<std::string> y_names;
    std::vector<std::string> x_names;
    std::vector<CommPoly> r;
    std::vector<AssocElement> s;
};

/// U_K(L): brackets [u,v] become uv - vu. R is carried over unchanged.
AssocPresentation envelope(const LiePresentation& p);

/// S (k-monic) followed by RX, with R completed up to `r_cap`.
std::vector<AssocElement> assoc_ideal_generators(const AssocPresentation& p, unsigned r_cap);

class AssocRuleSet {
public:
    explicit AssocRuleSet(Field f) : field_(f) {}

    Field field() const { return field_; }
    std::size_t size() const { return rules_.size(); }
    const AssocElement& rule(std::size_t i) const { return rules_[i]; }
    const AssocMonomial& lead(std::size_t i) const { return leads_[i]; }
    const std::vector<AssocElement>& rules() const { return rules_; }

    std::size_t add(const AssocElement& s);

    struct Match {
        std::size_t rule;
        std::size_t pos;
    };
    std::optional<Match> find(const AssocMonomial& t, MatchPolicy policy, std::size_t limit) const;
    std::optional<Match> find(const AssocMonomial& t, MatchPolicy policy = MatchPolicy::first_rule) const
    {
        return find(t, policy, rules_.size());
    }

private:
    Field field_;
    std::vector<AssocElement> rules_;
    std::vector<AssocMonomial> leads_;
    std::unordered_map<XWord, std::vector<std::size_t>, XWordHash> by_word_;
    std::size_t max_word_len_ = 0;
};

/// One rewriting step: subtract alpha * beta * a s b.
struct AssocStep {
    std::size_t rule = 0;
    XWord a, b;
    YMonomial beta;
    Scalar alpha;
};

struct AssocReduction {
    std::vector<AssocStep> steps;
    AssocElement remainder;
};

/// Full reduction: the remainder has no monomial of the form beta a s-bar b.
AssocReduction assoc_reduce(const AssocElement& h, const AssocRuleSet& rules,
                            MatchPolicy policy = MatchPolicy::first_rule, bool record = true);
AssocReduction assoc_reduce(const AssocElement& h, const std::vector<AssocElement>& s,
                            MatchPolicy policy = MatchPolicy::first_rule);

/// sum alpha beta a s b + remainder.
AssocElement replay(const AssocReduction& r, const std::vector<AssocElement>& s);

enum class AssocCompositionKind { inclusion, intersection, external, left_multiple, right_multiple };
std::string to_string(AssocCompositionKind k);

struct AssocComposition {
    AssocCompositionKind kind = AssocCompositionKind::inclusion;
    std::size_t f = 0, g = 0;
    XWord a, b;  ///< inclusion: f-bar^X = a g-bar^X b; intersection: a, b as in f b, a g;
                 ///< external: a is the connector t; multiples: a or b is the letter
    AssocElement value;
};

/// Every composition of the pair (f, g) within the caps; f == g adds the
/// multiplication closures x f and f x.
std::vector<AssocComposition> assoc_compositions(const AssocRuleSet& rules, std::size_t f, std::size_t g,
                                                 std::size_t alphabet_size, const Caps& caps);

struct AssocCompletionResult {
    std::vector<AssocElement> basis;  ///< k-monic, interreduced, ascending
    std::size_t rounds = 0;
    std::size_t compositions = 0;
    std::size_t discarded = 0;
    Caps caps;
};

AssocCompletionResult assoc_complete(const std::vector<AssocElement>& s, std::size_t alphabet_size, const Caps& caps,
                                     const CompletionOptions& opts = {});

std::vector<AssocElement> interreduce(const std::vector<AssocElement>& s);

/// True if no leading monomial of s divides m.
bool assoc_irreducible(const AssocMonomial& m, const AssocRuleSet& rules);

}  // namespace gsb
