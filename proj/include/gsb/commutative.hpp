#pragma once

// The coefficient ring k[Y]: commutative monomials [Y], polynomials, and
// Buchberger completion for the relations R.

#include "gsb/linear.hpp"
#include "gsb/scalar.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsb {

/// A monomial in [Y]. Exponents are indexed by generator rank; trailing zeros
/// are never stored, so the empty vector is the monomial 1.
class YMonomial {
public:
    YMonomial() = default;
    explicit YMonomial(std::vector<std::uint16_t> exponents);
    static YMonomial generator(std::size_t index, std::uint16_t power = 1);

    const std::vector<std::uint16_t>& exponents() const { return exp_; }
    std::uint16_t exponent(std::size_t index) const { return index < exp_.size() ? exp_[index] : 0; }
    unsigned degree() const { return degree_; }
    bool is_one() const { return exp_.empty(); }

    bool divides(const YMonomial& other) const;
    /// this / d; d must divide this.
    YMonomial quotient(const YMonomial& d) const;

    friend YMonomial operator*(const YMonomial& a, const YMonomial& b);
    friend bool operator==(const YMonomial&, const YMonomial&) = default;

private:
    void normalize();

    std::vector<std::uint16_t> exp_;
    unsigned degree_ = 0;
};

YMonomial monomial_lcm(const YMonomial& a, const YMonomial& b);
YMonomial monomial_gcd(const YMonomial& a, const YMonomial& b);

/// Deg-lex on [Y]: total degree first, then the exponent of the
/// highest-ranked generator, then the next one down.
std::strong_ordering monomial_compare(const YMonomial& a, const YMonomial& b);

struct YMonomialLess {
    bool operator()(const YMonomial& a, const YMonomial& b) const { return monomial_compare(a, b) < 0; }
};

using CommPoly = LinComb<YMonomial, YMonomialLess>;

CommPoly operator*(const CommPoly& a, const CommPoly& b);
CommPoly operator*(const CommPoly& a, const YMonomial& m);

/// Full multivariate division: no term of the result is divisible by a
/// leading monomial of `basis`. Elements of `basis` need not be monic.
CommPoly comm_normal_form(const CommPoly& p, const std::vector<CommPoly>& basis);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BuchbergerOptions {
    unsigned max_deg = 0;         ///< S-pairs with lcm degree above this are skipped
    std::size_t max_elements = 512;
};

struct BuchbergerResult {
    std::vector<CommPoly> basis;  ///< monic, interreduced, ascending by leading monomial
    std::size_t skipped_pairs = 0;
};

/// Buchberger completion with the coprime-leading-monomial criterion and a
/// final interreduction.
BuchbergerResult buchberger_complete(const std::vector<CommPoly>& relations, const BuchbergerOptions& opts);

/// True if every S-polynomial with lcm degree <= max_deg reduces to zero.
bool is_groebner(const std::vector<CommPoly>& basis, unsigned max_deg);

/// Reduced form: monic, tails reduced, redundant elements dropped.
std::vector<CommPoly> interreduce(const std::vector<CommPoly>& basis);

}  // namespace gsb
