#pragma once

// Canonical-form arithmetic in Lie_{k[Y]}(X) = k[Y] (x) Lie_k(X) and in the
// associative envelope k[Y]<X>.
//
// A Lie element is stored by its T_A image: the key (u^Y, u^X) with u^X an
// ALSW stands for the basis element u^Y [u^X], where [u^X] is the standard
// NLSW bracketing. Associative elements use the same monomial type with an
// arbitrary X-word.

#include "gsb/commutative.hpp"
#include "gsb/linear.hpp"
#include "gsb/lyndon.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace gsb {

/// A mixed monomial u^Y u^X in [Y]X*.
struct MixedMonomial {
    YMonomial y;
    XWord x;
    friend bool operator==(const MixedMonomial&, const MixedMonomial&) = default;
};

/// u > v iff u^X > v^X in deg-lex, or u^X = v^X and u^Y > v^Y.
std::strong_ordering mixed_compare(const MixedMonomial& a, const MixedMonomial& b);

struct LieOrder {
    bool operator()(const MixedMonomial& a, const MixedMonomial& b) const { return mixed_compare(a, b) < 0; }
};
struct AssocOrder {
    bool operator()(const MixedMonomial& a, const MixedMonomial& b) const { return mixed_compare(a, b) < 0; }
};

using TAMonomial = MixedMonomial;
using AssocMonomial = MixedMonomial;

/// The T_N form of a T_A monomial: Y-part and NLSW tree.
struct TNMonomial {
    YMonomial y;
    LieTree x;
};
TNMonomial to_tn(const TAMonomial& m);
TAMonomial to_ta(const TNMonomial& m);

using LieElement = LinComb<MixedMonomial, LieOrder>;
using AssocElement = LinComb<MixedMonomial, AssocOrder>;

class NotALieElement : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The basis element u^Y [u^X]; u^X must be an ALSW.
LieElement lie_basis(Field f, const TAMonomial& m, const Scalar& c);
LieElement lie_basis(Field f, const TAMonomial& m);
LieElement lie_generator(Field f, Letter x);

LieElement lie_bracket(const LieElement& a, const LieElement& b);
LieElement operator*(const LieElement& e, const YMonomial& m);
LieElement operator*(const CommPoly& p, const LieElement& e);

/// Bracket of two NLSW basis elements [u],[v] over the integers, as a list of
/// (ALSW, coefficient).
const std::vector<std::pair<XWord, std::int64_t>>& nlsw_bracket(const XWord& u, const XWord& v);

/// Expansion of [w] in Z<X> (w an ALSW): leading word w with coefficient 1.
const std::vector<std::pair<XWord, std::int64_t>>& nlsw_expansion(const XWord& w);

AssocElement to_associative(const LieElement& e);
/// Inverse of to_associative by triangular peeling. Throws NotALieElement.
LieElement from_associative(const AssocElement& a);

/// Value of a bracketing tree in which marked subtrees are replaced by the
/// given elements (mark 1 -> first, mark 2 -> second).
LieElement evaluate_tree(Field f, const LieTree& t, const LieElement* mark1, const LieElement* mark2 = nullptr);

struct Leading {
    Scalar coeff;
    TAMonomial monomial;
};
/// Throws ZeroElementError for 0.
Leading leading(const LieElement& e);

LieElement make_k_monic(const LieElement& e);
/// Grouping e = sum f_i(Y)[u_i], true iff the coefficient polynomial of the
/// greatest NLSW is the constant 1.
bool is_kY_monic(const LieElement& e);

unsigned x_degree(const LieElement& e);
unsigned y_degree(const LieElement& e);
unsigned x_degree(const AssocElement& e);
unsigned y_degree(const AssocElement& e);

AssocElement operator*(const AssocElement& a, const AssocElement& b);
/// beta * left * e * right
AssocElement assoc_multiply(const AssocElement& e, const YMonomial& beta, const XWord& left, const XWord& right);
AssocElement assoc_word(Field f, const YMonomial& y, const XWord& x, const Scalar& c);
AssocElement make_k_monic(const AssocElement& e);

}  // namespace gsb
