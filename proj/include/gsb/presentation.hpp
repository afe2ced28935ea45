#pragma once

#include "gsb/commutative.hpp"
#include "gsb/freelie.hpp"

#include <string>
#include <vector>

namespace gsb {

/// Lie_K(X | S) with K = k[Y | R]. Generator lists are in increasing rank.
struct LiePresentation {
    Field field;
    std::vector<std::string> y_names;
    std::vector<std::string> x_names;
    std::vector<CommPoly> r;
    std::vector<LieElement> s;
};

/// Degree caps for every truncated computation.
struct Caps {
    unsigned max_x_deg = 0;
    unsigned max_y_deg = 0;
};

/// The relations RX = { r x : r in rels, x in X }, k-monic.
std::vector<LieElement> rx_relations(Field f, const std::vector<CommPoly>& rels, std::size_t x_count);

/// Degree cap for completing R: twice the larger of the Y cap and the
/// degree of R.
unsigned r_degree_cap(const LiePresentation& p, const Caps& caps);

/// S (k-monic) followed by RX, where R is first completed by Buchberger up to
/// `r_cap` and interreduced. This is the generating set of the ideal in
/// Lie_{k[Y]}(X) presenting the algebra.
std::vector<LieElement> lie_ideal_generators(const LiePresentation& p, unsigned r_cap);

}  // namespace gsb
