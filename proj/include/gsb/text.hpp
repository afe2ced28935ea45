#pragma once

// Presentation files and canonical rendering.
//
//   # comment
//   field GF 2            (or: field Q, field GF(3))
//   ygens y1 y2 y3        listed in increasing rank
//   xgens x1 x2 x3
//   rrels
//   y1^2
//   srels
//   y3*x3 = y2*x2 + y1*x1
//
// Relations may be written `lhs = rhs`, meaning lhs - rhs.

#include "gsb/presentation.hpp"

#include <stdexcept>
#include <string>

namespace gsb {

class ParseError : public std::runtime_error {
public:
    enum class Kind { syntax, unknown_generator, zero_relation, field };
    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message);
    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_, column_;
};

LiePresentation parse_presentation(const std::string& text);

/// A Lie expression over the generators of `ctx`.
LieElement parse_lie_element(const std::string& text, const LiePresentation& ctx);
/// A polynomial in the Y generators of `ctx`.
CommPoly parse_poly(const std::string& text, const LiePresentation& ctx);

std::string render_ymonomial(const YMonomial& m, const LiePresentation& ctx);
/// y-part times the standard bracketing of the x-part, e.g. `y2*[x3,x2]`.
std::string render_monomial(const TAMonomial& m, const LiePresentation& ctx);
/// Terms in decreasing order; `0` for zero.
std::string render(const LieElement& e, const LiePresentation& ctx);
std::string render(const AssocElement& e, const LiePresentation& ctx);
std::string render(const CommPoly& p, const LiePresentation& ctx);
/// A presentation file that parses back to `p`.
std::string render_presentation(const LiePresentation& p);

}  // namespace gsb
