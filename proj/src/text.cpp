#include "gsb/text.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace gsb {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      kind_(kind),
      line_(line),
      column_(column)
{
}

namespace {

struct Value {
    CommPoly poly;
    LieElement lie;
    bool is_lie = false;
};

class ExprParser {
public:
    ExprParser(const std::string& text, const LiePresentation& ctx, std::size_t line, std::size_t col0)
        : s_(text), ctx_(ctx), line_(line), col0_(col0)
    {
    }

    Value parse_all()
    {
        Value v = sum();
        skip();
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

    Value parse_relation()
    {
        Value lhs = sum();
        skip();
        if (i_ < s_.size() && s_[i_] == '=') {
            ++i_;
            Value rhs = sum();
            skip();
            if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
            return combine(lhs, rhs, false);
        }
        if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return lhs;
    }

    [[noreturn]] void fail(const std::string& msg, ParseError::Kind kind = ParseError::Kind::syntax) const
    {
        throw ParseError(kind, line_, col0_ + i_ + 1, msg);
    }

private:
    void skip()
    {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c)
    {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    Value constant(const Scalar& c) const
    {
        Value v{CommPoly(ctx_.field), LieElement(ctx_.field), false};
        if (!c.is_zero()) v.poly = CommPoly(ctx_.field, YMonomial(), c);
        return v;
    }

    Value combine(const Value& a, const Value& b, bool plus)
    {
        const Scalar sign = plus ? Scalar::one(ctx_.field) : -Scalar::one(ctx_.field);
        if (a.is_lie || b.is_lie) {
            const bool a_ok = a.is_lie || a.poly.is_zero();
            const bool b_ok = b.is_lie || b.poly.is_zero();
            if (!a_ok || !b_ok) fail("cannot add a scalar polynomial to a Lie element");
            Value out{CommPoly(ctx_.field), a.lie, true};
            LieElement t = b.lie;
            t *= sign;
            out.lie += t;
            return out;
        }
        Value out = a;
        CommPoly t = b.poly;
        t *= sign;
        out.poly += t;
        return out;
    }

    Value sum()
    {
        skip();
        bool negate = false;
        if (eat('-'))
            negate = true;
        else
            eat('+');
        Value acc = product();
        if (negate) acc = combine(constant(Scalar::zero(ctx_.field)), acc, false);
        for (;;) {
            if (eat('+'))
                acc = combine(acc, product(), true);
            else if (eat('-'))
                acc = combine(acc, product(), false);
            else
                return acc;
        }
    }

    Value product()
    {
        Value acc = factor();
        while (eat('*')) {
            Value f = factor();
            if (acc.is_lie && f.is_lie) fail("product of two Lie elements; use brackets");
            if (f.is_lie) {
                acc = Value{CommPoly(ctx_.field), acc.poly * f.lie, true};
            } else if (acc.is_lie) {
                acc.lie = f.poly * acc.lie;
            } else {
                acc.poly = acc.poly * f.poly;
            }
        }
        return acc;
    }

    Scalar number()
    {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        Rational q(BigInt(s_.substr(start, i_ - start)));
        skip();
        if (i_ < s_.size() && s_[i_] == '/') {
            ++i_;
            skip();
            const std::size_t d0 = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (d0 == i_) fail("expected a denominator");
            const BigInt den(s_.substr(d0, i_ - d0));
            if (den == 0) fail("division by zero");
            if (!ctx_.field.is_rational() && den % ctx_.field.characteristic() == 0)
                fail("denominator vanishes in " + ctx_.field.name());
            q /= Rational(den);
        }
        return Scalar(ctx_.field, q);
    }

    unsigned exponent()
    {
        skip();
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an exponent");
        return static_cast<unsigned>(std::stoul(s_.substr(start, i_ - start)));
    }

    Value factor()
    {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of expression");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(number());
        if (c == '(') {
            ++i_;
            Value v = sum();
            expect(')');
            if (eat('^')) {
                if (v.is_lie) fail("powers of Lie elements are not allowed");
                const unsigned n = exponent();
                CommPoly p(ctx_.field, YMonomial());
                for (unsigned k = 0; k < n; ++k) p = p * v.poly;
                v.poly = p;
            }
            return v;
        }
        if (c == '[') {
            ++i_;
            Value a = sum();
            expect(',');
            Value b = sum();
            expect(']');
            if (!a.is_lie || !b.is_lie) fail("bracket arguments must be Lie elements");
            return Value{CommPoly(ctx_.field), lie_bracket(a.lie, b.lie), true};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            const std::string name = s_.substr(start, i_ - start);
            auto yi = std::find(ctx_.y_names.begin(), ctx_.y_names.end(), name);
            if (yi != ctx_.y_names.end()) {
                unsigned power = 1;
                if (eat('^')) power = exponent();
                const auto idx = static_cast<std::size_t>(yi - ctx_.y_names.begin());
                Value v = constant(Scalar::zero(ctx_.field));
                v.poly = CommPoly(ctx_.field, YMonomial::generator(idx, static_cast<std::uint16_t>(power)));
                return v;
            }
            auto xi = std::find(ctx_.x_names.begin(), ctx_.x_names.end(), name);
            if (xi != ctx_.x_names.end()) {
                skip();
                if (i_ < s_.size() && s_[i_] == '^') fail("powers of Lie generators are not allowed");
                const auto idx = static_cast<Letter>(xi - ctx_.x_names.begin());
                return Value{CommPoly(ctx_.field), lie_generator(ctx_.field, idx), true};
            }
            i_ = start;
            fail("unknown generator '" + name + "'", ParseError::Kind::unknown_generator);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    const LiePresentation& ctx_;
    std::size_t line_, col0_;
    std::size_t i_ = 0;
};

std::vector<std::string> split_words(const std::string& s)
{
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

bool valid_name(const std::string& n)
{
    if (n.empty() || !(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) return false;
    return std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Field parse_field(const std::vector<std::string>& words, std::size_t line)
{
    std::string spec;
    for (std::size_t k = 1; k < words.size(); ++k) spec += words[k];
    if (spec == "Q") return Field::rationals();
    std::string digits;
    if (spec.rfind("GF(", 0) == 0 && spec.size() > 4 && spec.back() == ')')
        digits = spec.substr(3, spec.size() - 4);
    else if (spec.rfind("GF", 0) == 0)
        digits = spec.substr(2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 9)
        throw ParseError(ParseError::Kind::syntax, line, 1, "expected 'field Q' or 'field GF <p>'");
    const auto p = static_cast<std::uint32_t>(std::stoul(digits));
    if (!is_prime(p)) throw ParseError(ParseError::Kind::field, line, 1, "GF(" + digits + "): " + digits + " is not prime");
    return Field::prime(p);
}

std::string strip_comment(const std::string& line)
{
    const auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string scalar_text(const Scalar& c)
{
    return c.to_string();
}

// Appends a term with its sign; `first` tracks the leading term.
void append_term(std::string& out, const Scalar& c, const std::string& mono, bool& first)
{
    std::string coeff = scalar_text(c);
    bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first)
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    first = false;
    if (coeff != "1") out += coeff + "*";
    out += mono;
}

std::string tree_text(const LieTree& t, const LiePresentation& ctx)
{
    if (t.is_leaf()) return ctx.x_names.at(t.letter());
    return "[" + tree_text(t.left(), ctx) + "," + tree_text(t.right(), ctx) + "]";
}

}  // namespace

LieElement parse_lie_element(const std::string& text, const LiePresentation& ctx)
{
    ExprParser p(text, ctx, 1, 0);
    Value v = p.parse_relation();
    if (!v.is_lie) {
        if (!v.poly.is_zero()) p.fail("expected a Lie element");
        return LieElement(ctx.field);
    }
    return v.lie;
}

CommPoly parse_poly(const std::string& text, const LiePresentation& ctx)
{
    ExprParser p(text, ctx, 1, 0);
    Value v = p.parse_relation();
    if (v.is_lie) p.fail("expected a polynomial in the Y generators");
    return v.poly;
}

LiePresentation parse_presentation(const std::string& text)
{
    LiePresentation p;
    p.field = Field::rationals();
    enum class Block { none, r, s } block = Block::none;
    bool relations_seen = false;
    std::istringstream in(text);
    std::string raw;
    for (std::size_t line_no = 1; std::getline(in, raw); ++line_no) {
        const std::string line = strip_comment(raw);
        const auto words = split_words(line);
        if (words.empty()) continue;
        const std::string& head = words[0];
        auto declare = [&](std::vector<std::string>& names) {
            if (relations_seen)
                throw ParseError(ParseError::Kind::syntax, line_no, 1, head + " must precede the relations");
            for (std::size_t k = 1; k < words.size(); ++k) {
                const std::string& n = words[k];
                if (!valid_name(n)) throw ParseError(ParseError::Kind::syntax, line_no, 1, "invalid name '" + n + "'");
                if (std::count(p.y_names.begin(), p.y_names.end(), n) || std::count(p.x_names.begin(), p.x_names.end(), n))
                    throw ParseError(ParseError::Kind::syntax, line_no, 1, "duplicate generator '" + n + "'");
                names.push_back(n);
            }
        };
        if (head == "field") {
            if (relations_seen) throw ParseError(ParseError::Kind::syntax, line_no, 1, "field must precede the relations");
            p.field = parse_field(words, line_no);
            block = Block::none;
        } else if (head == "ygens") {
            declare(p.y_names);
            block = Block::none;
        } else if (head == "xgens") {
            declare(p.x_names);
            block = Block::none;
        } else if (head == "rrels" && words.size() == 1) {
            block = Block::r;
        } else if (head == "srels" && words.size() == 1) {
            block = Block::s;
        } else if (block == Block::none) {
            throw ParseError(ParseError::Kind::syntax, line_no, 1, "unknown directive '" + head + "'");
        } else {
            relations_seen = true;
            const auto first = line.find_first_not_of(" \t");
            const std::string body = line.substr(first);
            ExprParser ep(body, p, line_no, first);
            Value v = ep.parse_relation();
            if (block == Block::r) {
                if (v.is_lie) throw ParseError(ParseError::Kind::syntax, line_no, first + 1, "R relations are polynomials in Y");
                if (v.poly.is_zero()) throw ParseError(ParseError::Kind::zero_relation, line_no, first + 1, "relation is zero");
                p.r.push_back(v.poly.monic());
            } else {
                if (!v.is_lie) {
                    if (v.poly.is_zero()) throw ParseError(ParseError::Kind::zero_relation, line_no, first + 1, "relation is zero");
                    throw ParseError(ParseError::Kind::syntax, line_no, first + 1, "S relations are Lie elements");
                }
                if (v.lie.is_zero()) throw ParseError(ParseError::Kind::zero_relation, line_no, first + 1, "relation is zero");
                p.s.push_back(make_k_monic(v.lie));
            }
        }
    }
    return p;
}

std::string render_ymonomial(const YMonomial& m, const LiePresentation& ctx)
{
    std::string out;
    for (std::size_t i = m.exponents().size(); i-- > 0;) {
        const unsigned e = m.exponents()[i];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.y_names.at(i);
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string render_monomial(const TAMonomial& m, const LiePresentation& ctx)
{
    const std::string y = render_ymonomial(m.y, ctx);
    const std::string x = tree_text(std_bracketing(m.x), ctx);
    return y.empty() ? x : y + "*" + x;
}

std::string render(const LieElement& e, const LiePresentation& ctx)
{
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it)
        append_term(out, it->second, render_monomial(it->first, ctx), first);
    return out;
}

std::string render(const AssocElement& e, const LiePresentation& ctx)
{
    if (e.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = e.terms().rbegin(); it != e.terms().rend(); ++it) {
        std::string mono = render_ymonomial(it->first.y, ctx);
        for (std::size_t k = 0; k < it->first.x.size(); ++k) {
            if (!mono.empty()) mono += "*";
            mono += ctx.x_names.at(it->first.x[k]);
        }
        append_term(out, it->second, mono.empty() ? "1" : mono, first);
    }
    return out;
}

std::string render(const CommPoly& p, const LiePresentation& ctx)
{
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const std::string mono = render_ymonomial(it->first, ctx);
        if (mono.empty()) {
            // constant term: the coefficient is the whole term
            std::string coeff = scalar_text(it->second);
            const bool negative = coeff[0] == '-';
            if (negative) coeff.erase(0, 1);
            out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
            out += coeff;
            first = false;
        } else {
            append_term(out, it->second, mono, first);
        }
    }
    return out;
}

std::string render_presentation(const LiePresentation& p)
{
    std::string out = "field " + (!p.field.is_rational() ? "GF " + std::to_string(p.field.characteristic()) : std::string("Q")) + "\n";
    auto names = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& n : v) s += " " + n;
        return s;
    };
    if (!p.y_names.empty()) out += "ygens" + names(p.y_names) + "\n";
    if (!p.x_names.empty()) out += "xgens" + names(p.x_names) + "\n";
    if (!p.r.empty()) {
        out += "rrels\n";
        for (const auto& r : p.r) out += render(r, p) + "\n";
    }
    if (!p.s.empty()) {
        out += "srels\n";
        for (const auto& s : p.s) out += render(s, p) + "\n";
    }
    return out;
}

}  // namespace gsb
