#include "gsb/freelie.hpp"

#include <algorithm>
#include <unordered_map>

namespace gsb {

namespace {

using IntComb = std::vector<std::pair<XWord, std::int64_t>>;

struct PairHash {
    std::size_t operator()(const std::pair<XWord, XWord>& p) const
    {
        return XWordHash{}(p.first) * 1000003u ^ XWordHash{}(p.second);
    }
};

// Sparse integer combination of words keyed in deg-lex order.
using WordMap = std::map<XWord, std::int64_t, DegLexLess>;

void add_to(WordMap& m, const XWord& w, std::int64_t c)
{
    if (c == 0) return;
    auto [it, inserted] = m.try_emplace(w, c);
    if (!inserted && (it->second += c) == 0) m.erase(it);
}

IntComb expand_tree(const LieTree& t)
{
    if (t.is_leaf()) return {{XWord::letter(t.letter()), 1}};
    const IntComb l = expand_tree(t.left());
    const IntComb r = expand_tree(t.right());
    WordMap acc;
    for (const auto& [a, ca] : l)
        for (const auto& [b, cb] : r) {
            add_to(acc, a + b, ca * cb);
            add_to(acc, b + a, -ca * cb);
        }
    return IntComb(acc.rbegin(), acc.rend());
}

// Peels an integer associative combination into NLSW coordinates.
IntComb peel(WordMap acc)
{
    IntComb out;
    while (!acc.empty()) {
        const auto [w, c] = *acc.rbegin();
        if (!is_alsw(w)) throw NotALieElement("leading word " + w.debug() + " is not an ALSW");
        for (const auto& [u, cu] : nlsw_expansion(w)) add_to(acc, u, -c * cu);
        out.emplace_back(w, c);
    }
    return out;
}

}  // namespace

std::strong_ordering mixed_compare(const MixedMonomial& a, const MixedMonomial& b)
{
    if (auto c = deglex_compare(a.x, b.x); c != 0) return c;
    return monomial_compare(a.y, b.y);
}

TNMonomial to_tn(const TAMonomial& m)
{
    return {m.y, std_bracketing(m.x)};
}

TAMonomial to_ta(const TNMonomial& m)
{
    if (!is_nlsw(m.x)) throw WordError("to_ta: tree " + m.x.debug() + " is not an NLSW");
    return {m.y, m.x.foliage()};
}

const IntComb& nlsw_expansion(const XWord& w)
{
    thread_local std::unordered_map<XWord, IntComb, XWordHash> cache;
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    return cache.emplace(w, expand_tree(std_bracketing(w))).first->second;
}

const IntComb& nlsw_bracket(const XWord& u, const XWord& v)
{
    thread_local std::unordered_map<std::pair<XWord, XWord>, IntComb, PairHash> cache;
    auto key = std::make_pair(u, v);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    IntComb result;
    const auto order = lex_compare(u, v);
    if (order == 0) {
        // [u,u] = 0
    } else if (order < 0) {
        result = nlsw_bracket(v, u);
        for (auto& [w, c] : result) c = -c;
    } else {
        const LieTree tu = std_bracketing(u);
        if (tu.is_leaf() || lex_compare(tu.right().foliage(), v) <= 0) {
            // [[u][v]] is already an NLSW
            result.emplace_back(u + v, 1);
        } else {
            WordMap acc;
            for (const auto& [a, ca] : nlsw_expansion(u))
                for (const auto& [b, cb] : nlsw_expansion(v)) {
                    add_to(acc, a + b, ca * cb);
                    add_to(acc, b + a, -ca * cb);
                }
            result = peel(std::move(acc));
        }
    }
    return cache.emplace(std::move(key), std::move(result)).first->second;
}

LieElement lie_basis(Field f, const TAMonomial& m, const Scalar& c)
{
    if (m.x.empty() || !is_alsw(m.x)) throw WordError("lie_basis: " + m.x.debug() + " is not an ALSW");
    return LieElement(f, m, c);
}

LieElement lie_basis(Field f, const TAMonomial& m)
{
    return lie_basis(f, m, Scalar::one(f));
}

LieElement lie_generator(Field f, Letter x)
{
    return LieElement(f, TAMonomial{YMonomial(), XWord::letter(x)});
}

LieElement lie_bracket(const LieElement& a, const LieElement& b)
{
    const Field f = a.field();
    LieElement out(f);
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const IntComb& br = nlsw_bracket(ma.x, mb.x);
            if (br.empty()) continue;
            const YMonomial y = ma.y * mb.y;
            const Scalar c = ca * cb;
            for (const auto& [w, n] : br) out.add_term(TAMonomial{y, w}, c * Scalar(f, n));
        }
    return out;
}

LieElement operator*(const LieElement& e, const YMonomial& m)
{
    if (m.is_one()) return e;
    LieElement out(e.field());
    out.add_mapped(e, Scalar::one(e.field()), [&](const MixedMonomial& t) { return MixedMonomial{t.y * m, t.x}; });
    return out;
}

LieElement operator*(const CommPoly& p, const LieElement& e)
{
    LieElement out(e.field());
    for (const auto& [m, c] : p.terms())
        out.add_mapped(e, c, [&](const MixedMonomial& t) { return MixedMonomial{t.y * m, t.x}; });
    return out;
}

AssocElement to_associative(const LieElement& e)
{
    const Field f = e.field();
    AssocElement out(f);
    for (const auto& [m, c] : e.terms())
        for (const auto& [w, n] : nlsw_expansion(m.x)) out.add_term(AssocMonomial{m.y, w}, c * Scalar(f, n));
    return out;
}

LieElement from_associative(const AssocElement& a)
{
    const Field f = a.field();
    AssocElement rest = a;
    LieElement out(f);
    while (!rest.is_zero()) {
        const AssocMonomial m = rest.leading_monomial();
        const Scalar c = rest.leading_coeff();
        if (!is_alsw(m.x)) throw NotALieElement("leading word " + m.x.debug() + " is not an ALSW");
        for (const auto& [w, n] : nlsw_expansion(m.x)) rest.add_term(AssocMonomial{m.y, w}, -(c * Scalar(f, n)));
        out.add_term(m, c);
    }
    return out;
}

LieElement evaluate_tree(Field f, const LieTree& t, const LieElement* mark1, const LieElement* mark2)
{
    if (t.mark() == 1 && mark1 != nullptr) return *mark1;
    if (t.mark() == 2 && mark2 != nullptr) return *mark2;
    if (t.is_leaf()) return lie_generator(f, t.letter());
    if (!t.has_mark()) {
        // unmarked subtrees that are already NLSWs are basis elements
        const XWord w = t.foliage();
        if (is_alsw(w) && std_bracketing(w) == t) return lie_basis(f, TAMonomial{YMonomial(), w});
    }
    return lie_bracket(evaluate_tree(f, t.left(), mark1, mark2), evaluate_tree(f, t.right(), mark1, mark2));
}

Leading leading(const LieElement& e)
{
    return {e.leading_coeff(), e.leading_monomial()};
}

LieElement make_k_monic(const LieElement& e)
{
    return e.monic();
}

bool is_kY_monic(const LieElement& e)
{
    if (e.is_zero()) throw ZeroElementError();
    const XWord& top = e.leading_monomial().x;
    // the coefficient polynomial of [top] is the constant 1
    std::size_t count = 0;
    for (const auto& [m, c] : e.terms())
        if (m.x == top) {
            ++count;
            if (!m.y.is_one() || !c.is_one()) return false;
        }
    return count == 1;
}

unsigned x_degree(const LieElement& e)
{
    unsigned d = 0;
    for (const auto& [m, c] : e.terms()) d = std::max<unsigned>(d, static_cast<unsigned>(m.x.size()));
    return d;
}

unsigned y_degree(const LieElement& e)
{
    unsigned d = 0;
    for (const auto& [m, c] : e.terms()) d = std::max(d, m.y.degree());
    return d;
}

unsigned x_degree(const AssocElement& e)
{
    unsigned d = 0;
    for (const auto& [m, c] : e.terms()) d = std::max<unsigned>(d, static_cast<unsigned>(m.x.size()));
    return d;
}

unsigned y_degree(const AssocElement& e)
{
    unsigned d = 0;
    for (const auto& [m, c] : e.terms()) d = std::max(d, m.y.degree());
    return d;
}

AssocElement operator*(const AssocElement& a, const AssocElement& b)
{
    AssocElement out(a.field());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) out.add_term(AssocMonomial{ma.y * mb.y, ma.x + mb.x}, ca * cb);
    return out;
}

AssocElement assoc_multiply(const AssocElement& e, const YMonomial& beta, const XWord& left, const XWord& right)
{
    AssocElement out(e.field());
    out.add_mapped(e, Scalar::one(e.field()),
                   [&](const AssocMonomial& m) { return AssocMonomial{m.y * beta, left + m.x + right}; });
    return out;
}

AssocElement assoc_word(Field f, const YMonomial& y, const XWord& x, const Scalar& c)
{
    return AssocElement(f, AssocMonomial{y, x}, c);
}

AssocElement make_k_monic(const AssocElement& e)
{
    return e.monic();
}

}  // namespace gsb
