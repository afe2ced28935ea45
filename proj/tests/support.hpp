#pragma once

// Shared fixtures, generators and independent oracles for the test suites.

#include "doctest.h"
#include "gsb/gsb_assoc.hpp"
#include "gsb/text.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef GSB_DATA_DIR
#define GSB_DATA_DIR "data"
#endif

namespace testing {

using namespace gsb;

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LiePresentation data_file(const std::string& name)
{
    return parse_presentation(slurp(std::string(GSB_DATA_DIR) + "/" + name));
}

/// A bare context with generators y1..yn, x1..xm.
inline LiePresentation context(Field f, std::size_t ys, std::size_t xs)
{
    LiePresentation p;
    p.field = f;
    for (std::size_t i = 1; i <= ys; ++i) p.y_names.push_back("y" + std::to_string(i));
    for (std::size_t i = 1; i <= xs; ++i) p.x_names.push_back("x" + std::to_string(i));
    return p;
}

inline LieElement lie(const std::string& text, const LiePresentation& ctx)
{
    return parse_lie_element(text, ctx);
}

inline XWord word(std::initializer_list<int> one_based)
{
    std::u16string s;
    for (int i : one_based) s.push_back(static_cast<char16_t>(i - 1));
    return XWord(s);
}

inline std::set<std::string> rendered(const std::vector<LieElement>& v, const LiePresentation& ctx)
{
    std::set<std::string> out;
    for (const auto& e : v) out.insert(render(e, ctx));
    return out;
}

inline std::set<std::string> rendered(const std::vector<AssocElement>& v, const LiePresentation& ctx)
{
    std::set<std::string> out;
    for (const auto& e : v) out.insert(render(e, ctx));
    return out;
}

// ---- oracles that share no code with the library ----

namespace oracle {

using Word = std::vector<int>;

/// Prefix-greater lexicographic comparison: -1, 0, 1.
inline int lex(const Word& u, const Word& v)
{
    for (std::size_t i = 0; i < std::min(u.size(), v.size()); ++i)
        if (u[i] != v[i]) return u[i] < v[i] ? -1 : 1;
    if (u.size() == v.size()) return 0;
    return u.size() < v.size() ? 1 : -1;
}

inline bool alsw_by_rotation(const Word& w)
{
    if (w.empty()) return false;
    for (std::size_t k = 1; k < w.size(); ++k) {
        Word r(w.begin() + static_cast<long>(k), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(k));
        if (lex(w, r) <= 0) return false;
    }
    return true;
}

inline long long ipow(long long b, int e)
{
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline int mobius(int n)
{
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    return n > 1 ? -m : m;
}

/// Number of Lyndon words of length n over q letters.
inline long long witt(int q, int n)
{
    long long s = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) s += mobius(d) * ipow(q, n / d);
    return s / n;
}

/// Integer associative polynomial keyed by words.
using Poly = std::map<Word, long long>;

inline void add(Poly& p, const Word& w, long long c)
{
    if ((p[w] += c) == 0) p.erase(w);
}

inline Poly commutator(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [u, cu] : a)
        for (const auto& [v, cv] : b) {
            Word uv = u, vu = v;
            uv.insert(uv.end(), v.begin(), v.end());
            vu.insert(vu.end(), u.begin(), u.end());
            add(out, uv, cu * cv);
            add(out, vu, -cu * cv);
        }
    return out;
}

/// Expansion of a bracket tree given as a nested string such as "[x2,[x2,x1]]".
inline Poly expand(const std::string& s, std::size_t& i)
{
    if (s[i] == '[') {
        ++i;
        Poly a = expand(s, i);
        ++i;  // ','
        Poly b = expand(s, i);
        ++i;  // ']'
        return commutator(a, b);
    }
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const int letter = std::stoi(s.substr(i + 1, j - i - 1));
    i = j;
    return Poly{{Word{letter}, 1}};
}

inline Poly expand(const std::string& s)
{
    std::size_t i = 0;
    return expand(s, i);
}

inline Word to_word(const XWord& w)
{
    Word out;
    for (std::size_t i = 0; i < w.size(); ++i) out.push_back(w[i] + 1);
    return out;
}

/// Integer view of an associative element over Q (coefficients must be integers).
inline Poly to_poly(const AssocElement& a)
{
    Poly out;
    for (const auto& [m, c] : a.terms()) {
        REQUIRE(m.y.is_one());
        const Rational q = c.rational();
        REQUIRE(denominator(q) == 1);
        add(out, to_word(m.x), static_cast<long long>(numerator(q)));
    }
    return out;
}

/// Rank over GF(2) of a set of bit rows.
inline std::size_t gf2_rank(std::vector<std::vector<bool>> rows)
{
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && !rows[piv][c]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = c; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
        ++rank;
    }
    return rank;
}

/// All words of length n over letters 1..q, in lexicographic order.
inline std::vector<Word> all_words(int q, int n)
{
    std::vector<Word> out{Word()};
    for (int l = 0; l < n; ++l) {
        std::vector<Word> next;
        for (const auto& w : out)
            for (int x = 1; x <= q; ++x) {
                next.push_back(w);
                next.back().push_back(x);
            }
        out = std::move(next);
    }
    return out;
}

inline Poly mod2(const Poly& p)
{
    Poly out;
    for (const auto& [w, c] : p)
        if (c % 2 != 0) out[w] = 1;
    return out;
}

/// Rank over GF(2) of the degree-d component of the Lie ideal generated by
/// homogeneous elements (given by their expansions), spanned by
/// s ad(x_i1) ... ad(x_ik).
inline std::size_t lie_ideal_rank_gf2(const std::vector<Poly>& gens, int q, int d)
{
    std::vector<Poly> span;
    std::function<void(const Poly&, int)> grow = [&](const Poly& p, int deg) {
        if (deg == d) {
            span.push_back(mod2(p));
            return;
        }
        for (int x = 1; x <= q; ++x) grow(commutator(p, Poly{{Word{x}, 1}}), deg + 1);
    };
    for (const auto& p : gens) {
        if (p.empty()) continue;
        const int deg = static_cast<int>(p.begin()->first.size());
        if (deg <= d) grow(p, deg);
    }
    const auto words = all_words(q, d);
    std::vector<std::vector<bool>> rows;
    for (const auto& p : span) {
        std::vector<bool> row;
        for (const auto& w : words) row.push_back(p.count(w) > 0);
        rows.push_back(row);
    }
    return gf2_rank(rows);
}

}  // namespace oracle

// ---- generators ----

/// Random bracket expression of X-degree n over x1..xq.
inline std::string random_bracket(std::mt19937_64& rng, int n, int q)
{
    if (n == 1) return "x" + std::to_string(std::uniform_int_distribution<int>(1, q)(rng));
    const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
    return "[" + random_bracket(rng, k, q) + "," + random_bracket(rng, n - k, q) + "]";
}

/// A random X-homogeneous Y-free system over GF(2) in the context `ctx`
/// (which fixes q = |X|): elements of degree 2..max_deg, each a sum of a few
/// random brackets. Returns the library elements and their oracle expansions.
inline std::pair<std::vector<LieElement>, std::vector<oracle::Poly>>
random_homogeneous_system(std::mt19937_64& rng, const LiePresentation& ctx, int max_deg, int max_count)
{
    const int q = static_cast<int>(ctx.x_names.size());
    std::vector<LieElement> s;
    std::vector<oracle::Poly> polys;
    const int count = std::uniform_int_distribution<int>(1, max_count)(rng);
    for (int i = 0; i < count; ++i) {
        const int d = std::uniform_int_distribution<int>(2, max_deg)(rng);
        std::string text;
        oracle::Poly poly;
        const int terms = std::uniform_int_distribution<int>(1, 3)(rng);
        for (int t = 0; t < terms; ++t) {
            const std::string b = random_bracket(rng, d, q);
            text += (t ? " + " : "") + b;
            for (const auto& [w, c] : oracle::expand(b)) oracle::add(poly, w, c);
        }
        s.push_back(parse_lie_element(text, ctx));
        polys.push_back(oracle::mod2(poly));
    }
    return {s, polys};
}

/// A random Lie element: a few basis terms with small coefficients.
inline LieElement random_lie(std::mt19937_64& rng, Field f, std::size_t ys, std::size_t xs, std::size_t max_x,
                             unsigned max_y, std::size_t terms)
{
    static thread_local std::map<std::pair<std::size_t, std::size_t>, std::vector<XWord>> cache;
    auto& words = cache[{xs, max_x}];
    if (words.empty()) words = enumerate_alsw(xs, max_x);
    LieElement e(f);
    std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> ydeg(0, max_y);
    for (std::size_t t = 0; t < terms; ++t) {
        std::vector<std::uint16_t> exps(ys, 0);
        const unsigned d = ys == 0 ? 0 : ydeg(rng);
        for (unsigned k = 0; k < d; ++k) ++exps[std::uniform_int_distribution<std::size_t>(0, ys - 1)(rng)];
        e.add_term(TAMonomial{YMonomial(exps), words[pick(rng)]}, Scalar(f, coeff(rng)));
    }
    return e;
}

}  // namespace testing
