#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "reference_sets.hpp"
#include "support.hpp"

#include <functional>

using namespace testing;

namespace {

AssocElement assoc(const std::string& lie_text, const LiePresentation& ctx)
{
    return make_k_monic(to_associative(lie(lie_text, ctx)));
}

AssocElement word_elem(Field f, const XWord& w)
{
    return assoc_word(f, YMonomial(), w, Scalar::one(f));
}

std::vector<AssocElement> generators(const LiePresentation& p, const Caps& caps)
{
    return assoc_ideal_generators(envelope(p), r_degree_cap(p, caps));
}

}  // namespace

TEST_CASE("envelope")
{
    LiePresentation q = context(Field::rationals(), 0, 0);
    q.x_names = {"x1", "x2", "x11"};
    q.s = {lie("[x2,x1] - x11", q)};
    const auto e = envelope(q);
    REQUIRE(e.s.size() == 1);
    CHECK(render(e.s[0], q) == "x2*x1 - x1*x2 - x11");

    const auto p = data_file("cohn2.gsb");
    const auto ep = envelope(p);
    CHECK(ep.r == p.r);
    CHECK(ep.x_names == p.x_names);
    REQUIRE(ep.s.size() == 1);
    CHECK(render(ep.s[0], p) == "y3*x3 + y2*x2 + y1*x1");
    const auto gens = rendered(generators(p, {2, 4}), p);
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            CHECK(gens.count("y" + std::to_string(i) + "^2*x" + std::to_string(j)));

    CHECK(envelope(context(Field::rationals(), 1, 2)).s.empty());
}

TEST_CASE("reduction examples")
{
    const auto p = data_file("cohn2.gsb");
    const auto b = assoc_complete(generators(p, {2, 4}), 3, {2, 4}).basis;
    const AssocElement c = assoc("y2*y1*[x2,x1]", p);
    CHECK(assoc_reduce(c, b).remainder.is_zero());
    // x1 is irreducible for a commutator relation
    const auto ctx = context(Field::rationals(), 0, 2);
    const std::vector<AssocElement> comm{assoc("[x2,x1]", ctx)};
    CHECK(assoc_reduce(word_elem(ctx.field, word({1})), comm).remainder == word_elem(ctx.field, word({1})));
    CHECK(assoc_reduce(AssocElement(ctx.field), comm).steps.empty());
    // x2 x1 -> x1 x2
    CHECK(assoc_reduce(word_elem(ctx.field, word({2, 2, 1})), comm).remainder ==
          word_elem(ctx.field, word({1, 2, 2})));
}

TEST_CASE("Shirshov example: associative completion")
{
    const auto sh = data_file("shirshov.gsb");
    const auto res = assoc_complete(generators(sh, {2, 2}), sh.x_names.size(), {2, 2}, {4});
    const auto basis = rendered(res.basis, sh);
    for (const auto& r : reference::shirshov_added()) CHECK(basis.count(render(assoc(r, sh), sh)));
    CHECK(basis.count(reference::shirshov_assoc_extra));
    CHECK(assoc_reduce(assoc("x10", sh), res.basis).remainder.is_zero());
}

TEST_CASE("composition values match their definitions")
{
    std::mt19937_64 rng(29);
    const Field f = Field::prime(3);
    const Caps caps{4, 3};
    for (int trial = 0; trial < 30; ++trial) {
        AssocRuleSet rules(f);
        for (int i = 0; i < 3; ++i) {
            const LieElement e = random_lie(rng, f, 2, 2, 2, 2, 2);
            if (!e.is_zero()) rules.add(to_associative(e));
        }
        for (std::size_t i = 0; i < rules.size(); ++i)
            for (std::size_t j = 0; j < rules.size(); ++j)
                for (const auto& c : assoc_compositions(rules, i, j, 2, caps)) {
                    const AssocElement& fe = rules.rule(c.f);
                    const AssocElement& ge = rules.rule(c.g);
                    const AssocMonomial fl = fe.leading_monomial(), gl = ge.leading_monomial();
                    const YMonomial l = monomial_lcm(fl.y, gl.y);
                    const YMonomial lf = l.quotient(fl.y), lg = l.quotient(gl.y);
                    AssocElement want(f);
                    switch (c.kind) {
                    case AssocCompositionKind::inclusion:
                        CHECK(fl.x == c.a + gl.x + c.b);
                        want = assoc_multiply(fe, lf, {}, {}) - assoc_multiply(ge, lg, c.a, c.b);
                        break;
                    case AssocCompositionKind::intersection:
                        CHECK(fl.x + c.b == c.a + gl.x);
                        CHECK(c.a.size() < fl.x.size());
                        want = assoc_multiply(fe, lf, {}, c.b) - assoc_multiply(ge, lg, c.a, {});
                        break;
                    case AssocCompositionKind::external:
                        CHECK_FALSE(monomial_gcd(fl.y, gl.y).is_one());
                        CHECK(fl.x.size() + c.a.size() + gl.x.size() <= caps.max_x_deg);
                        want = assoc_multiply(fe, lf, {}, c.a + gl.x) - assoc_multiply(ge, lg, fl.x + c.a, {});
                        break;
                    case AssocCompositionKind::left_multiple:
                        CHECK_FALSE(fl.y.is_one());
                        want = assoc_multiply(fe, YMonomial(), c.a, {});
                        break;
                    case AssocCompositionKind::right_multiple:
                        CHECK_FALSE(fl.y.is_one());
                        want = assoc_multiply(fe, YMonomial(), {}, c.b);
                        break;
                    }
                    CHECK(c.value == want);
                }
    }
}

TEST_CASE("reduction properties on completed bases")
{
    std::mt19937_64 rng(31);
    for (const char* file : {"cohn2.gsb", "cartier.gsb", "one_relator.gsb"}) {
        const auto p = data_file(file);
        const Caps caps{2, 3};
        const auto basis = assoc_complete(generators(p, caps), p.x_names.size(), caps).basis;
        AssocRuleSet rules(p.field);
        for (const auto& e : basis) rules.add(e);
        for (int trial = 0; trial < 100; ++trial) {
            AssocElement h(p.field);
            for (int t = 0; t < 4; ++t) {
                const LieElement a = random_lie(rng, p.field, p.y_names.size(), p.x_names.size(), 1, 2, 1);
                const LieElement b = random_lie(rng, p.field, 0, p.x_names.size(), 1, 0, 1);
                h += to_associative(a) * to_associative(b);
            }
            const auto r1 = assoc_reduce(h, basis, MatchPolicy::first_rule);
            const auto r2 = assoc_reduce(h, basis, MatchPolicy::greatest_rule);
            CHECK(r1.remainder == r2.remainder);
            CHECK(replay(r1, basis) == h);
            CHECK(replay(r2, basis) == h);
            CHECK(assoc_reduce(r1.remainder, basis).remainder == r1.remainder);
            for (const auto& [m, c] : r1.remainder.terms()) CHECK(assoc_irreducible(m, rules));
        }
    }
}

TEST_CASE("Y-free homogeneous completion agrees with linear algebra")
{
    // dimension of the degree-d part of k<X>/Id(S) over GF(2)
    const auto ctx = context(Field::prime(2), 0, 2);
    std::mt19937_64 rng(37);
    std::vector<std::vector<oracle::Word>> words_of(6);
    for (int d = 0; d <= 5; ++d) {
        std::function<void(oracle::Word&)> fill = [&](oracle::Word& w) {
            if (static_cast<int>(w.size()) == d) {
                words_of[d].push_back(w);
                return;
            }
            for (int x = 1; x <= 2; ++x) {
                w.push_back(x);
                fill(w);
                w.pop_back();
            }
        };
        oracle::Word w;
        fill(w);
    }
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<AssocElement> s;
        std::vector<std::map<oracle::Word, int>> polys;
        const int count = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int i = 0; i < count; ++i) {
            const int d = std::uniform_int_distribution<int>(2, 3)(rng);
            std::map<oracle::Word, int> poly;
            AssocElement e(ctx.field);
            for (const auto& w : words_of[d])
                if (rng() % 3 == 0) {
                    poly[w] = 1;
                    XWord xw;
                    for (int c : w) xw = xw + word({c});
                    e += word_elem(ctx.field, xw);
                }
            if (poly.empty()) continue;
            s.push_back(e);
            polys.push_back(poly);
        }
        if (s.empty()) continue;
        const auto basis = assoc_complete(s, 2, {5, 0}).basis;
        AssocRuleSet rules(ctx.field);
        for (const auto& e : basis) rules.add(e);
        for (int d = 1; d <= 5; ++d) {
            std::vector<std::vector<bool>> rows;
            for (const auto& poly : polys) {
                const int deg = static_cast<int>(poly.begin()->first.size());
                if (deg > d) continue;
                for (int left = 0; left <= d - deg; ++left)
                    for (const auto& u : words_of[left])
                        for (const auto& v : words_of[d - deg - left]) {
                            std::set<oracle::Word> support;
                            for (const auto& [w, c] : poly) {
                                oracle::Word full = u;
                                full.insert(full.end(), w.begin(), w.end());
                                full.insert(full.end(), v.begin(), v.end());
                                support.insert(full);
                            }
                            std::vector<bool> row;
                            for (const auto& w : words_of[d]) row.push_back(support.count(w) > 0);
                            rows.push_back(row);
                        }
            }
            std::size_t irreducible = 0;
            for (const auto& w : words_of[d]) {
                XWord xw;
                for (int c : w) xw = xw + word({c});
                if (assoc_irreducible({YMonomial(), xw}, rules)) ++irreducible;
            }
            CHECK_MESSAGE(irreducible == words_of[d].size() - oracle::gf2_rank(rows), "trial " << trial << " d " << d);
        }
    }
}

TEST_CASE("commutator case has no external compositions")
{
    const auto ctx = context(Field::rationals(), 0, 2);
    AssocRuleSet rules(ctx.field);
    rules.add(assoc("[x2,x1]", ctx));
    CHECK(assoc_compositions(rules, 0, 0, 2, {6, 0}).empty());
    const auto res = assoc_complete({assoc("[x2,x1]", ctx)}, 2, {6, 0});
    CHECK(res.basis.size() == 1);
    CHECK(res.discarded == 0);
}

TEST_CASE("thread count does not change the result")
{
    const auto p = data_file("cartier.gsb");
    const auto a = assoc_complete(generators(p, {2, 4}), 6, {2, 4}, {1});
    const auto b = assoc_complete(generators(p, {2, 4}), 6, {2, 4}, {4});
    CHECK(a.basis == b.basis);
    CHECK(a.compositions == b.compositions);
    CHECK(a.discarded == b.discarded);
}
