#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "support.hpp"

using namespace testing;

namespace {

AssocElement commutator(const AssocElement& a, const AssocElement& b)
{
    return a * b - b * a;
}

}  // namespace

TEST_CASE("mixed order: X first, then Y grlex")
{
    const YMonomial y1y3({1, 0, 1}), y2sq({0, 2});
    CHECK(monomial_compare(y1y3, y2sq) > 0);
    CHECK(mixed_compare({YMonomial(), word({2, 1})}, {YMonomial({5}), word({2})}) > 0);
    CHECK(mixed_compare({YMonomial({0, 1}), word({2})}, {YMonomial({1}), word({2})}) > 0);
    CHECK(mixed_compare({YMonomial({0, 1}), word({2})}, {YMonomial({3}), word({2})}) < 0);
    CHECK(mixed_compare({YMonomial({1}), word({2})}, {YMonomial({1}), word({2})}) == 0);
}

TEST_CASE("NLSW expansion agrees with the bracket-string oracle")
{
    for (const auto& w : enumerate_alsw(3, 7)) {
        const auto& mine = nlsw_expansion(w);
        oracle::Poly got;
        for (const auto& [u, c] : mine) oracle::add(got, oracle::to_word(u), c);
        CHECK(got == oracle::expand(std_bracketing(w).debug()));
        for (const auto& [u, c] : mine)
            if (u == w) CHECK(c == 1);
            else CHECK(lex_compare(u, w) < 0);
    }
}

TEST_CASE("bracket of basis elements agrees with the commutator")
{
    const Field q = Field::rationals();
    const auto words = enumerate_alsw(3, 4);
    for (const auto& u : words)
        for (const auto& v : words) {
            const LieElement b = lie_bracket(lie_basis(q, {YMonomial(), u}), lie_basis(q, {YMonomial(), v}));
            const oracle::Poly want = oracle::commutator(oracle::expand(std_bracketing(u).debug()),
                                                         oracle::expand(std_bracketing(v).debug()));
            CHECK(oracle::to_poly(to_associative(b)) == want);
            oracle::Poly table;
            for (const auto& [w, c] : nlsw_bracket(u, v))
                for (const auto& [t, d] : nlsw_expansion(w)) oracle::add(table, oracle::to_word(t), c * d);
            CHECK(table == want);
        }
}

TEST_CASE("worked examples")
{
    const auto ctx = context(Field::rationals(), 3, 3);
    CHECK(render(lie("[x1,x2]", ctx), ctx) == "-[x2,x1]");
    CHECK(render(lie("[x2,[x1,x2]]", ctx), ctx) == "-[x2,[x2,x1]]");
    CHECK(lie("[x1,x1]", ctx).is_zero());
    CHECK(render(lie("[y1*x2,y2*x1]", ctx), ctx) == "y2*y1*[x2,x1]");
    // [[x3,x2],x1] = [x3,[x2,x1]] + [[x3,x1],x2]
    CHECK(lie("[[x3,x2],x1]", ctx) == lie("[x3,[x2,x1]] + [[x3,x1],x2]", ctx));
    const LieElement e = lie("y2*[x2,x1] + y1^2*[x2,x1] + x3", ctx);
    CHECK(leading(e).monomial.x == word({2, 1}));
    CHECK(leading(e).monomial.y == YMonomial({2}));
    CHECK(is_kY_monic(lie("y1*[x2,x1] + [x2,x1] + x1", ctx)) == false);
    CHECK(is_kY_monic(lie("[x2,x1] + y1*x1", ctx)));
    CHECK_FALSE(is_kY_monic(lie("2*[x2,x1]", ctx)));
    CHECK(x_degree(e) == 2);
    CHECK(y_degree(e) == 2);
}

TEST_CASE("Lie axioms on random elements")
{
    std::mt19937_64 rng(7);
    for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)})
        for (int trial = 0; trial < 40; ++trial) {
            const LieElement a = random_lie(rng, f, 2, 3, 3, 2, 3);
            const LieElement b = random_lie(rng, f, 2, 3, 3, 2, 3);
            const LieElement c = random_lie(rng, f, 2, 3, 2, 1, 2);
            CHECK(lie_bracket(a, a).is_zero());
            CHECK(lie_bracket(a, b) == -lie_bracket(b, a));
            const LieElement jac = lie_bracket(a, lie_bracket(b, c)) + lie_bracket(b, lie_bracket(c, a)) +
                                   lie_bracket(c, lie_bracket(a, b));
            CHECK(jac.is_zero());
            CHECK(lie_bracket(a + b, c) == lie_bracket(a, c) + lie_bracket(b, c));
            // k[Y]-bilinear
            const YMonomial m({1, 1});
            CHECK(lie_bracket(a * m, c) == lie_bracket(a, c) * m);
            CHECK(to_associative(lie_bracket(a, b)) == commutator(to_associative(a), to_associative(b)));
        }
}

TEST_CASE("associative round trip")
{
    std::mt19937_64 rng(11);
    for (Field f : {Field::rationals(), Field::prime(5)})
        for (int trial = 0; trial < 60; ++trial) {
            const LieElement a = random_lie(rng, f, 3, 3, 5, 3, 5);
            CHECK(from_associative(to_associative(a)) == a);
        }
    const Field q = Field::rationals();
    CHECK_THROWS_AS(from_associative(assoc_word(q, YMonomial(), word({1, 2}), Scalar::one(q))), NotALieElement);
    CHECK_THROWS_AS(from_associative(assoc_word(q, YMonomial(), word({1, 1}), Scalar::one(q))), NotALieElement);
    CHECK(from_associative(AssocElement(q)).is_zero());
}

TEST_CASE("T_A and T_N forms")
{
    for (const auto& w : enumerate_alsw(3, 5)) {
        const TAMonomial m{YMonomial({2, 1}), w};
        const TNMonomial n = to_tn(m);
        CHECK(n.x == std_bracketing(w));
        CHECK(to_ta(n) == m);
    }
}

TEST_CASE("evaluate_tree substitutes marks")
{
    const auto ctx = context(Field::rationals(), 1, 3);
    const Field q = ctx.field;
    const LieElement f = lie("[x2,x1] + y1*x1", ctx);
    const LieTree t = special_bracketing(word({3, 2, 1}), word({2, 1}), 1);
    CHECK(evaluate_tree(q, t, &f) == lie("[x3,[x2,x1] + y1*x1]", ctx));
    const LieTree plain = std_bracketing(word({3, 2, 1}));
    CHECK(evaluate_tree(q, plain, nullptr) == lie("[x3,[x2,x1]]", ctx));
}

TEST_CASE("associative products")
{
    const Field q = Field::rationals();
    const AssocElement a = assoc_word(q, YMonomial({1}), word({2}), Scalar(q, 3));
    const AssocElement b = assoc_word(q, YMonomial({0, 1}), word({1}), Scalar::one(q));
    const AssocElement ab = a * b;
    CHECK(ab.leading_monomial().x == word({2, 1}));
    CHECK(ab.leading_monomial().y == YMonomial({1, 1}));
    CHECK(ab.leading_coeff() == Scalar(q, 3));
    CHECK(assoc_multiply(b, YMonomial({1}), word({3}), word({2})) ==
          assoc_word(q, YMonomial({1, 1}), word({3, 1, 2}), Scalar::one(q)));
    CHECK(make_k_monic(a).leading_coeff().is_one());
}

TEST_CASE("bracket is compatible with the monomial order")
{
    const Field f = Field::prime(3);
    const auto words = enumerate_alsw(3, 3);
    std::vector<TAMonomial> monos;
    for (const auto& w : words)
        for (const YMonomial& y : {YMonomial(), YMonomial({1}), YMonomial({0, 1}), YMonomial({2})})
            monos.push_back({y, w});
    std::size_t compared = 0;
    for (const auto& w : monos)
        for (const auto& u : monos) {
            if (u.x == w.x) continue;
            const LieElement uw = lie_bracket(lie_basis(f, u), lie_basis(f, w));
            for (const auto& v : monos) {
                if (mixed_compare(u, v) <= 0) continue;
                const LieElement vw = lie_bracket(lie_basis(f, v), lie_basis(f, w));
                if (vw.is_zero()) continue;
                CHECK(mixed_compare(leading(uw).monomial, leading(vw).monomial) > 0);
                ++compared;
            }
        }
    CHECK(compared > 10000);
}
