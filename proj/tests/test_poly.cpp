#include <catch_amalgamated.hpp>

#include "monogen/poly.hpp"

using namespace monogen;

static IntPolynomial P(std::vector<long> v)
{
    std::vector<Integer> c(v.begin(), v.end());
    return IntPolynomial(std::move(c));
}

TEST_CASE("parser accepts the documented grammar")
{
    CHECK(parse_polynomial("x^5+2x+2") == P({2, 2, 0, 0, 0, 1}));
    CHECK(parse_polynomial("x^6 - 5x^5 + 0") == P({0, 0, 0, 0, 0, -5, 1}));
    CHECK(parse_polynomial("-x^2 + x - 1") == P({-1, 1, -1}));
    CHECK(parse_polynomial("x + x") == P({0, 2}));  // repeated powers sum
    CHECK(parse_polynomial("7") == P({7}));
    CHECK(parse_polynomial("x^3 - x^3") == IntPolynomial{});
}

TEST_CASE("parser rejects malformed input with a position")
{
    CHECK_THROWS_AS(parse_polynomial("x^^2"), ParseError);
    CHECK_THROWS_AS(parse_polynomial(""), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("3 * x"), ParseError);
    try {
        parse_polynomial("x^^2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("render/parse roundtrip")
{
    for (const char* text : {"x^5+2x+2", "x^6 - 5x^5", "-x^2+x-1", "3", "-3", "x", "x^4-x^2+12"}) {
        IntPolynomial f = parse_polynomial(text);
        CHECK(parse_polynomial(render_polynomial(f)) == f);
    }
    CHECK(render_polynomial(IntPolynomial{}) == "0");
    CHECK(render_polynomial(P({2, 2, 0, 0, 0, 1})) == "x^5 + 2x + 2");
}

TEST_CASE("division by a monic divisor")
{
    auto [q1, r1] = poly_divrem(P({5, 3, 1}), P({1, 1}));
    CHECK(q1 == P({2, 1}));
    CHECK(r1 == P({3}));

    // x^5 + ax + b by x, with a = 7, b = 9
    auto [q2, r2] = poly_divrem(IntPolynomial::trinomial(5, 1, 7, 9), P({0, 1}));
    CHECK(q2 == P({7, 0, 0, 0, 1}));
    CHECK(r2 == P({9}));

    auto [q3, r3] = poly_divrem(P({1, 1}), P({1, 0, 1}));
    CHECK(q3.is_zero());
    CHECK(r3 == P({1, 1}));

    CHECK_THROWS_AS(poly_divrem(P({1, 1}), P({1, 2})), std::invalid_argument);

    // Generic identity f = q*g + r.
    IntPolynomial f = P({3, -5, 0, 7, 2, 1}), g = P({-2, 4, 1});
    auto [q, r] = poly_divrem(f, g);
    CHECK(q * g + r == f);
    CHECK(r.degree() < g.degree());
}

TEST_CASE("basic polynomial algebra")
{
    IntPolynomial f = IntPolynomial::trinomial(5, 1, 2, 2);
    CHECK(f.degree() == 5);
    CHECK(f.is_monic());
    CHECK(f.eval(1) == 5);
    CHECK(f.eval(-2) == -34);
    CHECK(f.derivative() == P({2, 0, 0, 0, 5}));
    CHECK(P({2, 4, 6}).content() == 2);
    CHECK(P({2, -9, 6}).height() == 9);
    CHECK(IntPolynomial::monomial(3) == P({0, 0, 0, 1}));
    CHECK(IntPolynomial::constant(0).is_zero());
}
