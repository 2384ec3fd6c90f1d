#include <catch_amalgamated.hpp>

#include <random>

#include "monogen/factor_mod_p.hpp"
#include "monogen/modpoly.hpp"
#include "monogen/poly.hpp"

using namespace monogen;

static ModPolynomial MP(long m, std::vector<long> v)
{
    std::vector<Integer> c(v.begin(), v.end());
    return ModPolynomial(Integer(m), std::move(c));
}

TEST_CASE("coefficient reduction")
{
    CHECK(reduce_mod(IntPolynomial::trinomial(5, 1, 5, 6), 5) == MP(5, {1, 0, 0, 0, 0, 1}));
    CHECK(reduce_mod(IntPolynomial::trinomial(5, 1, 2, 4), 2) == MP(2, {0, 0, 0, 0, 0, 1}));
    CHECK(reduce_mod(IntPolynomial::trinomial(6, 1, 3, 4), 3) == MP(3, {1, 0, 0, 0, 0, 0, 1}));
    CHECK_THROWS_AS(reduce_mod(IntPolynomial::trinomial(5, 1, 1, 1), 1), std::invalid_argument);
}

TEST_CASE("lifts")
{
    ModPolynomial f = MP(5, {4, 3});
    CHECK(lift_canonical(f) == parse_polynomial("3x+4"));
    CHECK(lift_symmetric(f) == parse_polynomial("-2x-1"));
}

TEST_CASE("modular division and gcd")
{
    ModPolynomial f = MP(5, {1, 0, 0, 0, 0, 1});  // x^5 + 1 = (x+1)^5 mod 5
    auto [q, r] = mod_divrem(f, MP(5, {1, 1}));
    CHECK(r.is_zero());
    CHECK(q * MP(5, {1, 1}) == f);
    // x^2 - 1 = (x-1)(x+1) mod 5 shares x - 1 = x + 4 with it.
    CHECK(mod_gcd(MP(5, {4, 0, 1}), MP(5, {4, 1})) == MP(5, {4, 1}));
    CHECK(mod_gcd(f, ModPolynomial(Integer(5))) == f);  // gcd with zero
    CHECK(mod_divides(MP(5, {1, 1}), f));
    CHECK_FALSE(mod_divides(MP(5, {2, 1}), f));
}

static ModPolynomial reassembled(const FactorListModP& fl, const Integer& p)
{
    return fl.reassemble(p);
}

TEST_CASE("factorization over F_p matches known shapes")
{
    // x^5 + ax + b mod 2 with a odd, b even: x (x+1)^4
    {
        FactorListModP fl = factor_mod_p(reduce_mod(IntPolynomial::trinomial(5, 1, 3, 4), 2));
        REQUIRE(fl.factors.size() == 2);
        CHECK(fl.factors[0].factor == MP(2, {0, 1}));
        CHECK(fl.factors[0].exponent == 1);
        CHECK(fl.factors[1].factor == MP(2, {1, 1}));
        CHECK(fl.factors[1].exponent == 4);
    }
    // x^6 + b mod 3, b = 1: (x^2 + 1)^3
    {
        FactorListModP fl = factor_mod_p(reduce_mod(parse_polynomial("x^6+1"), 3));
        REQUIRE(fl.factors.size() == 1);
        CHECK(fl.factors[0].factor == MP(3, {1, 0, 1}));
        CHECK(fl.factors[0].exponent == 3);
    }
    // x^6 + ax + b mod 2 with a even, b odd: (x+1)^2 (x^2+x+1)^2
    {
        FactorListModP fl = factor_mod_p(reduce_mod(IntPolynomial::trinomial(6, 1, 4, 3), 2));
        REQUIRE(fl.factors.size() == 2);
        CHECK(fl.factors[0].factor == MP(2, {1, 1}));
        CHECK(fl.factors[0].exponent == 2);
        CHECK(fl.factors[1].factor == MP(2, {1, 1, 1}));
        CHECK(fl.factors[1].exponent == 2);
    }
}

TEST_CASE("factorization over F_p reassembles, randomized")
{
    std::mt19937_64 rng(5);
    const long ps[] = {2, 3, 5, 7, 13};
    for (int i = 0; i < 300; ++i) {
        Integer p(ps[i % 5]);
        int deg = 1 + static_cast<int>(rng() % 8);
        std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
        for (int j = 0; j < deg; ++j) c[static_cast<std::size_t>(j)] = Integer(static_cast<unsigned long>(rng())) % p;
        c[static_cast<std::size_t>(deg)] = 1 + Integer(static_cast<unsigned long>(rng())) % (p - 1);
        ModPolynomial f(p, std::move(c));
        FactorListModP fl = factor_mod_p(f);
        CHECK(reassembled(fl, p) == f);
        for (const auto& mf : fl.factors) {
            CHECK(mf.factor.is_monic());
            CHECK(is_irreducible_mod_p(mf.factor));
        }
    }
}

TEST_CASE("irreducibility over F_p")
{
    CHECK(is_irreducible_mod_p(MP(2, {1, 1, 1})));
    CHECK_FALSE(is_irreducible_mod_p(MP(2, {1, 0, 1})));
    CHECK(is_irreducible_mod_p(MP(5, {2, 0, 1})));  // x^2 + 2 mod 5
}
