#include <catch_amalgamated.hpp>

#include <random>

#include "monogen/factor.hpp"
#include "monogen/primes.hpp"

using namespace monogen;

TEST_CASE("factorize small values")
{
    Factorization f = factorize(46656);
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == 2);
    CHECK(f.factors[0].exponent == 6);
    CHECK(f.factors[1].prime == 3);
    CHECK(f.factors[1].exponent == 6);
    CHECK(f.reassemble() == 46656);

    Factorization g = factorize(-12);
    CHECK(g.unit == -1);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == 2);
    CHECK(g.factors[0].exponent == 2);
    CHECK(g.factors[1].prime == 3);
    CHECK(g.factors[1].exponent == 1);
    CHECK(g.reassemble() == -12);

    Factorization one = factorize(1);
    CHECK(one.factors.empty());
    CHECK(one.cofactor == 1);
    CHECK(one.reassemble() == 1);

    CHECK_THROWS(factorize(0));
}

TEST_CASE("factorize cracks semiprimes beyond the trial bound")
{
    Integer p("1000003"), q("1000033");
    Factorization f = factorize(p * q);
    REQUIRE(f.complete);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0].prime == p);
    CHECK(f.factors[1].prime == q);

    Integer big_p("10000000019"), big_q("10000000033");
    Factorization g = factorize(big_p * big_p * big_q);
    REQUIRE(g.complete);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].prime == big_p);
    CHECK(g.factors[0].exponent == 2);
    CHECK(g.reassemble() == big_p * big_p * big_q);
}

TEST_CASE("factorize roundtrip on random values")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Integer n = Integer(static_cast<unsigned long>(rng() % 1000000000ull)) + 2;
        Factorization f = factorize(n);
        REQUIRE(f.complete);
        CHECK(f.reassemble() == n);
        for (const auto& pp : f.factors) CHECK(is_prime(pp.prime));
    }
}

TEST_CASE("square-free classification")
{
    CHECK(is_squarefree(10) == TriState::True);
    CHECK(is_squarefree(12) == TriState::False);
    CHECK(is_squarefree(3637) == TriState::True);
    CHECK(is_squarefree(-4) == TriState::False);
    CHECK(is_squarefree(1) == TriState::True);
}

TEST_CASE("incomplete factorization reports Unknown square-freeness")
{
    // Semiprime of two Mersenne primes that a tiny rho budget cannot split.
    Integer p("170141183460469231731687303715884105727");  // 2^127 - 1
    Integer q("618970019642690137449562111");               // 2^89 - 1
    Effort weak;
    weak.rho_iterations = 16;
    Factorization f = factorize(p * q, weak);
    CHECK_FALSE(f.complete);
    CHECK(f.reassemble() == p * q);
    CHECK(is_squarefree(p * q, weak) == TriState::Unknown);
}
