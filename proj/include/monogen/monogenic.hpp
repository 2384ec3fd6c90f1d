#ifndef MONOGEN_MONOGENIC_HPP
#define MONOGEN_MONOGENIC_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "monogen/dedekind.hpp"
#include "monogen/factor.hpp"
#include "monogen/integer.hpp"
#include "monogen/irreducible.hpp"
#include "monogen/poly.hpp"
#include "monogen/polygon.hpp"
#include "monogen/resultant.hpp"

namespace monogen {

enum class TestMethod { Ore, Dedekind, Both };
enum class Outcome { Generator, NotGenerator, Unknown };

struct PrimeTestResult {
    Integer p;
    bool divides_index;
    TestMethod method;
    bool agreement;  // always true when method == Both and engines agree
};

struct MonogenicityVerdict {
    IntPolynomial polynomial;
    bool irreducible = false;
    Integer discriminant = 0;
    std::vector<PrimeTestResult> tested_primes;
    Outcome outcome = Outcome::Unknown;
    Integer unknown_cofactor = 1;  // composite part of disc that resisted factoring
};

// Does theta, a root of f, generate a power integral basis?  Primes whose
// square divides disc(f) are screened with both the polygon and Dedekind
// engines; disc = disc(K) * index^2 makes every other prime harmless.
inline MonogenicityVerdict certify_generator(const IntPolynomial& f, const Effort& effort = {})
{
    if (f.degree() < 2 || !f.is_monic())
        throw std::invalid_argument("certify_generator: f must be monic of degree >= 2");
    MonogenicityVerdict v;
    v.polynomial = f;
    v.discriminant = discriminant(f);
    if (v.discriminant == 0) throw std::domain_error("certify_generator: not squarefree as a polynomial");

    v.irreducible = is_irreducible_over_Q(f);
    if (!v.irreducible) {
        v.outcome = Outcome::Unknown;
        return v;
    }

    Factorization disc_factors = factorize(v.discriminant, effort);
    bool any_divides = false;
    for (const auto& pp : disc_factors.factors) {
        if (pp.exponent < 2) continue;
        bool ore = ore_p_divides_index(f, pp.prime, effort.seed);
        bool ded = dedekind_p_divides_index(f, pp.prime, DedekindOptions{false, false, effort.seed});
        v.tested_primes.push_back({pp.prime, ore, TestMethod::Both, ore == ded});
        if (ore) any_divides = true;
    }
    if (!disc_factors.complete) v.unknown_cofactor = disc_factors.cofactor;

    if (any_divides)
        v.outcome = Outcome::NotGenerator;
    else if (v.unknown_cofactor == 1)
        v.outcome = Outcome::Generator;
    else
        v.outcome = Outcome::Unknown;
    return v;
}

enum class Family { QuinticLinear, SexticLinear, QuinticNM1, SexticNM1 };

// The square-free hypothesis quantity (X + Y)/gcd(X, Y) of the four
// closed-form theorems.
inline Integer hypothesis_quantity(Family family, const Integer& u, const Integer& v)
{
    Integer X, Y;
    switch (family) {
        case Family::QuinticLinear:  // (a, b), f = x^5 + ax + b
            X = pow_si(2, 8) * pow_ui(u, 5);
            Y = pow_si(5, 5) * pow_ui(v, 4);
            break;
        case Family::SexticLinear:  // (a, b), f = x^6 + ax + b
            X = pow_si(6, 6) * pow_ui(v, 5);
            Y = -pow_si(5, 5) * pow_ui(u, 6);
            break;
        case Family::QuinticNM1:  // (c, d), g = x^5 + cx^4 + d
            X = pow_si(5, 5) * v;
            Y = pow_si(2, 8) * pow_ui(u, 5);
            break;
        case Family::SexticNM1:  // (c, d), g = x^6 + cx^5 + d
            X = pow_si(6, 6) * v;
            Y = -pow_si(5, 5) * pow_ui(u, 6);
            break;
    }
    if (X == 0 || Y == 0 || X + Y == 0) throw std::domain_error("degenerate family member");
    return (X + Y) / gcd(X, Y);
}

inline IntPolynomial family_polynomial(Family family, const Integer& u, const Integer& v)
{
    switch (family) {
        case Family::QuinticLinear: return IntPolynomial::trinomial(5, 1, u, v);
        case Family::SexticLinear: return IntPolynomial::trinomial(6, 1, u, v);
        case Family::QuinticNM1: return IntPolynomial::trinomial(5, 4, u, v);
        case Family::SexticNM1: return IntPolynomial::trinomial(6, 5, u, v);
    }
    throw std::logic_error("unreachable");
}

struct TheoremCheck {
    bool applies = false;  // irreducible and square-free hypothesis holds
    TriState monogenic = TriState::Unknown;
    std::optional<std::string> failing_condition;
};

namespace detail {

inline bool divides(const Integer& p, const Integer& n)
{
    return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t());
}

// Primes dividing g, complete or the check cannot proceed.
inline std::optional<std::vector<Integer>> prime_divisors(const Integer& g, const Effort& effort)
{
    if (g == 0) return std::nullopt;
    if (g == 1 || g == -1) return std::vector<Integer>{};
    Factorization fct = factorize(g, effort);
    if (!fct.complete) return std::nullopt;
    std::vector<Integer> ps;
    for (const auto& pp : fct.factors) ps.push_back(pp.prime);
    return ps;
}

inline TheoremCheck theorem_common(Family family, const Integer& u, const Integer& v,
                                   const Effort& effort)
{
    TheoremCheck out;
    IntPolynomial f = family_polynomial(family, u, v);
    if (!is_irreducible_over_Q(f)) {
        out.failing_condition = "polynomial reducible over Q";
        return out;
    }
    Integer q = hypothesis_quantity(family, u, v);  // may throw on degenerate input
    if (is_squarefree(q, effort) != TriState::True) {
        out.failing_condition = "hypothesis quantity not square-free";
        return out;
    }
    out.applies = true;
    return out;
}

}  // namespace detail

// Theorem for x^5 + ax + b: monogenic iff each p | gcd(2a, 5b) satisfies
// one of the three congruence conditions.
inline TheoremCheck theorem_quintic_linear(const Integer& a, const Integer& b,
                                           const Effort& effort = {})
{
    TheoremCheck out = detail::theorem_common(Family::QuinticLinear, a, b, effort);
    if (!out.applies) return out;
    auto primes = detail::prime_divisors(gcd(2 * a, 5 * b), effort);
    if (!primes) {
        out.applies = false;
        out.monogenic = TriState::Unknown;
        out.failing_condition = "could not factor gcd(2a, 5b)";
        return out;
    }
    out.monogenic = TriState::True;
    for (const Integer& p : *primes) {
        bool ok;
        if (detail::divides(p, a) && detail::divides(p, b)) {
            ok = !detail::divides(p * p, b);
            if (!ok) out.failing_condition = "p^2 | b for p = " + p.get_str();
        } else if (p == 2) {
            ok = mod_reduce(a + b, 4) == 1;
            if (!ok) out.failing_condition = "a+b != 1 mod 4";
        } else if (p == 5) {
            Integer r = mod_reduce(b, 25);
            ok = r != mod_reduce(1 + a, 25) && r != mod_reduce(7 + 2 * a, 25) &&
                 r != mod_reduce(18 + 3 * a, 25) && r != mod_reduce(24 + 4 * a, 25);
            if (!ok) out.failing_condition = "b hits the mod-25 list";
        } else {
            throw std::logic_error("unexpected prime divisor of gcd(2a,5b)");
        }
        if (!ok) {
            out.monogenic = TriState::False;
            return out;
        }
    }
    return out;
}

// Theorem for x^6 + ax + b over p | gcd(6b, 5a).
inline TheoremCheck theorem_sextic_linear(const Integer& a, const Integer& b,
                                          const Effort& effort = {})
{
    TheoremCheck out = detail::theorem_common(Family::SexticLinear, a, b, effort);
    if (!out.applies) return out;
    auto primes = detail::prime_divisors(gcd(6 * b, 5 * a), effort);
    if (!primes) {
        out.applies = false;
        out.monogenic = TriState::Unknown;
        out.failing_condition = "could not factor gcd(6b, 5a)";
        return out;
    }
    out.monogenic = TriState::True;
    for (const Integer& p : *primes) {
        bool ok;
        if (detail::divides(p, a) && detail::divides(p, b)) {
            ok = !detail::divides(p * p, b);
            if (!ok) out.failing_condition = "p^2 | b for p = " + p.get_str();
        } else if (p == 2) {
            ok = mod_reduce(a + b, 4) == 1;
            if (!ok) out.failing_condition = "a+b != 1 mod 4";
        } else if (p == 3) {
            Integer ra = mod_reduce(a, 9), rb = mod_reduce(b, 9);
            static const long bad[6][2] = {{0, 1}, {0, 8}, {3, 2}, {3, 5}, {6, 2}, {6, 5}};
            ok = true;
            for (const auto& pr : bad)
                if (ra == pr[0] && rb == pr[1]) ok = false;
            if (!ok) out.failing_condition = "(a,b) in the mod-9 set";
        } else if (p == 5) {
            // The four bad classes solve a^6 - a^2 + b == 0 mod 25; rederiving
            // them via Hensel lifting gives 18 + 2b in the third family.
            Integer r = mod_reduce(a, 25);
            ok = r != mod_reduce(1 - 4 * b, 25) && r != mod_reduce(7 + 3 * b, 25) &&
                 r != mod_reduce(18 + 2 * b, 25) && r != mod_reduce(24 + 4 * b, 25);
            if (!ok) out.failing_condition = "a hits the mod-25 list";
        } else {
            throw std::logic_error("unexpected prime divisor of gcd(6b,5a)");
        }
        if (!ok) {
            out.monogenic = TriState::False;
            return out;
        }
    }
    return out;
}

// Theorem for x^5 + cx^4 + d: monogenic iff d is square-free and, when
// 5 | c but 5 ∤ d, c + d avoids {1, 7, 18, 24} mod 25.
inline TheoremCheck theorem_quintic_nm1(const Integer& c, const Integer& d,
                                        const Effort& effort = {})
{
    TheoremCheck out = detail::theorem_common(Family::QuinticNM1, c, d, effort);
    if (!out.applies) return out;
    TriState dsf = is_squarefree(d, effort);
    if (dsf == TriState::Unknown) {
        out.applies = false;
        out.monogenic = TriState::Unknown;
        out.failing_condition = "could not decide square-freeness of d";
        return out;
    }
    if (dsf == TriState::False) {
        out.monogenic = TriState::False;
        out.failing_condition = "d not square-free";
        return out;
    }
    if (detail::divides(Integer(5), c) && !detail::divides(Integer(5), d)) {
        Integer r = mod_reduce(c + d, 25);
        if (r == 1 || r == 7 || r == 18 || r == 24) {
            out.monogenic = TriState::False;
            out.failing_condition = "c+d in {1,7,18,24} mod 25";
            return out;
        }
    }
    out.monogenic = TriState::True;
    return out;
}

// Theorem for x^6 + cx^5 + d.
inline TheoremCheck theorem_sextic_nm1(const Integer& c, const Integer& d,
                                       const Effort& effort = {})
{
    TheoremCheck out = detail::theorem_common(Family::SexticNM1, c, d, effort);
    if (!out.applies) return out;
    TriState dsf = is_squarefree(d, effort);
    if (dsf == TriState::Unknown) {
        out.applies = false;
        out.monogenic = TriState::Unknown;
        out.failing_condition = "could not decide square-freeness of d";
        return out;
    }
    if (dsf == TriState::False) {
        out.monogenic = TriState::False;
        out.failing_condition = "d not square-free";
        return out;
    }
    if (detail::divides(Integer(2), c) && !detail::divides(Integer(2), d)) {
        if (mod_reduce(c + d, 4) != 1) {
            out.monogenic = TriState::False;
            out.failing_condition = "c+d != 1 mod 4";
            return out;
        }
    }
    if (detail::divides(Integer(3), c) && !detail::divides(Integer(3), d)) {
        // Same excluded classes as for x^6 + ax + b at p = 3, rederived with
        // both index engines over every residue class.
        Integer rc = mod_reduce(c, 9), rd = mod_reduce(d, 9);
        static const long bad[6][2] = {{0, 1}, {0, 8}, {3, 2}, {3, 5}, {6, 2}, {6, 5}};
        for (const auto& pr : bad) {
            if (rc == pr[0] && rd == pr[1]) {
                out.monogenic = TriState::False;
                out.failing_condition = "(c,d) in the mod-9 set";
                return out;
            }
        }
    }
    out.monogenic = TriState::True;
    return out;
}

inline TheoremCheck theorem_check(Family family, const Integer& u, const Integer& v,
                                  const Effort& effort = {})
{
    switch (family) {
        case Family::QuinticLinear: return theorem_quintic_linear(u, v, effort);
        case Family::SexticLinear: return theorem_sextic_linear(u, v, effort);
        case Family::QuinticNM1: return theorem_quintic_nm1(u, v, effort);
        case Family::SexticNM1: return theorem_sextic_nm1(u, v, effort);
    }
    throw std::logic_error("unreachable");
}

}  // namespace monogen

#endif
