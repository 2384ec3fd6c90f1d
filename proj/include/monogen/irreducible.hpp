#ifndef MONOGEN_IRREDUCIBLE_HPP
#define MONOGEN_IRREDUCIBLE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/factor.hpp"
#include "monogen/factor_mod_p.hpp"
#include "monogen/integer.hpp"
#include "monogen/modpoly.hpp"
#include "monogen/poly.hpp"
#include "monogen/primes.hpp"
#include "monogen/resultant.hpp"

namespace monogen {

namespace detail {

inline IntPolynomial primitive_part(const IntPolynomial& f)
{
    if (f.is_zero()) return f;
    Integer c = f.content();
    if (f.leading() < 0) c = -c;
    std::vector<Integer> v = f.coeffs();
    for (auto& x : v) x = exact_div(x, c);
    return IntPolynomial(std::move(v));
}

// Primitive gcd over Z via a pseudo-remainder sequence with content
// stripping each step.  Adequate at the degrees this library handles.
inline IntPolynomial int_gcd(IntPolynomial a, IntPolynomial b)
{
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    a = primitive_part(a);
    b = primitive_part(b);
    while (!b.is_zero()) {
        if (a.degree() < b.degree()) std::swap(a, b);
        IntPolynomial r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

// Extended gcd in F_p[x]: returns (s, t) with s*a + t*b == 1, assuming
// gcd(a, b) == 1.
inline std::pair<ModPolynomial, ModPolynomial> mod_xgcd(const ModPolynomial& a,
                                                        const ModPolynomial& b)
{
    const Integer& p = a.modulus();
    ModPolynomial r0 = a, r1 = b;
    ModPolynomial s0 = ModPolynomial::one(p), s1(p);
    ModPolynomial t0(p), t1 = ModPolynomial::one(p);
    while (!r1.is_zero()) {
        auto [q, r2] = mod_divrem(r0, r1);
        ModPolynomial s2 = s0 - q * s1;
        ModPolynomial t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw std::domain_error("mod_xgcd: inputs not coprime");
    Integer inv = ModPolynomial::inverse_of(r0.leading(), p);
    return {inv * s0, inv * t0};
}

inline IntPolynomial reduce_coeffs(const IntPolynomial& f, const Integer& m)
{
    std::vector<Integer> c = f.coeffs();
    for (auto& x : c) x = mod_reduce(x, m);
    return IntPolynomial(std::move(c));
}

// Linear Hensel lifting of a coprime pair: F == G*H mod p with monic G, H;
// returns lifts with F == G*H mod target and the same reductions mod p.
inline std::pair<IntPolynomial, IntPolynomial> hensel_lift_pair(const IntPolynomial& F,
                                                                IntPolynomial G, IntPolynomial H,
                                                                const Integer& p,
                                                                const Integer& target)
{
    ModPolynomial gp = reduce_mod(G, p), hp = reduce_mod(H, p);
    auto [s, t] = mod_xgcd(gp, hp);
    Integer m = p;
    while (m < target) {
        IntPolynomial diff = F - G * H;
        std::vector<Integer> u = diff.coeffs();
        for (auto& x : u) x = mod_reduce(exact_div(x, m), p);
        ModPolynomial up(p, std::move(u));
        ModPolynomial a = mod_rem(t * up, gp);
        auto [b, rem] = mod_divrem(up - a * hp, gp);
        if (!rem.is_zero()) throw std::logic_error("hensel_lift_pair: division not exact");
        G = G + m * lift_canonical(a);
        H = H + m * lift_canonical(b);
        m *= p;
        G = reduce_coeffs(G, m);
        H = reduce_coeffs(H, m);
        // keep leading coefficients at 1 rather than m-1 wraparounds
        if (!G.is_monic() || !H.is_monic()) throw std::logic_error("hensel_lift_pair: lost monicity");
    }
    return {G, H};
}

inline void hensel_lift_list(const IntPolynomial& F, const std::vector<ModPolynomial>& factors,
                             std::size_t lo, std::size_t hi, const Integer& p, const Integer& target,
                             std::vector<IntPolynomial>& out)
{
    if (hi - lo == 1) {
        out[lo] = reduce_coeffs(F, target);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    ModPolynomial gp = ModPolynomial::one(p), hp = ModPolynomial::one(p);
    for (std::size_t i = lo; i < mid; ++i) gp = gp * factors[i];
    for (std::size_t i = mid; i < hi; ++i) hp = hp * factors[i];
    auto [G, H] = hensel_lift_pair(F, lift_canonical(gp), lift_canonical(hp), p, target);
    hensel_lift_list(G, factors, lo, mid, p, target, out);
    hensel_lift_list(H, factors, mid, hi, p, target, out);
}

}  // namespace detail

// A nontrivial monic factorization f == first * second over Z, when one
// exists.  std::nullopt means f is irreducible over Q.
inline std::optional<std::pair<IntPolynomial, IntPolynomial>> rational_factor_witness(
    const IntPolynomial& f, std::uint64_t seed = 7)
{
    if (f.degree() < 1) throw std::invalid_argument("irreducibility: degree must be >= 1");
    if (!f.is_monic()) throw std::invalid_argument("irreducibility: polynomial must be monic");
    const int n = f.degree();
    if (n == 1) return std::nullopt;

    // Repeated factors.
    IntPolynomial g = detail::int_gcd(f, f.derivative());
    if (g.degree() >= 1) {
        auto [q, r] = poly_divrem(f, g);
        if (!r.is_zero()) throw std::logic_error("gcd does not divide");
        return std::make_pair(g, q);
    }

    // Rational-root fast path for the cheapest witnesses.
    if (f[0] == 0) {
        auto [q, r] = poly_divrem(f, IntPolynomial::monomial(1));
        return std::make_pair(IntPolynomial::monomial(1), q);
    }
    for (long root : {1L, -1L}) {
        if (f.eval(root) == 0) {
            IntPolynomial lin({-Integer(root), Integer(1)});
            auto [q, r] = poly_divrem(f, lin);
            return std::make_pair(lin, q);
        }
    }

    // Eisenstein fast path.
    {
        Integer low_gcd(0);
        for (int i = 0; i < n; ++i) low_gcd = gcd(low_gcd, f[static_cast<std::size_t>(i)]);
        if (low_gcd > 1) {
            Factorization fg = factorize(low_gcd, Effort{100000, 1 << 12, 11});
            for (const auto& pp : fg.factors) {
                Integer p2 = pp.prime * pp.prime;
                if (!mpz_divisible_p(f[0].get_mpz_t(), p2.get_mpz_t()))
                    return std::nullopt;  // Eisenstein at pp.prime
            }
        }
    }

    Integer disc = discriminant(f);  // nonzero: no repeated factors
    std::vector<ModFactor> best;
    Integer best_p = 0;
    // Bitmask of degrees a rational factor could have, intersected across
    // reduction patterns mod several primes.
    std::uint32_t degree_mask = (1u << (n + 1)) - 1;
    int tried = 0;
    for (std::uint32_t q : small_primes()) {
        if (tried >= 25) break;
        Integer p(q);
        if (mpz_divisible_ui_p(disc.get_mpz_t(), q)) continue;
        ++tried;
        ModPolynomial fp = reduce_mod(f, p);
        FactorListModP fl = factor_mod_p(fp, seed ^ q);
        if (fl.factors.size() == 1) return std::nullopt;  // irreducible mod p
        std::uint32_t mask = 1;
        for (const auto& mf : fl.factors)
            mask |= mask << mf.factor.degree();
        degree_mask &= mask;
        if ((degree_mask & ~((1u << n) | 1u)) == 0) return std::nullopt;
        if (best.empty() || fl.factors.size() < best.size()) {
            best.clear();
            for (const auto& mf : fl.factors) best.push_back(mf);
            best_p = p;
        }
    }
    if (best.empty()) throw std::logic_error("no usable prime found for factorization");

    // Hensel lift the best modular factorization above the coefficient
    // bound, then test subset recombinations.
    Integer norm2_sq(0);
    for (const auto& c : f.coeffs()) norm2_sq += c * c;
    Integer bound = pow_si(2, static_cast<unsigned long>(n));
    {
        Integer s = sqrt(norm2_sq) + 1;
        bound *= s;
    }
    Integer target = best_p;
    while (target <= 2 * bound) target *= best_p;

    std::vector<ModPolynomial> modular;
    for (const auto& mf : best) modular.push_back(mf.factor);
    std::vector<IntPolynomial> lifted(modular.size());
    detail::hensel_lift_list(detail::reduce_coeffs(f, target), modular, 0, modular.size(), best_p,
                             target, lifted);

    const std::size_t r = modular.size();
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 1; m < (1u << r) - 1; ++m) subsets.push_back(m);
    std::sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });
    for (std::uint32_t m : subsets) {
        int deg = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (m & (1u << i)) deg += modular[i].degree();
        if (deg > n / 2) continue;
        if (!(degree_mask & (1u << deg))) continue;
        IntPolynomial prod = IntPolynomial::constant(1);
        for (std::size_t i = 0; i < r; ++i)
            if (m & (1u << i)) prod = detail::reduce_coeffs(prod * lifted[i], target);
        // Symmetric representatives.
        std::vector<Integer> c = prod.coeffs();
        for (auto& x : c)
            if (2 * x > target) x -= target;
        IntPolynomial cand(std::move(c));
        if (!cand.is_monic()) continue;
        auto [q, rem] = poly_divrem(f, cand);
        if (rem.is_zero()) return std::make_pair(cand, q);
    }
    return std::nullopt;
}

// Zassenhaus with Eisenstein and rational-root shortcuts.
inline bool is_irreducible_over_Q(const IntPolynomial& f, std::uint64_t seed = 7)
{
    return !rational_factor_witness(f, seed).has_value();
}

}  // namespace monogen

#endif
