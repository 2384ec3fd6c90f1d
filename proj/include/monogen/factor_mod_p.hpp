#ifndef MONOGEN_FACTOR_MOD_P_HPP
#define MONOGEN_FACTOR_MOD_P_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/modpoly.hpp"

namespace monogen {

struct ModFactor {
    ModPolynomial factor;  // monic, irreducible over F_p
    unsigned exponent;
};

// unit * prod(factor^exponent) == input in F_p[x].
struct FactorListModP {
    Integer unit = 1;
    std::vector<ModFactor> factors;

    ModPolynomial reassemble(const Integer& p) const
    {
        ModPolynomial r(p, {unit});
        for (const auto& f : factors)
            for (unsigned i = 0; i < f.exponent; ++i) r = r * f.factor;
        return r;
    }
};

namespace detail {

inline ModPolynomial random_modpoly(const Integer& p, int deg_below, std::mt19937_64& rng)
{
    std::vector<Integer> c(static_cast<std::size_t>(deg_below));
    for (auto& x : c) x = mod_reduce(Integer(static_cast<unsigned long>(rng())), p);
    return ModPolynomial(p, std::move(c));
}

// Square-free decomposition in characteristic p (Yun with the p-th power
// descent).  Returns (squarefree part, multiplicity) pairs.
inline void squarefree_decompose(const ModPolynomial& f, unsigned mult,
                                 std::vector<std::pair<ModPolynomial, unsigned>>& out)
{
    const Integer& p = f.modulus();
    ModPolynomial d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p); in F_p the coefficients are their own p-th roots.
        unsigned long pl = p.get_ui();
        std::vector<Integer> g;
        for (std::size_t i = 0; i < f.coeffs().size(); i += pl) g.push_back(f.coeffs()[i]);
        squarefree_decompose(ModPolynomial(p, std::move(g)), mult * static_cast<unsigned>(pl), out);
        return;
    }
    ModPolynomial c = mod_gcd(f, d);
    ModPolynomial w = mod_divrem(f, c).first;
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPolynomial y = mod_gcd(w, c);
        ModPolynomial z = mod_divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        c = mod_divrem(c, y).first;
        w = std::move(y);
        ++i;
    }
    if (c.degree() > 0) squarefree_decompose(c, mult, out);
}

// Cantor-Zassenhaus equal-degree splitting of a squarefree product of
// degree-d irreducibles.
inline void equal_degree_split(const ModPolynomial& f, int d, std::mt19937_64& rng,
                               std::vector<ModPolynomial>& out)
{
    const Integer& p = f.modulus();
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    ModPolynomial g(p);
    while (true) {
        ModPolynomial r = random_modpoly(p, f.degree(), rng);
        if (r.degree() < 1) continue;
        if (p == 2) {
            // Trace map over F_{2^d}.
            ModPolynomial t(p);
            ModPolynomial s = mod_rem(r, f);
            for (int i = 0; i < d; ++i) {
                t = t + s;
                s = mod_rem(s * s, f);
            }
            g = mod_gcd(t, f);
        } else {
            Integer e = (pow_ui(p, static_cast<unsigned long>(d)) - 1) / 2;
            ModPolynomial t = mod_powmod(r, e, f) - ModPolynomial::one(p);
            g = mod_gcd(t, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    equal_degree_split(g, d, rng, out);
    equal_degree_split(mod_divrem(f, g).first, d, rng, out);
}

}  // namespace detail

// Full factorization over F_p: squarefree decomposition, distinct-degree
// splitting, then seeded Cantor-Zassenhaus.  Deterministic for a fixed seed.
inline FactorListModP factor_mod_p(const ModPolynomial& f, std::uint64_t seed = 42)
{
    const Integer& p = f.modulus();
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    FactorListModP out;
    out.unit = f.leading();
    if (f.degree() == 0) return out;

    std::mt19937_64 rng(seed);
    std::vector<std::pair<ModPolynomial, unsigned>> sqf;
    detail::squarefree_decompose(f.monic(), 1, sqf);

    for (auto& [part, mult] : sqf) {
        // Distinct-degree splitting of the squarefree part.
        ModPolynomial u = part;
        ModPolynomial h = ModPolynomial::x(p);
        for (int d = 1; u.degree() > 0 && 2 * d <= u.degree(); ++d) {
            h = mod_powmod(h, p, u);
            ModPolynomial g = mod_gcd(h - ModPolynomial::x(p), u);
            if (g.degree() > 0) {
                std::vector<ModPolynomial> irred;
                detail::equal_degree_split(g, d, rng, irred);
                for (auto& q : irred) out.factors.push_back({std::move(q), mult});
                u = mod_divrem(u, g).first;
                h = mod_rem(h, u);
            }
        }
        if (u.degree() > 0) out.factors.push_back({u.monic(), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const ModFactor& a, const ModFactor& b) { return a.factor < b.factor; });
    return out;
}

// Irreducibility over F_p via distinct-degree sieving; used as an oracle in
// tests and as a fast path elsewhere.
inline bool is_irreducible_mod_p(const ModPolynomial& f)
{
    const Integer& p = f.modulus();
    int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    ModPolynomial fm = f.monic();
    ModPolynomial h = ModPolynomial::x(p);
    for (int d = 1; 2 * d <= n; ++d) {
        h = mod_powmod(h, p, fm);
        if (mod_gcd(h - ModPolynomial::x(p), fm).degree() > 0) return false;
    }
    return true;
}

}  // namespace monogen

#endif
