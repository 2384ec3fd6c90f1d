#ifndef MONOGEN_DEDEKIND_HPP
#define MONOGEN_DEDEKIND_HPP

#include <cstdint>
#include <stdexcept>

#include "monogen/factor_mod_p.hpp"
#include "monogen/integer.hpp"
#include "monogen/modpoly.hpp"
#include "monogen/poly.hpp"
#include "monogen/primes.hpp"

namespace monogen {

struct DedekindOptions {
    bool symmetric_lifts = false;  // lift factors into (-p/2, p/2] instead of [0, p)
    bool literal_gcd_form = false;  // evaluate gcd(phi_i^(e_i - 1), d) instead of phi_i | d
    std::uint64_t seed = 42;
};

// Dedekind's index criterion for a monic irreducible f and prime p:
// with f == prod phi_i^e_i mod p and d(x) := (f - prod lift(phi_i)^e_i)/p,
// p divides [O_K : Z[theta]] iff gcd(phi_i^(e_i-1), d) != 1 for some i.
inline bool dedekind_p_divides_index(const IntPolynomial& f, const Integer& p,
                                     const DedekindOptions& opts = {})
{
    if (f.degree() < 2 || !f.is_monic())
        throw std::invalid_argument("dedekind_p_divides_index: f must be monic of degree >= 2");
    if (!is_prime(p)) throw std::invalid_argument("dedekind_p_divides_index: p must be prime");

    FactorListModP fl = factor_mod_p(reduce_mod(f, p), opts.seed);
    IntPolynomial lifted_product = IntPolynomial::constant(1);
    for (const auto& mf : fl.factors) {
        IntPolynomial lift = opts.symmetric_lifts ? lift_symmetric(mf.factor) : lift_canonical(mf.factor);
        for (unsigned i = 0; i < mf.exponent; ++i) lifted_product = lifted_product * lift;
    }

    IntPolynomial diff = f - lifted_product;
    std::vector<Integer> dcoeffs = diff.coeffs();
    for (auto& x : dcoeffs) {
        Integer q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        if (r != 0) throw std::logic_error("dedekind: (f - product)/p not exact");
        x = std::move(q);
    }
    ModPolynomial dbar = reduce_mod(IntPolynomial(std::move(dcoeffs)), p);

    for (const auto& mf : fl.factors) {
        if (opts.literal_gcd_form) {
            ModPolynomial power = ModPolynomial::one(p);
            for (unsigned i = 0; i + 1 < mf.exponent; ++i) power = power * mf.factor;
            if (dbar.is_zero()) {
                if (power.degree() > 0) return true;
                continue;
            }
            if (mod_gcd(power, dbar).degree() > 0) return true;
        } else {
            if (mf.exponent < 2) continue;
            if (mod_divides(mf.factor, dbar)) return true;
        }
    }
    return false;
}

}  // namespace monogen

#endif
