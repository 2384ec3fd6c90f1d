#ifndef MONOGEN_HENSEL_HPP
#define MONOGEN_HENSEL_HPP

#include <stdexcept>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/poly.hpp"

namespace monogen {

// All residues r in [0, p^k) with f(r) == 0 mod p^k.  Simple roots are
// lifted level-by-level; non-simple roots branch exhaustively per level.
inline std::vector<Integer> hensel_lift_roots(const IntPolynomial& f, const Integer& p, unsigned k)
{
    if (k < 1) throw std::invalid_argument("hensel_lift_roots: k must be >= 1");
    if (f.is_zero()) throw std::invalid_argument("hensel_lift_roots: zero polynomial");
    IntPolynomial df = f.derivative();

    std::vector<Integer> roots;
    for (Integer r = 0; r < p; ++r)
        if (mod_reduce(f.eval(r), p) == 0) roots.push_back(r);

    Integer mod = p;
    for (unsigned level = 1; level < k; ++level) {
        Integer next = mod * p;
        std::vector<Integer> lifted;
        for (const Integer& r : roots) {
            Integer fr = f.eval(r);
            Integer dr = mod_reduce(df.eval(r), p);
            if (dr != 0) {
                // Unique lift: r' = r - f(r) * (f'(r))^-1 mod p^(level+1).
                Integer inv;
                mpz_invert(inv.get_mpz_t(), dr.get_mpz_t(), p.get_mpz_t());
                Integer t = mod_reduce(-fdiv(mod_reduce(fr, next), mod) * inv, p);
                lifted.push_back(r + t * mod);
            } else {
                for (Integer t = 0; t < p; ++t) {
                    Integer cand = r + t * mod;
                    if (mod_reduce(f.eval(cand), next) == 0) lifted.push_back(cand);
                }
            }
        }
        roots = std::move(lifted);
        mod = next;
    }
    return roots;
}

}  // namespace monogen

#endif
