#ifndef MONOGEN_INTEGER_HPP
#define MONOGEN_INTEGER_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monogen {

// Arbitrary-precision signed integer. GMP supplies exact arithmetic and a
// canonical zero; everything in the library funnels through this alias.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer abs(const Integer& n) { return ::abs(n); }

inline Integer gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Integer pow_ui(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer pow_si(long base, unsigned long e)
{
    return pow_ui(Integer(base), e);
}

// Largest e with p^e | n.  v_p(0) is undefined at this level; polynomial
// code carries its own infinity marker.
inline unsigned valuation(const Integer& n, const Integer& p)
{
    if (n == 0) throw std::domain_error("valuation of zero undefined");
    if (p < 2) throw std::domain_error("valuation: modulus must be >= 2");
    Integer m = abs(n);
    unsigned e = 0;
    Integer q, r;
    for (;;) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        m = q;
        ++e;
    }
    return e;
}

inline bool fits_u64(const Integer& n)
{
    return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && n >= 0;
}

inline std::uint64_t to_u64(const Integer& n)
{
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    if (mpz_size(n.get_mpz_t()) > 1) {
#if GMP_LIMB_BITS == 32
        lo |= static_cast<std::uint64_t>(mpz_getlimbn(n.get_mpz_t(), 1)) << 32;
#endif
    }
    return mpz_size(n.get_mpz_t()) == 0 ? 0 : lo;
}

// Floor of a/b for exact integer pairs (b > 0).
inline Integer fdiv(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer mod_reduce(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace monogen

#endif
