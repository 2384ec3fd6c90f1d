#ifndef MONOGEN_RESULTANT_HPP
#define MONOGEN_RESULTANT_HPP

#include <numeric>
#include <stdexcept>
#include <utility>

#include "monogen/integer.hpp"
#include "monogen/poly.hpp"

namespace monogen {

namespace detail {

// Pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R.
inline IntPolynomial pseudo_rem(const IntPolynomial& A, const IntPolynomial& B)
{
    int da = A.degree(), db = B.degree();
    const Integer& lb = B.leading();
    std::vector<Integer> r = A.coeffs();
    for (int i = da; i >= db; --i) {
        Integer coef = r[static_cast<std::size_t>(i)];
        for (auto& x : r) x *= lb;
        if (coef != 0)
            for (int j = 0; j <= db; ++j)
                r[static_cast<std::size_t>(i - db + j)] -= coef * B[static_cast<std::size_t>(j)];
        r.resize(static_cast<std::size_t>(i));
    }
    return IntPolynomial(std::move(r));
}

inline Integer exact_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace detail

// Res(f, g) via the subresultant pseudo-remainder sequence (Cohen,
// Algorithm 3.3.7).  Exact and fraction-free.
inline Integer resultant(const IntPolynomial& f, const IntPolynomial& g)
{
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    IntPolynomial A = f, B = g;
    int s = 1;
    if (A.degree() < B.degree()) {
        std::swap(A, B);
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
    }
    if (B.degree() == 0) return s * pow_ui(B.leading(), static_cast<unsigned long>(A.degree()));

    Integer a = A.content(), b = B.content();
    {
        std::vector<Integer> ca = A.coeffs(), cb = B.coeffs();
        for (auto& x : ca) x = detail::exact_div(x, a);
        for (auto& x : cb) x = detail::exact_div(x, b);
        A = IntPolynomial(std::move(ca));
        B = IntPolynomial(std::move(cb));
    }
    Integer t = pow_ui(a, static_cast<unsigned long>(B.degree())) *
                pow_ui(b, static_cast<unsigned long>(A.degree()));
    Integer gg(1), hh(1);
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() & 1) && (B.degree() & 1)) s = -s;
        IntPolynomial R = detail::pseudo_rem(A, B);
        A = std::move(B);
        {
            Integer denom = gg * pow_ui(hh, static_cast<unsigned long>(delta));
            std::vector<Integer> cr = R.coeffs();
            for (auto& x : cr) x = detail::exact_div(x, denom);
            B = IntPolynomial(std::move(cr));
        }
        gg = A.leading();
        if (delta >= 1)
            hh = detail::exact_div(pow_ui(gg, static_cast<unsigned long>(delta)),
                                   pow_ui(hh, static_cast<unsigned long>(delta - 1)));
        // delta == 0 leaves h unchanged.
        if (B.is_zero()) return 0;  // common factor
        if (B.degree() == 0) {
            Integer h2 = detail::exact_div(pow_ui(B.leading(), static_cast<unsigned long>(A.degree())),
                                           pow_ui(hh, static_cast<unsigned long>(A.degree() - 1)));
            return s * t * h2;
        }
    }
}

// (-1)^(n(n-1)/2) * Res(f, f') for monic f of degree n >= 2.
inline Integer discriminant(const IntPolynomial& f)
{
    if (f.degree() < 2) throw std::invalid_argument("discriminant: degree must be >= 2");
    if (!f.is_monic()) throw std::invalid_argument("discriminant: polynomial must be monic");
    Integer r = resultant(f, f.derivative());
    unsigned long n = static_cast<unsigned long>(f.degree());
    return (n * (n - 1) / 2) % 2 == 0 ? r : -r;
}

// Closed form for disc(x^n + a x^k + b):
//   (-1)^(n(n-1)/2) b^(k-1) (n^N b^(N-K) - (-1)^N (n-k)^(N-K) k^K a^N)^gcd(n,k)
// with N = n/gcd(n,k), K = k/gcd(n,k).
inline Integer trinomial_discriminant(unsigned n, unsigned k, const Integer& a, const Integer& b)
{
    if (k == 0 || k >= n) throw std::invalid_argument("trinomial_discriminant: need 0 < k < n");
    unsigned g = std::gcd(n, k);
    unsigned N = n / g, K = k / g;
    Integer inner = pow_si(static_cast<long>(n), N) * pow_ui(b, N - K) -
                    (N % 2 == 0 ? 1 : -1) * pow_si(static_cast<long>(n - k), N - K) *
                        pow_si(static_cast<long>(k), K) * pow_ui(a, N);
    Integer r = pow_ui(b, k - 1) * pow_ui(inner, g);
    unsigned long nn = n;
    return (nn * (nn - 1) / 2) % 2 == 0 ? r : -r;
}

}  // namespace monogen

#endif
