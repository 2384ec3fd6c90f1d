#ifndef MONOGEN_PRIMES_HPP
#define MONOGEN_PRIMES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "monogen/integer.hpp"

namespace monogen {

// Primes below 100000, sieved once.
inline const std::vector<std::uint32_t>& small_primes()
{
    static const std::vector<std::uint32_t> table = [] {
        const std::uint32_t limit = 100000;
        std::vector<bool> comp(limit, false);
        std::vector<std::uint32_t> ps;
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (comp[i]) continue;
            ps.push_back(i);
            for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j < limit; j += i)
                comp[j] = true;
        }
        return ps;
    }();
    return table;
}

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool miller_rabin_u64(std::uint64_t n, std::uint64_t a)
{
    if (a % n == 0) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) { d >>= 1; ++s; }
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

// Deterministic for all 64-bit inputs with this witness set.
inline bool is_prime_u64(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!miller_rabin_u64(n, a)) return false;
    return true;
}

inline bool miller_rabin_mpz(const Integer& n, const Integer& a)
{
    if (a % n == 0) return true;
    Integer d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Integer x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = mod_reduce(x * x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

// Miller-Rabin: deterministic below 3.317e24 via the fixed witness set,
// 40 seeded random rounds above.
inline bool is_prime(const Integer& n, unsigned rounds_above_threshold = 40,
                     std::uint64_t seed = 0x5eed5eed5eedULL)
{
    if (n <= 1) return false;
    if (fits_u64(n)) return detail::is_prime_u64(to_u64(n));

    static const Integer deterministic_threshold("3317044064679887385961981");
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n < deterministic_threshold) {
        for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
            if (!detail::miller_rabin_mpz(n, a)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    for (unsigned i = 0; i < rounds_above_threshold; ++i) {
        Integer a = 2 + mod_reduce(Integer(static_cast<unsigned long>(rng())), n - 3);
        if (!detail::miller_rabin_mpz(n, a)) return false;
    }
    return true;
}

}  // namespace monogen

#endif
