#ifndef MONOGEN_FACTOR_HPP
#define MONOGEN_FACTOR_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/primes.hpp"

namespace monogen {

enum class TriState { True, False, Unknown };

struct PrimePower {
    Integer prime;
    unsigned exponent;
};

// unit * cofactor * prod(prime^exponent) == input.  cofactor == 1 iff the
// factorization is complete; otherwise it is a composite with no prime
// factor below the trial-division bound.
struct Factorization {
    int unit = 1;
    std::vector<PrimePower> factors;
    Integer cofactor = 1;
    bool complete = true;

    Integer reassemble() const
    {
        Integer n = unit * cofactor;
        for (const auto& f : factors) n *= pow_ui(f.prime, f.exponent);
        return n;
    }
};

struct Effort {
    std::uint32_t trial_bound = 100000;
    std::uint64_t rho_iterations = 1u << 21;
    std::uint64_t seed = 1;
};

namespace detail {

inline std::uint64_t brent_rho_u64(std::uint64_t n, std::uint64_t budget, std::uint64_t seed)
{
    if (n % 2 == 0) return 2;
    std::mt19937_64 rng(seed ^ n);
    while (budget > 0) {
        std::uint64_t y = rng() % (n - 1) + 1;
        std::uint64_t c = rng() % (n - 1) + 1;
        std::uint64_t m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (mulmod_u64(y, y, n) + c) % n;
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod_u64(y, y, n) + c) % n;
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                budget = budget > lim ? budget - lim : 0;
                std::uint64_t d = std::gcd(q, n);
                g = d;
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            do {
                ys = (mulmod_u64(ys, ys, n) + c) % n;
                std::uint64_t d = ys > x ? ys - x : x - ys;
                g = std::gcd(d, n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

inline Integer brent_rho_mpz(const Integer& n, std::uint64_t budget, std::uint64_t seed)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    std::mt19937_64 rng(seed);
    while (budget > 0) {
        Integer y = 2 + mod_reduce(Integer(static_cast<unsigned long>(rng())), n - 3);
        Integer c = 1 + mod_reduce(Integer(static_cast<unsigned long>(rng())), n - 2);
        Integer x, ys, q = 1, g = 1;
        std::uint64_t m = 128, r = 1;
        auto step = [&](Integer& v) { v = mod_reduce(v * v + c, n); };
        while (g == 1 && budget > 0) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) step(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    q = mod_reduce(q * abs(x - y), n);
                }
                budget = budget > lim ? budget - lim : 0;
                g = gcd(q, n);
            }
            r <<= 1;
        }
        if (g == n) {
            g = 1;
            do {
                step(ys);
                g = gcd(abs(x - ys), n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return 0;
}

// Splits composite c (no factor below the trial bound) into primes within
// the rho budget; anything left over lands in out.cofactor.
inline void split_composite(const Integer& c, const Effort& effort, Factorization& out)
{
    if (c == 1) return;
    if (is_prime(c)) {
        out.factors.push_back({c, 1});
        return;
    }
    // Perfect powers: recurse on the root so square factors are exposed
    // even when rho would struggle.
    if (mpz_perfect_power_p(c.get_mpz_t())) {
        for (unsigned long e = 2; e <= mpz_sizeinbase(c.get_mpz_t(), 2); ++e) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), c.get_mpz_t(), e)) {
                Factorization sub;
                split_composite(root, effort, sub);
                for (auto& f : sub.factors) out.factors.push_back({f.prime, f.exponent * static_cast<unsigned>(e)});
                if (sub.cofactor != 1) {
                    // Unfactored root: keep c itself as the cofactor.
                    out.cofactor *= pow_ui(sub.cofactor, e);
                    out.complete = false;
                }
                return;
            }
        }
    }
    Integer d;
    if (fits_u64(c)) {
        std::uint64_t f = brent_rho_u64(to_u64(c), effort.rho_iterations, effort.seed);
        d = f == 0 ? Integer(0) : Integer(static_cast<unsigned long>(f));
    } else {
        d = brent_rho_mpz(c, effort.rho_iterations, effort.seed);
    }
    if (d == 0) {
        out.cofactor *= c;
        out.complete = false;
        return;
    }
    split_composite(d, effort, out);
    split_composite(c / d, effort, out);
}

}  // namespace detail

// Trial division below effort.trial_bound, then Brent rho.  Exact for all
// inputs whose hard part yields within the rho budget.
inline Factorization factorize(const Integer& n, const Effort& effort = {})
{
    if (n == 0) throw std::domain_error("factorize: zero has no factorization");
    Factorization out;
    out.unit = n < 0 ? -1 : 1;
    Integer m = abs(n);

    const auto& primes = small_primes();
    std::size_t idx = 0;
    // mpz trial division until the value fits a machine word.
    while (idx < primes.size() && primes[idx] <= effort.trial_bound && !fits_u64(m)) {
        std::uint32_t q = primes[idx];
        if (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), q);
                ++e;
            } while (mpz_divisible_ui_p(m.get_mpz_t(), q));
            out.factors.push_back({Integer(q), e});
        }
        ++idx;
    }
    if (fits_u64(m)) {
        std::uint64_t v = to_u64(m);
        for (; idx < primes.size() && primes[idx] <= effort.trial_bound; ++idx) {
            std::uint32_t q = primes[idx];
            if (static_cast<std::uint64_t>(q) * q > v) break;
            if (v % q == 0) {
                unsigned e = 0;
                do {
                    v /= q;
                    ++e;
                } while (v % q == 0);
                out.factors.push_back({Integer(q), e});
            }
        }
        m = Integer(static_cast<unsigned long>(v));
        // After full trial division, any remaining v below bound^2 is prime.
        if (v > 1) {
            if (v < static_cast<std::uint64_t>(effort.trial_bound) * effort.trial_bound ||
                detail::is_prime_u64(v))
                out.factors.push_back({m, 1});
            else
                detail::split_composite(m, effort, out);
        }
    } else {
        detail::split_composite(m, effort, out);
    }

    std::sort(out.factors.begin(), out.factors.end(),
              [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    // Merge duplicates produced by recursive splitting.
    std::vector<PrimePower> merged;
    for (auto& f : out.factors) {
        if (!merged.empty() && merged.back().prime == f.prime)
            merged.back().exponent += f.exponent;
        else
            merged.push_back(std::move(f));
    }
    out.factors = std::move(merged);
    return out;
}

// True iff no prime square divides |n|.  Unknown only when an unfactored
// composite cofactor (already known not to be a perfect power) remains.
inline TriState is_squarefree(const Integer& n, const Effort& effort = {})
{
    if (n == 0) throw std::domain_error("is_squarefree: undefined for zero");
    if (n == 1 || n == -1) return TriState::True;
    Factorization f = factorize(n, effort);
    for (const auto& pp : f.factors)
        if (pp.exponent >= 2) return TriState::False;
    if (!f.complete) return TriState::Unknown;
    return TriState::True;
}

}  // namespace monogen

#endif
