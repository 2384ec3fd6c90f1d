#ifndef MONOGEN_DENSITY_HPP
#define MONOGEN_DENSITY_HPP

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monogen/factor.hpp"
#include "monogen/integer.hpp"

namespace monogen {

// pi to 50+ decimal digits; density approximations inherit this precision.
inline const mpf_class& pi_highprec()
{
    static const mpf_class pi("3.14159265358979323846264338327950288419716939937510582", 256);
    return pi;
}

// Exact linear combination sum_i coeff_i / pi^(2 * pi2_power_i), carried
// symbolically so evaluation order cannot perturb acceptance thresholds.
struct DensityValue {
    struct Term {
        Rational coefficient;
        int pi2_power;  // value contributes coefficient / pi^(2*pi2_power)
    };
    std::vector<Term> terms;
    double approx = 0.0;

    mpf_class evaluate(unsigned prec_bits = 256) const
    {
        mpf_class pi2(0, prec_bits);
        pi2 = pi_highprec() * pi_highprec();
        mpf_class total(0, prec_bits);
        for (const auto& t : terms) {
            mpf_class v(t.coefficient, prec_bits);
            for (int i = 0; i < t.pi2_power; ++i) v /= pi2;
            total += v;
        }
        return total;
    }

    void refresh_approx() { approx = evaluate().get_d(); }

    std::string describe() const
    {
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms) {
            Rational c = t.coefficient;
            if (!first) {
                os << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            first = false;
            os << c.get_str();
            if (t.pi2_power == 1) os << "/pi^2";
            if (t.pi2_power > 1) os << "/pi^" << 2 * t.pi2_power;
        }
        return os.str();
    }
};

namespace detail {

inline DensityValue single_term(Rational coeff, int pi2_power)
{
    DensityValue v;
    v.terms.push_back({std::move(coeff), pi2_power});
    v.refresh_approx();
    return v;
}

inline std::vector<Integer> distinct_primes(const Integer& n)
{
    auto f = factorize(abs(n));
    if (!f.complete) throw std::domain_error("density: argument too hard to factor");
    std::vector<Integer> ps;
    for (const auto& pp : f.factors) ps.push_back(pp.prime);
    return ps;
}

// prod over p | n of p^2 / (p^2 - 1), i.e. (1 - 1/p^2)^-1.
inline Rational euler_inverse_zeta_factor(const Integer& n)
{
    Rational r(1);
    for (const Integer& p : distinct_primes(n)) r *= Rational(p * p, p * p - 1);
    r.canonicalize();
    return r;
}

// prod over p | n of p / (p + 1).
inline Rational euler_coprime_factor(const Integer& n)
{
    Rational r(1);
    for (const Integer& p : distinct_primes(n)) r *= Rational(p, p + 1);
    r.canonicalize();
    return r;
}

}  // namespace detail

// Coefficient of x in S(x; m, k) ~ (6x / pi^2 k) * prod_{p|k} (1-1/p^2)^-1:
// the density of square-free integers in the progression m mod k.
inline DensityValue prachar_density(const Integer& m, const Integer& k)
{
    if (k < 1) throw std::invalid_argument("prachar_density: k must be >= 1");
    if (gcd(m, k) != 1) throw std::invalid_argument("prachar_density: need gcd(m, k) = 1");
    Rational coeff = Rational(6, k) * detail::euler_inverse_zeta_factor(k);
    coeff.canonicalize();
    return detail::single_term(coeff, 1);
}

// T(x; k) ~ (6x / pi^2) * prod_{p|k} p/(p+1): square-free and coprime to k.
inline DensityValue coprime_squarefree_density(const Integer& k)
{
    if (k < 1) throw std::invalid_argument("coprime_squarefree_density: k must be >= 1");
    Rational coeff = Rational(6) * detail::euler_coprime_factor(k);
    coeff.canonicalize();
    return detail::single_term(coeff, 1);
}

// Lower bound for the monogenic density of x^n + bx + b:
// 6/pi^2 - (1 - (6/pi^2) prod_{p|n-1} (1-1/p^2)^-1).
inline DensityValue bound_linear_family(int n)
{
    if (n <= 2) throw std::invalid_argument("bound_linear_family: n must be > 2");
    DensityValue v;
    Rational second = Rational(6) * detail::euler_inverse_zeta_factor(Integer(n - 1));
    second.canonicalize();
    Rational combined = second + 6;
    combined.canonicalize();
    v.terms.push_back({combined, 1});
    v.terms.push_back({Rational(-1), 0});
    v.refresh_approx();
    return v;
}

// B = (6/pi^2)(prod_{p|c} p/(p+1) + prod_{p|n} p^2/(p^2-1)) - 1 for the
// family x^n + cx^(n-1) + cd with square-free c != 0, +-1.
inline DensityValue bound_nminus1_family(int n, const Integer& c)
{
    if (n <= 2) throw std::invalid_argument("bound_nminus1_family: n must be > 2");
    if (c == 0 || c == 1 || c == -1)
        throw std::invalid_argument("bound_nminus1_family: c must differ from 0, 1, -1");
    if (is_squarefree(c) != TriState::True)
        throw std::invalid_argument("bound_nminus1_family: c must be square-free");
    Rational inner = detail::euler_coprime_factor(c) + detail::euler_inverse_zeta_factor(Integer(n));
    Rational coeff = Rational(6) * inner;
    coeff.canonicalize();
    DensityValue v;
    v.terms.push_back({coeff, 1});
    v.terms.push_back({Rational(-1), 0});
    v.refresh_approx();
    return v;
}

// Heuristic independence bounds: B1 = (36/pi^4) prod_{p|n-1} (1-1/p^2)^-1
// and B2 = (36/pi^4) prod_{p|c} p/(p+1) prod_{p|n} p^2/(p^2-1).  B2 needs c.
inline std::pair<DensityValue, DensityValue> heuristic_independence_bounds(
    int n, const std::optional<Integer>& c = std::nullopt)
{
    if (n <= 2) throw std::invalid_argument("heuristic_independence_bounds: n must be > 2");
    Rational b1 = Rational(36) * detail::euler_inverse_zeta_factor(Integer(n - 1));
    b1.canonicalize();
    DensityValue B1 = detail::single_term(b1, 2);
    if (!c) throw std::invalid_argument("heuristic_independence_bounds: B2 requires c");
    Rational b2 = Rational(36) * detail::euler_coprime_factor(*c) *
                  detail::euler_inverse_zeta_factor(Integer(n));
    b2.canonicalize();
    DensityValue B2 = detail::single_term(b2, 2);
    return {B1, B2};
}

}  // namespace monogen

#endif
