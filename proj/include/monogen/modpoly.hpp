#ifndef MONOGEN_MODPOLY_HPP
#define MONOGEN_MODPOLY_HPP

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/poly.hpp"

namespace monogen {

// Dense polynomial over Z/mZ, residues reduced into [0, m).  Division and
// gcd assume m prime.
class ModPolynomial {
public:
    ModPolynomial() : m_(2) {}
    explicit ModPolynomial(Integer modulus) : m_(std::move(modulus)) { check_modulus(); }
    ModPolynomial(Integer modulus, std::vector<Integer> coeffs) : m_(std::move(modulus)), c_(std::move(coeffs))
    {
        check_modulus();
        for (auto& x : c_) x = mod_reduce(x, m_);
        trim();
    }

    const Integer& modulus() const { return m_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& operator[](std::size_t i) const
    {
        static const Integer zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const Integer& leading() const
    {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const ModPolynomial& o) const { return m_ == o.m_ && c_ == o.c_; }
    bool operator<(const ModPolynomial& o) const
    {
        if (degree() != o.degree()) return degree() < o.degree();
        for (std::size_t i = c_.size(); i-- > 0;)
            if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
        return false;
    }

    static ModPolynomial x(const Integer& m) { return ModPolynomial(m, {Integer(0), Integer(1)}); }
    static ModPolynomial one(const Integer& m) { return ModPolynomial(m, {Integer(1)}); }

    friend ModPolynomial operator+(const ModPolynomial& a, const ModPolynomial& b)
    {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return ModPolynomial(a.m_, std::move(c));
    }
    friend ModPolynomial operator-(const ModPolynomial& a, const ModPolynomial& b)
    {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return ModPolynomial(a.m_, std::move(c));
    }
    friend ModPolynomial operator*(const ModPolynomial& a, const ModPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return ModPolynomial(a.m_);
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return ModPolynomial(a.m_, std::move(c));
    }
    friend ModPolynomial operator*(const Integer& s, const ModPolynomial& a)
    {
        std::vector<Integer> c = a.c_;
        for (auto& x : c) x *= s;
        return ModPolynomial(a.m_, std::move(c));
    }

    ModPolynomial monic() const
    {
        if (is_zero() || is_monic()) return *this;
        return inverse_of(leading(), m_) * *this;
    }

    Integer eval(const Integer& x) const
    {
        Integer v(0);
        for (std::size_t i = c_.size(); i-- > 0;) v = mod_reduce(v * x + c_[i], m_);
        return v;
    }

    ModPolynomial derivative() const
    {
        if (c_.size() <= 1) return ModPolynomial(m_);
        std::vector<Integer> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Integer(static_cast<long>(i)) * c_[i];
        return ModPolynomial(m_, std::move(d));
    }

    static Integer inverse_of(const Integer& a, const Integer& m)
    {
        Integer inv;
        if (!mpz_invert(inv.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
            throw std::domain_error("no modular inverse (modulus not prime?)");
        return inv;
    }

private:
    void check_modulus() const
    {
        if (m_ < 2) throw std::invalid_argument("modulus must be >= 2");
    }
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    Integer m_;
    std::vector<Integer> c_;
};

// Coefficientwise reduction of an integer polynomial into (Z/mZ)[x].
inline ModPolynomial reduce_mod(const IntPolynomial& f, const Integer& m)
{
    if (m < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
    return ModPolynomial(m, f.coeffs());
}

// Canonical lift with coefficients in [0, m).
inline IntPolynomial lift_canonical(const ModPolynomial& f)
{
    return IntPolynomial(f.coeffs());
}

// Symmetric lift with coefficients in (-m/2, m/2].
inline IntPolynomial lift_symmetric(const ModPolynomial& f)
{
    std::vector<Integer> c = f.coeffs();
    for (auto& x : c)
        if (2 * x > f.modulus()) x -= f.modulus();
    return IntPolynomial(std::move(c));
}

// f = q*g + r over Z/mZ with m prime (or lc(g) invertible mod m).
inline std::pair<ModPolynomial, ModPolynomial> mod_divrem(const ModPolynomial& f,
                                                          const ModPolynomial& g)
{
    if (g.is_zero()) throw std::invalid_argument("mod_divrem: division by zero");
    const Integer& m = f.modulus();
    const int dg = g.degree();
    if (f.degree() < dg) return {ModPolynomial(m), f};
    Integer lcinv = ModPolynomial::inverse_of(g.leading(), m);
    std::vector<Integer> rem = f.coeffs();
    std::vector<Integer> quo(static_cast<std::size_t>(f.degree() - dg + 1), Integer(0));
    for (int i = f.degree(); i >= dg; --i) {
        Integer coef = mod_reduce(rem[static_cast<std::size_t>(i)] * lcinv, m);
        if (coef == 0) continue;
        quo[static_cast<std::size_t>(i - dg)] = coef;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(i - dg + j)] =
                mod_reduce(rem[static_cast<std::size_t>(i - dg + j)] - coef * g[static_cast<std::size_t>(j)], m);
    }
    rem.resize(static_cast<std::size_t>(dg));
    return {ModPolynomial(m, std::move(quo)), ModPolynomial(m, std::move(rem))};
}

inline ModPolynomial mod_rem(const ModPolynomial& f, const ModPolynomial& g)
{
    return mod_divrem(f, g).second;
}

inline ModPolynomial mod_gcd(ModPolynomial a, ModPolynomial b)
{
    while (!b.is_zero()) {
        ModPolynomial r = mod_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline bool mod_divides(const ModPolynomial& d, const ModPolynomial& f)
{
    if (f.is_zero()) return true;
    return mod_rem(f, d).is_zero();
}

// base^e mod f, e an arbitrary-precision exponent.
inline ModPolynomial mod_powmod(const ModPolynomial& base, const Integer& e, const ModPolynomial& f)
{
    ModPolynomial r = ModPolynomial::one(base.modulus());
    ModPolynomial b = mod_rem(base, f);
    for (std::size_t i = mpz_sizeinbase(e.get_mpz_t(), 2); i-- > 0;) {
        r = mod_rem(r * r, f);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = mod_rem(r * b, f);
    }
    return r;
}

}  // namespace monogen

#endif
