#ifndef MONOGEN_POLY_HPP
#define MONOGEN_POLY_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"

namespace monogen {

// Dense univariate polynomial over Z, lowest degree first, no trailing
// zeros.  The zero polynomial has an empty coefficient vector.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(Integer v)
    {
        return v == 0 ? IntPolynomial{} : IntPolynomial({std::move(v)});
    }

    static IntPolynomial monomial(std::size_t deg, Integer lead = 1)
    {
        if (lead == 0) return {};
        std::vector<Integer> c(deg + 1, Integer(0));
        c[deg] = std::move(lead);
        return IntPolynomial(std::move(c));
    }

    // x^n + a*x^k + b
    static IntPolynomial trinomial(unsigned n, unsigned k, const Integer& a, const Integer& b)
    {
        std::vector<Integer> c(n + 1, Integer(0));
        c[0] = b;
        c[k] += a;
        c[n] += 1;
        return IntPolynomial(std::move(c));
    }

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

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

    IntPolynomial operator-() const
    {
        IntPolynomial r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b)
    {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const Integer& s, const IntPolynomial& a)
    {
        if (s == 0) return {};
        IntPolynomial r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    Integer eval(const Integer& x) const
    {
        Integer v(0);
        for (std::size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
        return v;
    }

    IntPolynomial derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<Integer> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Integer(static_cast<long>(i)) * c_[i];
        return IntPolynomial(std::move(d));
    }

    Integer content() const
    {
        Integer g(0);
        for (const auto& x : c_) g = gcd(g, x);
        return g;
    }

    // Max |coefficient|.
    Integer height() const
    {
        Integer h(0);
        for (const auto& x : c_)
            if (abs(x) > h) h = abs(x);
        return h;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

// Exact division with remainder by a monic divisor: f = q*g + r,
// deg r < deg g.
inline std::pair<IntPolynomial, IntPolynomial> poly_divrem(const IntPolynomial& f,
                                                           const IntPolynomial& g)
{
    if (g.is_zero() || !g.is_monic())
        throw std::invalid_argument("poly_divrem: divisor must be monic");
    const int dg = g.degree();
    if (f.degree() < dg) return {IntPolynomial{}, f};
    std::vector<Integer> rem(f.coeffs());
    std::vector<Integer> quo(f.degree() - dg + 1, Integer(0));
    for (int i = f.degree(); i >= dg; --i) {
        Integer coef = rem[static_cast<std::size_t>(i)];
        if (coef == 0) continue;
        quo[static_cast<std::size_t>(i - dg)] = coef;
        for (int j = 0; j <= dg; ++j)
            rem[static_cast<std::size_t>(i - dg + j)] -= coef * g[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dg > 0 ? dg : 0));
    return {IntPolynomial(std::move(quo)), IntPolynomial(std::move(rem))};
}

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
};

// Grammar: poly := ['-'] term (('+'|'-') term)*
//          term := INT | [INT] 'x' ['^' UINT]
// Whitespace is ignored; repeated powers are summed.
inline IntPolynomial parse_polynomial(const std::string& text)
{
    std::vector<Integer> acc;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto add_term = [&](const Integer& coef, std::size_t power) {
        if (acc.size() <= power) acc.resize(power + 1, Integer(0));
        acc[power] += coef;
    };

    skip_ws();
    if (i == n) throw ParseError("empty polynomial", i);
    bool first = true;
    while (true) {
        skip_ws();
        int sign = 1;
        if (i < n && (text[i] == '+' || text[i] == '-')) {
            if (first && text[i] == '+') throw ParseError("unexpected '+'", i);
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            if (i == n) break;
            throw ParseError("expected '+' or '-'", i);
        }
        first = false;

        std::size_t digits_start = i;
        std::string digits;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
        skip_ws();
        bool has_x = i < n && text[i] == 'x';
        if (!has_x && digits.empty()) throw ParseError("expected term", digits_start);
        Integer coef = digits.empty() ? Integer(1) : Integer(digits);
        if (sign < 0) coef = -coef;
        std::size_t power = 0;
        if (has_x) {
            ++i;
            skip_ws();
            power = 1;
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                std::size_t exp_start = i;
                std::string exp_digits;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) exp_digits += text[i++];
                if (exp_digits.empty()) throw ParseError("expected exponent", exp_start);
                if (exp_digits.size() > 4) throw ParseError("exponent too large", exp_start);
                power = static_cast<std::size_t>(std::stoul(exp_digits));
            }
        }
        add_term(coef, power);
        skip_ws();
        if (i == n) break;
    }
    return IntPolynomial(std::move(acc));
}

// Canonical text form, re-parseable by parse_polynomial.
inline std::string render_polynomial(const IntPolynomial& f)
{
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const Integer& c = f[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Integer a = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (i == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str();
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace monogen

#endif
