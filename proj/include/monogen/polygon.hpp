#ifndef MONOGEN_POLYGON_HPP
#define MONOGEN_POLYGON_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monogen/factor_mod_p.hpp"
#include "monogen/integer.hpp"
#include "monogen/modpoly.hpp"
#include "monogen/poly.hpp"
#include "monogen/primes.hpp"

namespace monogen {

// f == sum a_i(x) * phi(x)^i with deg a_i < deg phi.
struct PhiDevelopment {
    IntPolynomial phi;
    std::vector<IntPolynomial> coefficients;  // a_0 .. a_k

    IntPolynomial reassemble() const
    {
        IntPolynomial acc;
        for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * phi + coefficients[i];
        return acc;
    }
};

// Lattice point (i, v_p(a_i)); absent ordinate marks a_i == 0 (v = +inf).
struct ValuationPoint {
    long abscissa;
    std::optional<long> ordinate;
};

// Negative-slope part of the lower convex hull of the finite valuation
// points.  Empty vertex list means an empty principal polygon (index 0).
struct PrincipalPolygon {
    std::vector<std::pair<long, long>> vertices;  // strictly increasing abscissae
};

inline PhiDevelopment phi_adic_development(const IntPolynomial& f, const IntPolynomial& phi)
{
    if (phi.degree() < 1 || !phi.is_monic())
        throw std::invalid_argument("phi_adic_development: phi must be monic of degree >= 1");
    if (phi.degree() > f.degree())
        throw std::invalid_argument("phi_adic_development: deg phi must not exceed deg f");
    PhiDevelopment dev;
    dev.phi = phi;
    IntPolynomial rest = f;
    while (!rest.is_zero()) {
        auto [q, r] = poly_divrem(rest, phi);
        dev.coefficients.push_back(std::move(r));
        rest = std::move(q);
    }
    return dev;
}

inline std::vector<ValuationPoint> valuation_points(const PhiDevelopment& dev, const Integer& p)
{
    std::vector<ValuationPoint> pts;
    for (std::size_t i = 0; i < dev.coefficients.size(); ++i) {
        const IntPolynomial& a = dev.coefficients[i];
        if (a.is_zero()) {
            pts.push_back({static_cast<long>(i), std::nullopt});
            continue;
        }
        unsigned v = ~0u;
        for (const auto& c : a.coeffs()) {
            if (c == 0) continue;
            v = std::min(v, valuation(c, p));
            if (v == 0) break;
        }
        pts.push_back({static_cast<long>(i), static_cast<long>(v)});
    }
    return pts;
}

// Lower convex hull of the finite points, truncated to its strictly
// negative-slope portion (ends at the first abscissa attaining the minimal
// ordinate).
inline PrincipalPolygon principal_polygon(const PhiDevelopment& dev, const Integer& p)
{
    std::vector<ValuationPoint> pts = valuation_points(dev, p);
    std::vector<std::pair<long, long>> finite;
    for (const auto& pt : pts)
        if (pt.ordinate) finite.emplace_back(pt.abscissa, *pt.ordinate);
    if (finite.empty()) throw std::domain_error("principal_polygon: phi-power divides f exactly");

    long min_ord = finite.front().second;
    long min_abs = finite.front().first;
    for (const auto& [x, y] : finite)
        if (y < min_ord) { min_ord = y; min_abs = x; }

    PrincipalPolygon poly;
    if (min_abs == finite.front().first) return poly;  // no negative-slope part

    // Monotone lower hull over points with abscissa <= min_abs.
    std::vector<std::pair<long, long>> hull;
    for (const auto& pt : finite) {
        if (pt.first > min_abs) break;
        while (hull.size() >= 2) {
            const auto& [x1, y1] = hull[hull.size() - 2];
            const auto& [x2, y2] = hull[hull.size() - 1];
            // pop if (x2,y2) is above or on segment (x1,y1)-(pt)
            if (static_cast<long long>(y2 - y1) * (pt.first - x1) >=
                static_cast<long long>(pt.second - y1) * (x2 - x1))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(pt);
    }
    poly.vertices = std::move(hull);
    return poly;
}

// Number of lattice points (m, n), m, n > 0, on or under the polygon.
inline long phi_index(const PrincipalPolygon& poly)
{
    if (poly.vertices.size() < 2) return 0;
    long count = 0;
    for (std::size_t s = 0; s + 1 < poly.vertices.size(); ++s) {
        auto [x1, y1] = poly.vertices[s];
        auto [x2, y2] = poly.vertices[s + 1];
        for (long m = x1 + 1; m <= x2; ++m) {
            // height = y1 + (m - x1) * (y2 - y1) / (x2 - x1), floor.
            long long num = static_cast<long long>(y1) * (x2 - x1) +
                            static_cast<long long>(m - x1) * (y2 - y1);
            long long den = x2 - x1;
            long long h = num >= 0 ? num / den : -((-num + den - 1) / den);
            if (m >= 1 && h >= 1) count += h;
        }
    }
    return count;
}

// Ore / index-zero test: p divides [O_K : Z[theta]] iff some irreducible
// factor of f mod p has a positive phi-index.
inline bool ore_p_divides_index(const IntPolynomial& f, const Integer& p, std::uint64_t seed = 42)
{
    if (f.degree() < 2 || !f.is_monic())
        throw std::invalid_argument("ore_p_divides_index: f must be monic of degree >= 2");
    if (!is_prime(p)) throw std::invalid_argument("ore_p_divides_index: p must be prime");
    FactorListModP fl = factor_mod_p(reduce_mod(f, p), seed);
    for (const auto& mf : fl.factors) {
        if (mf.exponent < 2) continue;  // a_1 is a unit, index contribution 0
        IntPolynomial phi = lift_canonical(mf.factor);
        PhiDevelopment dev = phi_adic_development(f, phi);
        if (phi_index(principal_polygon(dev, p)) > 0) return true;
    }
    return false;
}

}  // namespace monogen

#endif
