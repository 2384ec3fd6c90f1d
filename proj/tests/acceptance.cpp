// End-to-end acceptance checks.  Each criterion prints exactly one
// PASS/FAIL line; the exit status is the number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "monogen/monogen.hpp"

using namespace monogen;

namespace {

std::mt19937_64 master_rng(20240817);

IntPolynomial random_monic(std::mt19937_64& rng, int deg, long coeff_max)
{
    std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
    for (int j = 0; j < deg; ++j)
        c[static_cast<std::size_t>(j)] =
            static_cast<long>(rng() % (2 * static_cast<unsigned long>(coeff_max) + 1)) - coeff_max;
    c[static_cast<std::size_t>(deg)] = 1;
    return IntPolynomial(std::move(c));
}

// Primes p with p^2 | disc, as far as the factoring budget can see, plus a
// square cofactor's root if one survives whole.
std::vector<Integer> square_primes_of_disc(const Integer& disc, const Effort& effort)
{
    std::vector<Integer> out;
    Factorization f = factorize(disc, effort);
    for (const auto& pp : f.factors)
        if (pp.exponent >= 2) out.push_back(pp.prime);
    if (!f.complete && mpz_perfect_square_p(f.cofactor.get_mpz_t())) {
        Integer r = sqrt(f.cofactor);
        if (is_prime(r)) out.push_back(r);
    }
    return out;
}

bool criterion_1_engine_equivalence()
{
    std::mt19937_64 rng(101);
    Effort effort;
    effort.rho_iterations = 1u << 18;
    std::uint64_t mismatches = 0;
    for (int i = 0; i < 10000; ++i) {
        IntPolynomial f;
        do {
            f = random_monic(rng, 2 + static_cast<int>(rng() % 7), 50);
        } while (discriminant(f) == 0 || !is_irreducible_over_Q(f));
        for (const Integer& p : square_primes_of_disc(discriminant(f), effort))
            if (ore_p_divides_index(f, p) != dedekind_p_divides_index(f, p)) ++mismatches;
    }
    return mismatches == 0;
}

bool criterion_2_eisenstein()
{
    std::mt19937_64 rng(102);
    const long ps[] = {2, 3, 5, 7};
    for (int i = 0; i < 1000; ++i) {
        Integer p(ps[i % 4]);
        int deg = 2 + static_cast<int>(rng() % 7);
        std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
        for (int j = 1; j < deg; ++j)
            c[static_cast<std::size_t>(j)] = p * (static_cast<long>(rng() % 21) - 10);
        long r0;
        do {
            r0 = static_cast<long>(rng() % 21) - 10;
        } while (mod_reduce(r0, p) == 0);
        c[0] = p * r0;
        c[static_cast<std::size_t>(deg)] = 1;
        IntPolynomial f(std::move(c));
        if (ore_p_divides_index(f, p) || dedekind_p_divides_index(f, p)) return false;
    }
    return true;
}

bool criterion_3_discriminant_formula()
{
    std::mt19937_64 rng(103);
    for (int i = 0; i < 1000; ++i) {
        unsigned n = 2 + static_cast<unsigned>(rng() % 8);
        unsigned k = 1 + static_cast<unsigned>(rng() % (n - 1));
        Integer a = static_cast<long>(rng() % 101) - 50;
        Integer b = static_cast<long>(rng() % 101) - 50;
        if (trinomial_discriminant(n, k, a, b) != discriminant(IntPolynomial::trinomial(n, k, a, b)))
            return false;
    }
    return true;
}

bool criterion_4_hensel_lists()
{
    // x^5 + ax + b with 5 | a, 5 not | b: 5 divides the index exactly when
    // the quintuple root of f mod 5 lifts to a root mod 25, and the
    // closed-form list says that happens iff b is in
    // {1+a, 7+2a, 18+3a, 24+4a} mod 25.
    for (long a : {0L, 5L, 10L, 15L, 20L}) {
        std::set<long> derived, expected;
        for (long b = 0; b < 25; ++b) {
            if (b % 5 == 0) continue;
            if (!hensel_lift_roots(IntPolynomial::trinomial(5, 1, a, b), 5, 2).empty())
                derived.insert(b);
        }
        for (long m : {1 + a, 7 + 2 * a, 18 + 3 * a, 24 + 4 * a})
            expected.insert(((m % 25) + 25) % 25);
        if (derived != expected) return false;
    }

    // x^5 + cx^4 + d with 5 | c, 5 not | d: bad exactly when c + d is in
    // {1, 7, 18, 24} mod 25.
    for (long c : {0L, 5L, 10L, 15L, 20L}) {
        std::set<long> derived, expected;
        for (long d = 0; d < 25; ++d) {
            if (d % 5 == 0) continue;
            if (!hensel_lift_roots(IntPolynomial::trinomial(5, 4, c, d), 5, 2).empty())
                derived.insert(d);
        }
        for (long m : {1 - c, 7 - c, 18 - c, 24 - c}) expected.insert(((m % 25) + 25) % 25);
        if (derived != expected) return false;
    }

    // x^6 + ax + b with 3 | a, 3 not | b: the bad (a,b) classes mod 9,
    // re-derived with the polygon engine and confirmed by Dedekind.  The
    // engines are only comparable on irreducible representatives, so lift
    // each class until one is found.
    std::set<std::pair<long, long>> derived9, expected9 = {{0, 1}, {0, 8}, {3, 2},
                                                          {3, 5}, {6, 2}, {6, 5}};
    for (long a : {0L, 3L, 6L}) {
        for (long b = 0; b < 9; ++b) {
            if (b % 3 == 0) continue;
            IntPolynomial f;
            bool found = false;
            for (long da = 0; da <= 45 && !found; da += 9) {
                for (long db = 0; db <= 45 && !found; db += 9) {
                    f = IntPolynomial::trinomial(6, 1, a + da, b + db);
                    found = is_irreducible_over_Q(f);
                }
            }
            if (!found) return false;
            bool bad = ore_p_divides_index(f, 3);
            if (bad != dedekind_p_divides_index(f, 3)) return false;
            if (bad) derived9.insert({a, b});
        }
    }
    return derived9 == expected9;
}

bool criterion_5_theorem_vs_engine(std::uint64_t& disagreements, std::uint64_t& compared)
{
    Effort effort;
    effort.rho_iterations = 1u << 20;
    for (Family fam : {Family::QuinticLinear, Family::SexticLinear, Family::QuinticNM1,
                       Family::SexticNM1}) {
        for (long u = -150; u <= 150; ++u) {
            for (long v = -150; v <= 150; ++v) {
                TheoremCheck tc;
                try {
                    tc = theorem_check(fam, u, v, effort);
                } catch (const std::domain_error&) {
                    continue;
                }
                if (!tc.applies) continue;
                MonogenicityVerdict mv = certify_generator(family_polynomial(fam, u, v), effort);
                ++compared;
                bool ok = (tc.monogenic == TriState::True && mv.outcome == Outcome::Generator) ||
                          (tc.monogenic == TriState::False && mv.outcome == Outcome::NotGenerator);
                if (!ok) {
                    ++disagreements;
                    std::cerr << "  disagreement: " << render_polynomial(mv.polynomial)
                              << " theorem=" << static_cast<int>(tc.monogenic)
                              << " certify=" << static_cast<int>(mv.outcome) << "\n";
                }
            }
        }
    }
    return disagreements == 0;
}

double pct_generator(const SurveyRow& row)
{
    return row.total == 0 ? 0.0 : 100.0 * static_cast<double>(row.theta_generator) /
                                       static_cast<double>(row.total);
}

bool criterion_6_table(std::string& detail)
{
    Effort effort;
    effort.rho_iterations = 1u << 20;

    SurveySpec cd;
    cd.family = SurveyFamily::QuinticCD;
    cd.fixed_c = 4;
    cd.min1 = -2000;
    cd.max1 = 2000;
    cd.effort = effort;
    SurveyRow cd_row = empirical_survey(cd);
    bool ok_a = cd_row.theta_generator == 0;

    SurveySpec q5;
    q5.family = SurveyFamily::QuinticBB;
    q5.min1 = -20000;
    q5.max1 = 20000;
    q5.effort = effort;
    double p5 = pct_generator(empirical_survey(q5));
    bool ok_b = std::abs(p5 - 50.50) <= 1.5;

    SurveySpec q6;
    q6.family = SurveyFamily::SexticBB;
    q6.min1 = -20000;
    q6.max1 = 20000;
    q6.effort = effort;
    double p6 = pct_generator(empirical_survey(q6));
    bool ok_c = std::abs(p6 - 57.71) <= 1.5;

    SurveySpec ab;
    ab.family = SurveyFamily::QuinticLinear;
    ab.min1 = -150;
    ab.max1 = 150;
    ab.range2 = std::make_pair(-150L, 150L);
    ab.effort = effort;
    double pab = pct_generator(empirical_survey(ab));
    bool ok_d = std::abs(pab - 60.86) <= 2.0;

    detail = " [cd=" + std::to_string(cd_row.theta_generator) + ", bb5=" + std::to_string(p5) +
             ", bb6=" + std::to_string(p6) + ", ab5=" + std::to_string(pab) + "]";
    return ok_a && ok_b && ok_c && ok_d;
}

bool criterion_7_density_constants()
{
    for (int n = 3; n <= 100; ++n)
        if (!(bound_linear_family(n).approx > 0.2158)) return false;
    if (std::abs(bound_nminus1_family(97, 2).approx - 0.013) > 1e-3) return false;
    if (std::abs(bound_nminus1_family(97, 35).approx - 0.051) > 1e-3) return false;
    const double pi2 = 9.869604401089358;
    for (int n = 3; n <= 100; ++n) {
        double b1 = heuristic_independence_bounds(n, Integer(2)).first.approx;
        if (!(b1 >= 27.0 / (pi2 * pi2) - 1e-12 && b1 <= 6.0 / pi2 + 1e-12)) return false;
    }
    std::mt19937_64 rng(107);
    for (int i = 0; i < 100; ++i) {
        int n = 3 + static_cast<int>(rng() % 98);
        Integer c;
        do {
            c = static_cast<long>(rng() % 2001) - 1000;
        } while (c == 0 || c == 1 || c == -1 || is_squarefree(c) != TriState::True);
        double b2 = heuristic_independence_bounds(n, c).second.approx;
        if (!(b2 <= 72.0 / (pi2 * pi2) + 1e-12)) return false;
    }
    return true;
}

long brute_lattice_count(const PrincipalPolygon& poly)
{
    if (poly.vertices.size() < 2) return 0;
    long count = 0;
    for (std::size_t s = 0; s + 1 < poly.vertices.size(); ++s) {
        auto [x1, y1] = poly.vertices[s];
        auto [x2, y2] = poly.vertices[s + 1];
        for (long m = x1 + 1; m <= x2; ++m) {
            if (m < 1) continue;
            for (long nn = 1; nn <= y1; ++nn) {
                // on or under the segment: (nn - y1)(x2 - x1) <= (m - x1)(y2 - y1)
                if (static_cast<long long>(nn - y1) * (x2 - x1) <=
                    static_cast<long long>(m - x1) * (y2 - y1))
                    ++count;
            }
        }
    }
    return count;
}

bool criterion_8_polygon_oracle()
{
    std::mt19937_64 rng(108);
    const long ps[] = {2, 3, 5, 7};
    for (int i = 0; i < 1000; ++i) {
        Integer p(ps[i % 4]);
        // Random development: coefficients p^v * u with u coprime to p,
        // valuations <= 20, occasional zero coefficients.
        int len = 3 + static_cast<int>(rng() % 8);
        PhiDevelopment dev;
        dev.phi = parse_polynomial("x");
        for (int j = 0; j < len; ++j) {
            if (j > 0 && j + 1 < len && rng() % 5 == 0) {
                dev.coefficients.push_back(IntPolynomial{});
                continue;
            }
            unsigned v = static_cast<unsigned>(rng() % 21);
            long unit = static_cast<long>(rng() % 9) + 1;
            while (mod_reduce(unit, p) == 0) ++unit;
            dev.coefficients.push_back(IntPolynomial::constant(pow_ui(p, v) * unit));
        }
        PrincipalPolygon poly = principal_polygon(dev, p);
        if (phi_index(poly) != brute_lattice_count(poly)) return false;
    }
    return true;
}

bool criterion_9_determinism()
{
    SurveySpec spec;
    spec.family = SurveyFamily::QuinticLinear;
    spec.min1 = -25;
    spec.max1 = 25;
    spec.range2 = std::make_pair(-25L, 25L);
    spec.seed = 7;
    std::string base;
    for (unsigned jobs : {1u, 2u, 3u, 8u}) {
        spec.jobs = jobs;
        std::string csv = survey_csv_header() + "\n" + survey_csv_row(empirical_survey(spec)) + "\n";
        if (base.empty())
            base = csv;
        else if (csv != base)
            return false;
    }
    SurveySpec bb;
    bb.family = SurveyFamily::SexticBB;
    bb.min1 = -300;
    bb.max1 = 300;
    bb.seed = 7;
    base.clear();
    for (unsigned jobs : {1u, 4u}) {
        bb.jobs = jobs;
        std::string csv = survey_csv_row(empirical_survey(bb));
        if (base.empty())
            base = csv;
        else if (csv != base)
            return false;
    }
    return true;
}

int report(int n, const char* what, bool ok, const std::string& extra = "")
{
    std::cout << "criterion " << n << " (" << what << "): " << (ok ? "PASS" : "FAIL") << extra
              << std::endl;
    return ok ? 0 : 1;
}

}  // namespace

int main()
{
    using clock = std::chrono::steady_clock;
    int failures = 0;
    auto timed = [&](int n, const char* what, auto&& fn, const std::string& extra = "") {
        auto t0 = clock::now();
        bool ok = fn();
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
        failures += report(n, what, ok, extra + " [" + std::to_string(secs) + "s]");
    };

    timed(1, "engine equivalence on random irreducibles", criterion_1_engine_equivalence);
    timed(2, "Eisenstein polynomials have unit index at p", criterion_2_eisenstein);
    timed(3, "trinomial discriminant closed form", criterion_3_discriminant_formula);
    timed(4, "mod-25 and mod-9 exception lists", criterion_4_hensel_lists);
    {
        auto t0 = clock::now();
        std::uint64_t dis = 0, cmp = 0;
        bool ok = criterion_5_theorem_vs_engine(dis, cmp);
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
        failures += report(5, "closed-form theorems vs certifier", ok,
                           " [" + std::to_string(cmp) + " compared, " + std::to_string(dis) +
                               " disagreements, " + std::to_string(secs) + "s]");
    }
    {
        auto t0 = clock::now();
        std::string detail;
        bool ok = criterion_6_table(detail);
        auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
        failures += report(6, "percentage table reproduction", ok,
                           detail + " [" + std::to_string(secs) + "s]");
    }
    timed(7, "density constants", criterion_7_density_constants);
    timed(8, "phi-index vs brute-force lattice count", criterion_8_polygon_oracle);
    timed(9, "survey determinism across worker counts", criterion_9_determinism);

    return failures;
}
