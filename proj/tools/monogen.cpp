// Command-line front end: single-polynomial certification, closed-form
// family checks, range surveys, density bounds, and Ore-vs-Dedekind
// differential testing.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "monogen/monogen.hpp"
#include "monogen/report.hpp"

namespace {

constexpr int kExitGenerator = 0;
constexpr int kExitNotGenerator = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

monogen::Effort effort_for(std::uint64_t scale, std::uint64_t seed)
{
    monogen::Effort e;
    e.rho_iterations = scale * (1ull << 21);
    e.seed = seed;
    return e;
}

std::optional<std::pair<monogen::Integer, monogen::Integer>> parse_coeff_pair(const std::string& s)
{
    auto comma = s.find(',');
    if (comma == std::string::npos) return std::nullopt;
    try {
        return std::make_pair(monogen::Integer(s.substr(0, comma)),
                              monogen::Integer(s.substr(comma + 1)));
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

int run_check(const std::string& poly_text, const std::string& family_name,
              const std::string& coeffs, std::uint64_t effort_scale, std::uint64_t seed,
              bool json)
{
    monogen::IntPolynomial f;
    try {
        if (!poly_text.empty()) {
            f = monogen::parse_polynomial(poly_text);
        } else {
            auto fam = monogen::survey_family_from_name(family_name);
            auto ab = parse_coeff_pair(coeffs);
            if (!fam || !ab || monogen::survey_family_fixed_c(*fam) ||
                !monogen::survey_family_two_param(*fam)) {
                std::cerr << "check: need --poly or a two-parameter --family with --coeffs a,b\n";
                return kExitUsage;
            }
            monogen::Family tf;
            switch (*fam) {
                case monogen::SurveyFamily::QuinticLinear: tf = monogen::Family::QuinticLinear; break;
                case monogen::SurveyFamily::SexticLinear: tf = monogen::Family::SexticLinear; break;
                case monogen::SurveyFamily::QuinticNM1: tf = monogen::Family::QuinticNM1; break;
                default: tf = monogen::Family::SexticNM1; break;
            }
            f = monogen::family_polynomial(tf, ab->first, ab->second);
        }
    } catch (const monogen::ParseError& e) {
        std::cerr << "check: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        monogen::MonogenicityVerdict v = monogen::certify_generator(f, effort_for(effort_scale, seed));
        if (json) {
            std::cout << monogen::verdict_to_json(v).dump(2) << "\n";
        } else {
            std::cout << "polynomial: " << monogen::render_polynomial(v.polynomial) << "\n";
            std::cout << "irreducible: " << (v.irreducible ? "yes" : "no") << "\n";
            std::cout << "discriminant: " << v.discriminant.get_str() << "\n";
            for (const auto& pt : v.tested_primes)
                std::cout << "  p=" << pt.p.get_str() << " divides_index="
                          << (pt.divides_index ? "yes" : "no")
                          << " engines_agree=" << (pt.agreement ? "yes" : "no") << "\n";
            if (v.unknown_cofactor != 1)
                std::cout << "unfactored cofactor: " << v.unknown_cofactor.get_str() << "\n";
            std::cout << "outcome: " << monogen::outcome_name(v.outcome) << "\n";
        }
        switch (v.outcome) {
            case monogen::Outcome::Generator: return kExitGenerator;
            case monogen::Outcome::NotGenerator: return kExitNotGenerator;
            case monogen::Outcome::Unknown: return kExitUnknown;
        }
        return kExitUnknown;
    } catch (const std::exception& e) {
        std::cerr << "check: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run_survey(const std::string& family_name, std::optional<long> fixed_c,
               std::optional<long> min1, std::optional<long> max1, std::optional<long> min2,
               std::optional<long> max2, std::uint64_t seed, unsigned jobs,
               const std::string& out_path, bool irreducible_denominator)
{
    auto fam = monogen::survey_family_from_name(family_name);
    if (!fam) {
        std::cerr << "survey: unknown family '" << family_name << "'\n";
        return kExitUsage;
    }
    if (!min1 || !max1 || *max1 < *min1) {
        std::cerr << "survey: need a nonempty --min/--max range\n";
        return kExitUsage;
    }
    monogen::SurveySpec spec;
    spec.family = *fam;
    spec.min1 = *min1;
    spec.max1 = *max1;
    spec.seed = seed;
    spec.jobs = jobs;
    spec.irreducible_denominator = irreducible_denominator;
    if (monogen::survey_family_two_param(*fam)) {
        if (!min2 || !max2 || *max2 < *min2) {
            std::cerr << "survey: family '" << family_name << "' needs --min2/--max2\n";
            return kExitUsage;
        }
        spec.range2 = std::make_pair(*min2, *max2);
    }
    if (monogen::survey_family_fixed_c(*fam)) {
        if (!fixed_c) {
            std::cerr << "survey: family '" << family_name << "' needs --fixed c\n";
            return kExitUsage;
        }
        spec.fixed_c = monogen::Integer(*fixed_c);
    }

    monogen::SurveyRow row = monogen::empirical_survey(spec);
    std::string csv = monogen::survey_csv_header() + "\n" + monogen::survey_csv_row(row) + "\n";
    if (out_path.empty() || out_path == "-") {
        std::cout << csv;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "survey: cannot open " << out_path << "\n";
            return kExitUsage;
        }
        out << csv;
    }
    return 0;
}

int run_density(const std::string& family, int n, std::optional<long> c, bool heuristic)
{
    try {
        auto print = [](const std::string& label, const monogen::DensityValue& v) {
            std::ostringstream os;
            os.setf(std::ios::fixed);
            os.precision(6);
            os << v.approx;
            std::cout << label << " = " << os.str() << "  (" << v.describe() << ")\n";
        };
        if (family == "linear-bb") {
            print("bound", monogen::bound_linear_family(n));
            if (heuristic) {
                auto [b1, b2] = monogen::heuristic_independence_bounds(
                    n, c ? std::optional<monogen::Integer>(monogen::Integer(*c))
                         : std::optional<monogen::Integer>(monogen::Integer(2)));
                print("B1", b1);
            }
        } else if (family == "nm1") {
            if (!c) {
                std::cerr << "density: family nm1 needs --c\n";
                return kExitUsage;
            }
            print("bound", monogen::bound_nminus1_family(n, monogen::Integer(*c)));
            if (heuristic) {
                auto [b1, b2] = monogen::heuristic_independence_bounds(
                    n, std::optional<monogen::Integer>(monogen::Integer(*c)));
                print("B1", b1);
                print("B2", b2);
            }
        } else {
            std::cerr << "density: unknown family '" << family << "'\n";
            return kExitUsage;
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "density: " << e.what() << "\n";
        return kExitUsage;
    }
}

// Fixed differential corpus: the worked quintic/sextic examples plus a few
// classics with nontrivial index behavior.
const char* kXcheckCorpus[] = {
    "x^5+2x+2", "x^5+2x+4", "x^5+5x+31", "x^5+4x^4+8", "x^5+2", "x^2+3",
    "x^6+2x+2", "x^6+3x+3", "x^5+5x^4+21", "x^6+4x^5+4", "x^3+x+1", "x^4+8x+12",
};

int run_xcheck(std::uint64_t count, int degree_max, long coeff_max, std::uint64_t seed)
{
    std::uint64_t mismatches = 0, tested = 0;
    auto compare_on = [&](const monogen::IntPolynomial& f) {
        monogen::Integer disc = monogen::discriminant(f);
        if (disc == 0) return;
        std::vector<monogen::Integer> primes;
        monogen::Factorization fd = monogen::factorize(disc, effort_for(4, seed));
        for (const auto& pp : fd.factors)
            if (pp.exponent >= 2) primes.push_back(pp.prime);
        for (const auto& p : primes) {
            bool ore = monogen::ore_p_divides_index(f, p, seed);
            bool ded = monogen::dedekind_p_divides_index(f, p);
            ++tested;
            if (ore != ded) {
                ++mismatches;
                std::cout << "MISMATCH poly=" << monogen::render_polynomial(f)
                          << " p=" << p.get_str() << " ore=" << ore << " dedekind=" << ded << "\n";
            }
        }
    };

    for (const char* text : kXcheckCorpus) {
        monogen::IntPolynomial f = monogen::parse_polynomial(text);
        if (monogen::is_irreducible_over_Q(f)) compare_on(f);
    }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> deg_dist(2, degree_max);
    std::uniform_int_distribution<long> coef_dist(-coeff_max, coeff_max);
    for (std::uint64_t i = 0; i < count; ++i) {
        monogen::IntPolynomial f;
        do {
            int d = deg_dist(rng);
            std::vector<monogen::Integer> c(static_cast<std::size_t>(d) + 1);
            for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j)] = coef_dist(rng);
            c[static_cast<std::size_t>(d)] = 1;
            f = monogen::IntPolynomial(std::move(c));
        } while (f.degree() < 2 || !monogen::is_irreducible_over_Q(f));
        compare_on(f);
    }
    std::cout << "xcheck: " << tested << " prime tests, " << mismatches << " disagreements\n";
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"monogenic trinomial certifier"};
    app.require_subcommand(1);

    std::string poly_text, family, coeffs, out_path = "-";
    std::uint64_t effort_scale = 1, seed = 1, count = 1000;
    unsigned jobs = 1;
    bool json = false, heuristic = false, irreducible_denominator = false;
    int n = 5, degree_max = 6;
    long coeff_max = 30;
    std::optional<long> fixed_c, min1, max1, min2, max2, cval;

    auto* check = app.add_subcommand("check", "certify one polynomial");
    check->add_option("--poly", poly_text, "polynomial text, e.g. \"x^5+2x+2\"");
    check->add_option("--family", family, "two-parameter family name");
    check->add_option("--coeffs", coeffs, "coefficients a,b for --family");
    check->add_option("--effort", effort_scale, "factorization effort multiplier");
    check->add_option("--seed", seed, "seed for randomized subroutines");
    check->add_flag("--json", json, "machine-readable verdict");

    auto* survey = app.add_subcommand("survey", "scan a coefficient range, emit CSV");
    survey->add_option("--family", family)->required();
    survey->add_option("--fixed", fixed_c, "fixed c for the *-cd families");
    survey->add_option("--min", min1);
    survey->add_option("--max", max1);
    survey->add_option("--min2", min2);
    survey->add_option("--max2", max2);
    survey->add_option("--seed", seed);
    survey->add_option("--jobs", jobs, "worker threads");
    survey->add_option("--out", out_path, "output path or -");
    survey->add_flag("--irreducible-denominator", irreducible_denominator,
                     "percentages among irreducible members only");

    auto* density = app.add_subcommand("density", "closed-form density bounds");
    density->add_option("--family", family)->required();
    density->add_option("-n", n, "degree");
    density->add_option("--c", cval, "coefficient c for the nm1 bound");
    density->add_flag("--heuristic", heuristic, "also print B1/B2");

    auto* xcheck = app.add_subcommand("xcheck", "Ore vs Dedekind differential test");
    xcheck->add_option("--count", count);
    xcheck->add_option("--degree-max", degree_max);
    xcheck->add_option("--coeff-max", coeff_max);
    xcheck->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (check->parsed()) {
        if (poly_text.empty() && family.empty()) {
            std::cerr << "check: need --poly or --family\n";
            return kExitUsage;
        }
        return run_check(poly_text, family, coeffs, effort_scale, seed, json);
    }
    if (survey->parsed())
        return run_survey(family, fixed_c, min1, max1, min2, max2, seed, jobs, out_path,
                          irreducible_denominator);
    if (density->parsed()) return run_density(family, n, cval, heuristic);
    if (xcheck->parsed()) return run_xcheck(count, degree_max, coeff_max, seed);
    return kExitUsage;
}
