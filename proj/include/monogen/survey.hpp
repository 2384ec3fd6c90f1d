#ifndef MONOGEN_SURVEY_HPP
#define MONOGEN_SURVEY_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "monogen/integer.hpp"
#include "monogen/monogenic.hpp"

namespace monogen {

enum class SurveyFamily {
    QuinticLinear,  // x^5 + ax + b over (a, b)
    SexticLinear,   // x^6 + ax + b over (a, b)
    QuinticNM1,     // x^5 + cx^4 + d over (c, d)
    SexticNM1,      // x^6 + cx^5 + d over (c, d)
    QuinticBB,      // x^5 + bx + b over b
    SexticBB,       // x^6 + bx + b over b
    QuinticCD,      // x^5 + cx^4 + cd over d, fixed c
    SexticCD,       // x^6 + cx^5 + cd over d, fixed c
};

inline bool survey_family_two_param(SurveyFamily f)
{
    return f == SurveyFamily::QuinticLinear || f == SurveyFamily::SexticLinear ||
           f == SurveyFamily::QuinticNM1 || f == SurveyFamily::SexticNM1;
}

inline bool survey_family_fixed_c(SurveyFamily f)
{
    return f == SurveyFamily::QuinticCD || f == SurveyFamily::SexticCD;
}

inline std::string survey_family_name(SurveyFamily f)
{
    switch (f) {
        case SurveyFamily::QuinticLinear: return "quintic-linear";
        case SurveyFamily::SexticLinear: return "sextic-linear";
        case SurveyFamily::QuinticNM1: return "quintic-nm1";
        case SurveyFamily::SexticNM1: return "sextic-nm1";
        case SurveyFamily::QuinticBB: return "quintic-bb";
        case SurveyFamily::SexticBB: return "sextic-bb";
        case SurveyFamily::QuinticCD: return "quintic-cd";
        case SurveyFamily::SexticCD: return "sextic-cd";
    }
    throw std::logic_error("unreachable");
}

inline std::optional<SurveyFamily> survey_family_from_name(const std::string& s)
{
    for (SurveyFamily f :
         {SurveyFamily::QuinticLinear, SurveyFamily::SexticLinear, SurveyFamily::QuinticNM1,
          SurveyFamily::SexticNM1, SurveyFamily::QuinticBB, SurveyFamily::SexticBB,
          SurveyFamily::QuinticCD, SurveyFamily::SexticCD})
        if (survey_family_name(f) == s) return f;
    return std::nullopt;
}

struct SurveySpec {
    SurveyFamily family;
    long min1 = 0, max1 = 0;
    std::optional<std::pair<long, long>> range2;  // required for two-parameter families
    std::optional<Integer> fixed_c;               // required for *-cd families
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool irreducible_denominator = false;  // sensitivity switch for percentages
    Effort effort{};
};

struct SurveyRow {
    std::string family;
    std::string param_range;
    std::uint64_t total = 0;
    std::uint64_t irreducible = 0;
    std::uint64_t theta_generator = 0;
    std::uint64_t hypothesis_ok = 0;  // theorem hypotheses hold and certify monogenic
    std::uint64_t unknown = 0;
    bool irreducible_denominator = false;
};

// Exact round-half-up of 100*count/denom to hundredths, rendered "dd.dd".
inline std::string percentage_string(std::uint64_t count, std::uint64_t denom)
{
    if (denom == 0) return "0.00";
    unsigned long long hundredths = (count * 20000ull + denom) / (2ull * denom);
    std::string whole = std::to_string(hundredths / 100);
    std::string frac = std::to_string(hundredths % 100);
    if (frac.size() < 2) frac = "0" + frac;
    return whole + "." + frac;
}

namespace detail {

struct TupleCounts {
    std::uint64_t total = 0, irreducible = 0, generator = 0, hypothesis = 0, unknown = 0;
    void operator+=(const TupleCounts& o)
    {
        total += o.total;
        irreducible += o.irreducible;
        generator += o.generator;
        hypothesis += o.hypothesis;
        unknown += o.unknown;
    }
};

inline void survey_tuple(const SurveySpec& spec, const Integer& u, const Integer& v,
                         TupleCounts& acc)
{
    Family thm_family;
    Integer tu, tv;
    switch (spec.family) {
        case SurveyFamily::QuinticLinear: thm_family = Family::QuinticLinear; tu = u; tv = v; break;
        case SurveyFamily::SexticLinear: thm_family = Family::SexticLinear; tu = u; tv = v; break;
        case SurveyFamily::QuinticNM1: thm_family = Family::QuinticNM1; tu = u; tv = v; break;
        case SurveyFamily::SexticNM1: thm_family = Family::SexticNM1; tu = u; tv = v; break;
        case SurveyFamily::QuinticBB: thm_family = Family::QuinticLinear; tu = u; tv = u; break;
        case SurveyFamily::SexticBB: thm_family = Family::SexticLinear; tu = u; tv = u; break;
        case SurveyFamily::QuinticCD:
            thm_family = Family::QuinticNM1;
            tu = *spec.fixed_c;
            tv = *spec.fixed_c * u;
            break;
        case SurveyFamily::SexticCD:
            thm_family = Family::SexticNM1;
            tu = *spec.fixed_c;
            tv = *spec.fixed_c * u;
            break;
        default: throw std::logic_error("unreachable");
    }
    acc.total += 1;

    IntPolynomial f = family_polynomial(thm_family, tu, tv);
    try {
        MonogenicityVerdict verdict = certify_generator(f, spec.effort);
        if (verdict.irreducible) acc.irreducible += 1;
        if (verdict.outcome == Outcome::Generator) acc.generator += 1;
        if (verdict.outcome == Outcome::Unknown && verdict.irreducible) acc.unknown += 1;
    } catch (const std::domain_error&) {
        // zero polynomial discriminant: reducible, not a generator
    }
    try {
        TheoremCheck tc = theorem_check(thm_family, tu, tv, spec.effort);
        if (tc.applies && tc.monogenic == TriState::True) acc.hypothesis += 1;
    } catch (const std::domain_error&) {
        // degenerate family member: hypotheses cannot hold
    }
}

}  // namespace detail

// Deterministic scan of a coefficient box: counts are accumulated per
// fixed-size block and summed in block order, so the result is independent
// of the worker count.
inline SurveyRow empirical_survey(SurveySpec spec)
{
    spec.effort.seed = spec.seed;
    if (spec.max1 < spec.min1) throw std::invalid_argument("empirical_survey: empty range");
    if (survey_family_two_param(spec.family) && !spec.range2)
        throw std::invalid_argument("empirical_survey: family needs a second range");
    if (survey_family_fixed_c(spec.family) && !spec.fixed_c)
        throw std::invalid_argument("empirical_survey: family needs a fixed c");
    if (spec.range2 && spec.range2->second < spec.range2->first)
        throw std::invalid_argument("empirical_survey: empty range");

    const long lo = spec.min1, hi = spec.max1;
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    const std::uint64_t block_size = 64;
    const std::uint64_t blocks = (span + block_size - 1) / block_size;

    std::vector<detail::TupleCounts> partial(blocks);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (;;) {
            std::uint64_t b = next.fetch_add(1);
            if (b >= blocks) return;
            long from = lo + static_cast<long>(b * block_size);
            long to = std::min(hi, from + static_cast<long>(block_size) - 1);
            detail::TupleCounts counts;
            for (long x = from; x <= to; ++x) {
                if (spec.range2) {
                    for (long y = spec.range2->first; y <= spec.range2->second; ++y)
                        detail::survey_tuple(spec, Integer(x), Integer(y), counts);
                } else {
                    detail::survey_tuple(spec, Integer(x), Integer(0), counts);
                }
            }
            partial[b] = counts;
        }
    };

    unsigned jobs = std::max(1u, spec.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    detail::TupleCounts total;
    for (const auto& c : partial) total += c;

    SurveyRow row;
    row.family = survey_family_name(spec.family);
    {
        std::string r = "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
        if (spec.range2)
            r += "x[" + std::to_string(spec.range2->first) + "," +
                 std::to_string(spec.range2->second) + "]";
        if (spec.fixed_c) r = "c=" + spec.fixed_c->get_str() + ";" + r;
        row.param_range = r;
    }
    row.total = total.total;
    row.irreducible = total.irreducible;
    row.theta_generator = total.generator;
    row.hypothesis_ok = total.hypothesis;
    row.unknown = total.unknown;
    row.irreducible_denominator = spec.irreducible_denominator;
    return row;
}

inline std::string survey_csv_header()
{
    return "family,param_range,total,irreducible,theta_generator,pct_generator,hypothesis_ok,"
           "pct_hypothesis";
}

inline std::string survey_csv_row(const SurveyRow& row)
{
    std::uint64_t denom = row.irreducible_denominator ? row.irreducible : row.total;
    return row.family + "," + row.param_range + "," + std::to_string(row.total) + "," +
           std::to_string(row.irreducible) + "," + std::to_string(row.theta_generator) + "," +
           percentage_string(row.theta_generator, denom) + "," +
           std::to_string(row.hypothesis_ok) + "," +
           percentage_string(row.hypothesis_ok, denom);
}

}  // namespace monogen

#endif
