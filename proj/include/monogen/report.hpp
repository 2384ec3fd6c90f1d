#ifndef MONOGEN_REPORT_HPP
#define MONOGEN_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "monogen/monogenic.hpp"
#include "monogen/poly.hpp"

namespace monogen {

inline std::string outcome_name(Outcome o)
{
    switch (o) {
        case Outcome::Generator: return "Generator";
        case Outcome::NotGenerator: return "NotGenerator";
        case Outcome::Unknown: return "Unknown";
    }
    return "Unknown";
}

// Machine-readable verdict record.  Key order is fixed so output is
// byte-stable for a given input.
inline nlohmann::ordered_json verdict_to_json(const MonogenicityVerdict& v)
{
    nlohmann::ordered_json j;
    j["poly"] = render_polynomial(v.polynomial);
    j["irreducible"] = v.irreducible;
    j["disc"] = v.discriminant.get_str();
    nlohmann::ordered_json primes = nlohmann::ordered_json::array();
    for (const auto& pt : v.tested_primes) {
        nlohmann::ordered_json e;
        e["p"] = pt.p.get_str();
        e["divides_index"] = pt.divides_index;
        e["methods_agree"] = pt.agreement;
        primes.push_back(e);
    }
    j["primes"] = primes;
    j["outcome"] = outcome_name(v.outcome);
    j["unknown_cofactor"] = v.unknown_cofactor.get_str();
    return j;
}

}  // namespace monogen

#endif
