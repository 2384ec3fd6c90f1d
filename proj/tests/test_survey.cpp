#include <catch_amalgamated.hpp>

#include "monogen/survey.hpp"

using namespace monogen;

TEST_CASE("percentage rendering rounds half up to hundredths")
{
    CHECK(percentage_string(1, 2) == "50.00");
    CHECK(percentage_string(0, 7) == "0.00");
    CHECK(percentage_string(7, 7) == "100.00");
    CHECK(percentage_string(1, 3) == "33.33");
    CHECK(percentage_string(2, 3) == "66.67");
    CHECK(percentage_string(1, 800) == "0.13");  // 0.125 rounds up
    CHECK(percentage_string(0, 0) == "0.00");
}

TEST_CASE("family names round-trip")
{
    for (SurveyFamily f : {SurveyFamily::QuinticLinear, SurveyFamily::SexticLinear,
                           SurveyFamily::QuinticNM1, SurveyFamily::SexticNM1,
                           SurveyFamily::QuinticBB, SurveyFamily::SexticBB,
                           SurveyFamily::QuinticCD, SurveyFamily::SexticCD})
        CHECK(survey_family_from_name(survey_family_name(f)) == f);
    CHECK_FALSE(survey_family_from_name("no-such-family").has_value());
}

TEST_CASE("single-point survey certifies x^5+2x+2")
{
    SurveySpec spec;
    spec.family = SurveyFamily::QuinticBB;
    spec.min1 = 2;
    spec.max1 = 2;
    SurveyRow row = empirical_survey(spec);
    CHECK(row.total == 1);
    CHECK(row.irreducible == 1);
    CHECK(row.theta_generator == 1);
    CHECK(survey_csv_row(row) == "quintic-bb,[2,2],1,1,1,100.00,1,100.00");
}

TEST_CASE("x^5+4x^4+4d members are never generators")
{
    SurveySpec spec;
    spec.family = SurveyFamily::QuinticCD;
    spec.fixed_c = 4;
    spec.min1 = -40;
    spec.max1 = 40;
    SurveyRow row = empirical_survey(spec);
    CHECK(row.total == 81);
    CHECK(row.theta_generator == 0);
    CHECK(row.hypothesis_ok == 0);
}

TEST_CASE("worker count does not change the counts")
{
    SurveySpec spec;
    spec.family = SurveyFamily::QuinticLinear;
    spec.min1 = -9;
    spec.max1 = 9;
    spec.range2 = std::make_pair(-9L, 9L);
    SurveyRow one = empirical_survey(spec);
    spec.jobs = 3;
    SurveyRow three = empirical_survey(spec);
    CHECK(survey_csv_row(one) == survey_csv_row(three));
    CHECK(one.total == 19 * 19);
    CHECK(one.param_range == "[-9,9]x[-9,9]");
}

TEST_CASE("invalid specs are rejected")
{
    SurveySpec spec;
    spec.family = SurveyFamily::QuinticLinear;
    spec.min1 = 0;
    spec.max1 = 1;
    CHECK_THROWS_AS(empirical_survey(spec), std::invalid_argument);  // missing range2
    spec.family = SurveyFamily::QuinticCD;
    CHECK_THROWS_AS(empirical_survey(spec), std::invalid_argument);  // missing fixed c
    spec.family = SurveyFamily::QuinticBB;
    spec.min1 = 5;
    spec.max1 = 4;
    CHECK_THROWS_AS(empirical_survey(spec), std::invalid_argument);  // empty range
}
