#ifndef MONOGEN_MONOGEN_HPP
#define MONOGEN_MONOGEN_HPP

#include "monogen/integer.hpp"
#include "monogen/primes.hpp"
#include "monogen/factor.hpp"
#include "monogen/poly.hpp"
#include "monogen/modpoly.hpp"
#include "monogen/factor_mod_p.hpp"
#include "monogen/resultant.hpp"
#include "monogen/hensel.hpp"
#include "monogen/irreducible.hpp"
#include "monogen/polygon.hpp"
#include "monogen/dedekind.hpp"
#include "monogen/monogenic.hpp"
#include "monogen/density.hpp"
#include "monogen/survey.hpp"

#endif
