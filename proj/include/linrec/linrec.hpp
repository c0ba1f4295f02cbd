#pragma once

#include "linrec/errors.hpp"
#include "linrec/filtration.hpp"
#include "linrec/genfun.hpp"
#include "linrec/hopf_checks.hpp"
#include "linrec/normal_form.hpp"
#include "linrec/polynomial.hpp"
#include "linrec/roots.hpp"
#include "linrec/scalar.hpp"
#include "linrec/sequence.hpp"
