#pragma once

/// Umbrella header: everything needed to go from a generator list to a
/// rendered saturation report.

#include "lipsat/bivariate_polynomial.hpp"
#include "lipsat/error.hpp"
#include "lipsat/report.hpp"
#include "lipsat/saturation.hpp"
#include "lipsat/semigroup.hpp"
#include "lipsat/types.hpp"
#include "lipsat/univariate_polynomial.hpp"
#include "lipsat/witness.hpp"
