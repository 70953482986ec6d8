#pragma once

// Umbrella header: all roots of the reduced trinomial x^N - x + t = 0 via
// the inversion series, its hypergeometric decomposition, closed forms for
// N = 2, 3, 5, and the Durand-Kerner oracle.

#include "trinomial/closed_forms.hpp"
#include "trinomial/config.hpp"
#include "trinomial/decomposition.hpp"
#include "trinomial/errors.hpp"
#include "trinomial/lagrange_series.hpp"
#include "trinomial/oracle.hpp"
#include "trinomial/problem.hpp"
#include "trinomial/rational.hpp"
#include "trinomial/special_functions.hpp"
#include "trinomial/types.hpp"
