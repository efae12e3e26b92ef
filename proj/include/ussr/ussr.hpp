#pragma once

// Umbrella header: exact sign decisions for signed sums of square roots of
// small integers, plus the two polynomial-size advice constructions (integer
// threshold weights and the lightest basis with dyadic approximations) and
// the harness that verifies advice against the exact oracle.

#include "ussr/advice_basis.hpp"
#include "ussr/advice_io.hpp"
#include "ussr/advice_ltf.hpp"
#include "ussr/dyadic.hpp"
#include "ussr/errors.hpp"
#include "ussr/instance.hpp"
#include "ussr/instance_io.hpp"
#include "ussr/linalg.hpp"
#include "ussr/min_gap.hpp"
#include "ussr/numbers.hpp"
#include "ussr/numtheory.hpp"
#include "ussr/oracle.hpp"
#include "ussr/simplex.hpp"
#include "ussr/verify.hpp"
