#pragma once

#include "mulint/branch.hpp"
#include "mulint/curve.hpp"
#include "mulint/errors.hpp"
#include "mulint/expr.hpp"
#include "mulint/fixtures.hpp"
#include "mulint/integrate.hpp"
#include "mulint/multivalued.hpp"
#include "mulint/quadrature.hpp"
#include "mulint/starcalc.hpp"
#include "mulint/verify.hpp"
