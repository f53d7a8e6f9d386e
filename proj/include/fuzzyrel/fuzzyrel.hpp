#pragma once

#include "fuzzyrel/errors.hpp"
#include "fuzzyrel/lattice.hpp"
#include "fuzzyrel/ineq_solver.hpp"
#include "fuzzyrel/consistency.hpp"
#include "fuzzyrel/chebyshev.hpp"
#include "fuzzyrel/minmax_dual.hpp"
#include "fuzzyrel/learning.hpp"
#include "fuzzyrel/rules.hpp"
#include "fuzzyrel/oracle.hpp"
