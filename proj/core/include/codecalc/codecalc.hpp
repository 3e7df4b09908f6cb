#pragma once

#include "codecalc/bernstein.hpp"
#include "codecalc/codes.hpp"
#include "codecalc/errors.hpp"
#include "codecalc/index.hpp"
#include "codecalc/oracle.hpp"
#include "codecalc/polynomial.hpp"
#include "codecalc/qvertex.hpp"
#include "codecalc/rewrite.hpp"
#include "codecalc/shifted.hpp"
