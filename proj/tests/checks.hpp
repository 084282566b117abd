#pragma once

#include <cmath>

#include "doctest.h"

// Absolute-tolerance comparison; doctest's Approx is relative, which is the
// wrong tool for values frozen near zero.
#define CHECK_NEAR(a, b, tol) CHECK(std::abs((a) - (b)) <= (tol))
