#pragma once

// Prime fields, F_q[X] arithmetic, order and primitivity of polynomials.

#include "errors.hpp"
#include "factorization.hpp"
#include "integer.hpp"
#include "poly_text.hpp"
#include "polynomial.hpp"
#include "prime_field.hpp"
