#pragma once

#include "ratfield/bigrational.hpp"
#include "ratfield/errors.hpp"
#include "ratfield/gcd.hpp"
#include "ratfield/identity_test.hpp"
#include "ratfield/laurent_monomial.hpp"
#include "ratfield/monomial.hpp"
#include "ratfield/parser.hpp"
#include "ratfield/polynomial.hpp"
#include "ratfield/rational_function.hpp"
#include "ratfield/variables.hpp"
