#pragma once

#include "fuzzylap/closed_form.hpp"
#include "fuzzylap/enumerate.hpp"
#include "fuzzylap/errors.hpp"
#include "fuzzylap/fuzzy_number.hpp"
#include "fuzzylap/laplace.hpp"
#include "fuzzylap/polynomial.hpp"
#include "fuzzylap/problem.hpp"
#include "fuzzylap/problem_file.hpp"
#include "fuzzylap/solver.hpp"
#include "fuzzylap/validate.hpp"
