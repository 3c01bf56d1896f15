#pragma once

#include "census.hpp"
#include "cubic_residue.hpp"
#include "eisenstein.hpp"
#include "f3.hpp"
#include "factorization.hpp"
#include "heuristics.hpp"
#include "integer.hpp"
#include "pell_oracle.hpp"
#include "redei.hpp"
