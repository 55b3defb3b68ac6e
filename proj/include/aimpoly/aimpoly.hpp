#pragma once

#include "aimpoly/error.hpp"
#include "aimpoly/scalar.hpp"
#include "aimpoly/polynomial.hpp"
#include "aimpoly/gcd.hpp"
#include "aimpoly/rational_function.hpp"
#include "aimpoly/tower.hpp"
#include "aimpoly/roots.hpp"
#include "aimpoly/linalg.hpp"
#include "aimpoly/aim.hpp"
#include "aimpoly/solution.hpp"
#include "aimpoly/expr.hpp"
#include "aimpoly/catalog.hpp"
#include "aimpoly/json_io.hpp"
